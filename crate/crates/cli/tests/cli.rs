use std::process::{Command, Output};

use serde_json::Value;

fn minuscule(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minuscule")).args(args).env_remove("MINUSCULE_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn verify_table1_with_rank_cap() {
    let out = minuscule(&["verify", "table1", "--max-rank", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 4 + 3 + 4 + 3 + 5);
    for r in reports {
        assert_eq!(r["status"], "pass", "{r}");
        for key in ["claim", "expected", "computed", "anchor", "seed"] {
            assert!(r.get(key).is_some(), "{key} missing from {r}");
        }
    }
    assert!(reports.iter().all(|r| !r["claim"].as_str().unwrap().ends_with("B6")));
}

#[test]
fn unknown_type_is_usage_error() {
    let out = minuscule(&["root-system", "Z9"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "unknown type");
    assert_eq!(v["input"], "Z9");
}

#[test]
fn bad_arguments_exit_two_with_json() {
    for args in [&["verify", "table9"][..], &["embed", "sl3", "A3"], &["root-system", "B9"], &["frobnicate"]] {
        let out = minuscule(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(json(&out).get("error").is_some(), "{args:?}");
    }
}

#[test]
fn root_system_payload() {
    let v = json(&minuscule(&["root-system", "E8"]));
    assert_eq!(v["highest_root"], serde_json::json!([2, 3, 4, 6, 5, 4, 3, 2]));
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 120);
}

#[test]
fn quartic_from_file_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("vector.json");
    std::fs::write(&w, r#"{"e+[0,0,0,0,0,0,0,1]": "1", "e+[2,3,4,6,5,4,3,1]": "1"}"#).unwrap();
    let w2 = dir.path().join("doubled.json");
    std::fs::write(&w2, r#"{"e+[0,0,0,0,0,0,0,1]": "2", "e+[2,3,4,6,5,4,3,1]": "2"}"#).unwrap();
    let arg = format!("@{}", w.display());
    let q = json(&minuscule(&["eval", "quartic", "E8", "--w", &arg]))["q"].as_str().unwrap().to_string();
    assert_ne!(q, "0");
    let q2 = json(&minuscule(&["eval", "quartic", "E8", "--w", &format!("@{}", w2.display())]));
    let q: i64 = q.parse().unwrap();
    assert_eq!(q2["q"], (16 * q).to_string());

    let target = dir.path().join("q.json");
    let out = minuscule(&["eval", "quartic", "E8", "--w", &arg, "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["q"], q.to_string());
}

#[test]
fn element_outside_w_is_rejected() {
    let out = minuscule(&["eval", "quartic", "E8", "--w", r#"{"h1": "1"}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_from_environment_and_flag() {
    let x = r#"{"e+[0,0,0,1,0,0]": "1"}"#;
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_minuscule"));
        cmd.env_remove("MINUSCULE_SEED").args(["eval", "cubic", "E6", "--x", x]).args(extra);
        if let Some(s) = env {
            cmd.env("MINUSCULE_SEED", s);
        }
        json(&cmd.output().unwrap())
    };
    assert_eq!(run(Some("5"), &[])["seed"], 5);
    assert_eq!(run(Some("5"), &["--seed", "9"])["seed"], 9);
    assert_eq!(run(None, &[])["seed"], minuscule::sampling::DEFAULT_SEED);
}

#[test]
fn verify_out_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("run{i}.json"))).collect();
    for p in &paths {
        let out = minuscule(&["verify", "tensors", "--samples", "3", "--seed", "77", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let reports: Value = serde_json::from_slice(&a).unwrap();
    assert!(reports.as_array().unwrap().iter().any(|r| r["seed"] == 77));
}

#[test]
fn grade_and_embed_commands() {
    let v = json(&minuscule(&["grade", "cochar", "E8", "--mu", "0,0,0,0,0,0,1,0"]));
    let dims: Vec<u64> = v["components"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [2, 27, 54, 82, 54, 27, 2]);
    let v = json(&minuscule(&["embed", "so44", "E7"]));
    assert_eq!(v["decomposition"]["dim_h"], 9);
    let v = json(&minuscule(&["grade", "center", "D4", "--embedding", "sl3"]));
    assert_eq!(v["label_kind"], "finite-group");
}
