//! Byte-exact golden files. Regenerate with `UPDATE_GOLDEN=1 cargo test --test golden`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::Value;

use minuscule::gradings::{centralizer_decomposition, grade_by_center, grade_by_cocharacter};
use minuscule::verify::{algebra, canonical_json, constructed_embeddings, run_suite, Suite, VerifyOptions};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

fn check(name: &str, text: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, text).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if stored != text {
        let line = stored.lines().zip(text.lines()).position(|(a, b)| a != b).map_or(0, |i| i + 1);
        panic!("{name} differs from the golden file (first differing line {line})");
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

#[test]
fn verify_all_report() {
    let reports = run_suite(Suite::All, &VerifyOptions::default());
    check("verify_all.json", &canonical_json(&reports));
}

#[test]
fn isotypic_reports() {
    let opts = VerifyOptions::default();
    let mut out: BTreeMap<String, Value> = BTreeMap::new();
    for t in ["B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
        let alg = algebra(t.parse().unwrap(), opts.max_rank, opts.convention).unwrap();
        for emb in constructed_embeddings(&alg) {
            let report = centralizer_decomposition(&emb).unwrap();
            out.insert(format!("{t}.{}", emb.kind().name()), serde_json::to_value(report).unwrap());
        }
    }
    check("isotypic.json", &pretty(&serde_json::to_value(out).unwrap()));
}

#[test]
fn gradings() {
    let opts = VerifyOptions::default();
    let mut out: BTreeMap<String, Value> = BTreeMap::new();
    for t in ["B3", "D4", "G2", "F4", "E6"] {
        let alg = algebra(t.parse().unwrap(), opts.max_rank, opts.convention).unwrap();
        for emb in constructed_embeddings(&alg) {
            let kind = emb.kind().name();
            out.insert(format!("{t}.{kind}.center"), grade_by_center(&emb).unwrap().to_json());
            if let Some(mu) = emb.cocharacter() {
                out.insert(format!("{t}.{kind}.cocharacter"), grade_by_cocharacter(&alg, mu).unwrap().to_json());
            }
        }
    }
    check("gradings.json", &pretty(&serde_json::to_value(out).unwrap()));
}
