//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//!
//! Criteria 1-7 and 9 go through the `minuscule` binary; criterion 8 calls the
//! library property suite. Every comparison is exact (rational arithmetic,
//! integer counts), so there is no numeric tolerance to tune.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

use minuscule::verify::{verify_properties, VerifyOptions, JACOBI_EXHAUSTIVE_DIM, JACOBI_RANDOM_TRIPLES};

/// Sample counts pinned by the criteria.
const C_SAMPLES: u64 = 100;
const T_SAMPLES: u64 = 20;
const JORDAN_SAMPLES: u64 = 20;
const HYPERDET_POINTS: u64 = 330;

struct Criterion {
    problems: Vec<String>,
    checked: usize,
}

impl Criterion {
    fn new() -> Self {
        Criterion { problems: Vec::new(), checked: 0 }
    }

    fn expect(&mut self, what: impl std::fmt::Display, ok: bool) {
        self.checked += 1;
        if !ok {
            self.problems.push(what.to_string());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: impl std::fmt::Display, got: T, want: T) {
        let ok = got == want;
        self.expect(format!("{what}: got {got:?}, want {want:?}"), ok);
    }
}

fn run_verify_all(out: &std::path::Path) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_minuscule"))
        .env_remove("MINUSCULE_SEED")
        .args(["verify", "all", "--out", out.to_str().unwrap()])
        .status()
        .unwrap()
        .code()
        .unwrap_or(-1)
}

fn dim_g(t: &str) -> u64 {
    let r: u64 = t[1..].parse().unwrap();
    match &t[..1] {
        "A" => r * (r + 2),
        "B" | "C" => r * (2 * r + 1),
        "D" => r * (2 * r - 1),
        _ => match t {
            "G2" => 14,
            "F4" => 52,
            "E6" => 78,
            "E7" => 133,
            "E8" => 248,
            _ => unreachable!(),
        },
    }
}

fn so(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// (dim W, dim 𝔥) from the groups M and representations W, n = 1..4.
fn table1_oracle() -> BTreeMap<String, (u64, u64)> {
    let mut m = BTreeMap::new();
    for n in 1..=4u64 {
        m.insert(format!("A{}", n + 1), (2 * n, n * n));
        m.insert(format!("B{}", n + 2), (2 * (2 * n + 1), 3 + so(2 * n + 1)));
        m.insert(format!("C{}", n + 1), (2 * n, n * (2 * n + 1)));
        m.insert(format!("D{}", n + 2), (4 * n, 3 + so(2 * n)));
    }
    for (t, w, h) in [("G2", 4, 3), ("F4", 14, 21), ("E6", 20, 35), ("E7", 32, 66), ("E8", 56, 133)] {
        m.insert(t.to_string(), (w, h));
    }
    m
}

/// (dim V, dim 𝔥) from the centralizers H and representations V.
fn table2_oracle() -> BTreeMap<String, (u64, u64)> {
    let mut m = BTreeMap::new();
    for n in 1..=4u64 {
        m.insert(format!("B{}", n + 2), (2 * n, so(2 * n - 1) + 1));
        if n >= 2 {
            m.insert(format!("D{}", n + 2), (2 * n - 1, so(2 * n - 2) + 1));
        }
    }
    for (t, v, h) in [("G2", 1, 0), ("F4", 6, 8), ("E6", 9, 16), ("E7", 15, 35), ("E8", 27, 78)] {
        m.insert(t.to_string(), (v, h));
    }
    m
}

fn table3_oracle() -> BTreeMap<String, (u64, u64)> {
    [("F4", 1, 0), ("E6", 2, 2), ("E7", 4, 9), ("E8", 8, 28)].into_iter().map(|(t, w, h)| (t.to_string(), (w, h))).collect()
}

/// (trace, sign on fixed root spaces) of the diagram automorphism.
fn trace_oracle() -> BTreeMap<String, (i64, i64)> {
    let mut m = BTreeMap::new();
    for r in 2..=6i64 {
        let n = (r + 1) / 2;
        let v = if r % 2 == 0 { (-r, -1) } else { (2 * n + 1, 1) };
        m.insert(format!("A{r}"), v);
    }
    for n in 4..=6i64 {
        m.insert(format!("D{n}"), (2 * n * n - 5 * n + 2, 1));
    }
    m.insert("E6".to_string(), (26, 1));
    m.insert("D4.triality".to_string(), (7, 1));
    m
}

fn u(v: &Value) -> u64 {
    v.as_u64().unwrap_or(u64::MAX)
}

fn criterion_table1(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for (t, (w, h)) in table1_oracle() {
        let Some(r) = by.get(&format!("table1.{t}")) else {
            c.expect(format!("table1.{t} missing"), false);
            continue;
        };
        let got = &r["computed"];
        c.eq(format!("{t} dim W"), u(&got["dim_W"]), w);
        c.eq(format!("{t} dim h"), u(&got["dim_h"]), h);
        c.eq(format!("{t} dim g = 3 + dim h + 2 dim W"), 3 + h + 2 * w, dim_g(&t));
        c.eq(format!("{t} identity"), got["identity"].clone(), json!(true));
        c.eq(format!("{t} minuscule"), got["minuscule"].clone(), json!(true));
    }
    c
}

fn criterion_table2(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for (t, (v, h)) in table2_oracle() {
        let Some(r) = by.get(&format!("table2.{t}")) else {
            c.expect(format!("table2.{t} missing"), false);
            continue;
        };
        let got = &r["computed"];
        c.eq(format!("{t} dim V"), u(&got["dim_V"]), v);
        c.eq(format!("{t} dim h"), u(&got["dim_h"]), h);
        c.eq(format!("{t} dim g = 8 + dim h + 6 dim V"), 8 + h + 6 * v, dim_g(&t));
        let grading: Vec<u64> = got["grading"].as_array().map(|a| a.iter().map(u).collect()).unwrap_or_default();
        c.eq(format!("{t} seven-term grading"), grading.clone(), vec![2, v, 2 * v, 4 + h, 2 * v, v, 2]);
        c.eq(format!("{t} grading total"), grading.iter().sum::<u64>(), dim_g(&t));
        c.eq(format!("{t} minuscule"), got["minuscule"].clone(), json!(true));
    }
    let e8: Vec<u64> = by["table2.E8"]["computed"]["grading"].as_array().unwrap().iter().map(u).collect();
    c.eq("E8 grading", e8, vec![2, 27, 54, 82, 54, 27, 2]);
    c
}

fn criterion_table3(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for (t, (w, h)) in table3_oracle() {
        let Some(r) = by.get(&format!("table3.{t}")) else {
            c.expect(format!("table3.{t} missing"), false);
            continue;
        };
        let got = &r["computed"];
        c.eq(format!("{t} dim W"), u(&got["dim_W"]), w);
        c.eq(format!("{t} dim h"), u(&got["dim_h"]), h);
        let comps: Vec<u64> = got["components"].as_array().map(|a| a.iter().map(u).collect()).unwrap_or_default();
        c.eq(format!("{t} components"), comps, vec![8 * w; 3]);
        c.eq(format!("{t} dim g = 28 + dim h + 24 dim W"), 28 + h + 24 * w, dim_g(&t));
        c.eq(format!("{t} J type"), got["j_type"].clone(), json!(["D4"]));
    }
    c
}

fn criterion_traces(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for (name, (trace, sign)) in trace_oracle() {
        let Some(r) = by.get(&format!("traces.{name}")) else {
            c.expect(format!("traces.{name} missing"), false);
            continue;
        };
        let got = &r["computed"];
        c.eq(format!("{name} trace"), got["trace"].clone(), json!(trace.to_string()));
        c.eq(format!("{name} fixed root signs"), got["fixed_root_signs"].clone(), json!([sign]));
    }
    c
}

fn sampled(c: &mut Criterion, by: &BTreeMap<String, Value>, claim: &str, samples: Option<u64>) {
    let Some(r) = by.get(claim) else {
        c.expect(format!("{claim} missing"), false);
        return;
    };
    let got = &r["computed"];
    c.eq(format!("{claim} failures"), u(&got["failures"]), 0);
    match samples {
        Some(n) => c.eq(format!("{claim} samples"), u(&got["samples"]), n),
        None => c.expect(format!("{claim} has samples"), u(&got["samples"]) > 0),
    }
}

fn criterion_quartic(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for n in 2..=4 {
        sampled(&mut c, by, &format!("tensors.q.vanishes.C{n}"), Some(C_SAMPLES));
    }
    let homogeneous: Vec<&String> = by.keys().filter(|k| k.starts_with("tensors.q.homogeneous.")).collect();
    c.expect("homogeneity checked on at least 10 types", homogeneous.len() >= 10);
    for k in homogeneous {
        sampled(&mut c, by, k, None);
    }
    let h = &by["tensors.q.hyperdet.D4"];
    c.eq("hyperdet points", u(&h["computed"]["points"]), HYPERDET_POINTS);
    c.eq("hyperdet mismatches", u(&h["computed"]["mismatches"]), 0);
    c.eq("hyperdet rank-one value", h["computed"]["rank_one_value"].clone(), json!("0"));
    c.eq("hyperdet unit point", h["computed"]["unit_is_scalar"].clone(), json!(true));
    c.expect("hyperdet scalar nonzero", h["constants"]["c"].as_str().is_some_and(|s| s != "0"));
    c
}

fn criterion_smooth_point(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    let s = &by["tensors.t.smoothpoint.D4"]["computed"];
    c.eq("t(v,v,v) on x_alpha2 only", s["on_alpha2"].clone(), json!(true));
    c.eq("t(v,v,v) nonzero", s["nonzero"].clone(), json!(true));
    c.eq("<t(v,v,v), v> = q(v)", s["pairing_is_q"].clone(), json!(true));
    for t in ["B3", "D4", "E6", "E7", "E8"] {
        let claim = format!("tensors.t.relation.{t}");
        sampled(&mut c, by, &claim, Some(T_SAMPLES));
        c.eq(format!("{claim} q nonzero somewhere"), by[&claim]["computed"]["q_nonzero"].clone(), json!(true));
    }
    c
}

fn criterion_jordan(by: &BTreeMap<String, Value>) -> Criterion {
    let mut c = Criterion::new();
    for t in ["F4", "E6", "E7", "E8"] {
        sampled(&mut c, by, &format!("jordan.fundamental.{t}"), Some(JORDAN_SAMPLES));
        let d = &by[&format!("jordan.norm.degree3.{t}")]["computed"];
        c.eq(format!("{t} residual"), u(&d["residual_failures"]), 0);
        c.eq(format!("{t} degree 3"), u(&d["degree3_failures"]), 0);
        c.eq(format!("{t} f(e) = 1"), d["unit_norm"].clone(), json!("1"));
        c.eq(format!("{t} samples"), u(&d["samples"]), JORDAN_SAMPLES);
        let inv = &by[&format!("jordan.norm.invariance.{t}")]["computed"];
        c.eq(format!("{t} h-invariance"), u(&inv["failures"]), 0);
        c.expect(format!("{t} h basis nonempty"), u(&inv["basis"]) > 0);
    }
    let det = &by["jordan.norm.determinant.F4"]["computed"];
    c.eq("F4 determinant coefficients", det["coefficients_match"].clone(), json!(true));
    c.eq("F4 determinant mismatches", u(&det["mismatches"]), 0);
    c
}

fn criterion_properties() -> Criterion {
    let mut c = Criterion::new();
    for r in verify_properties(&VerifyOptions::default()) {
        c.expect(format!("{} {}", r.claim, r.computed), r.passed());
        if let Some(t) = r.claim.strip_prefix("props.jacobi.") {
            let d = dim_g(t) as usize;
            let exhaustive = d <= JACOBI_EXHAUSTIVE_DIM;
            let triples = if exhaustive { d * (d - 1) * (d - 2) / 6 } else { JACOBI_RANDOM_TRIPLES };
            c.eq(format!("{t} Jacobi mode"), r.computed["exhaustive"].clone(), json!(exhaustive));
            c.eq(format!("{t} Jacobi triples"), u(&r.computed["triples"]) as usize, triples);
        }
    }
    c
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let (first, second) = (dir.path().join("first.json"), dir.path().join("second.json"));
    let code = run_verify_all(&first);
    let code2 = run_verify_all(&second);
    let bytes = std::fs::read(&first).unwrap();
    let reports: Vec<Value> = serde_json::from_slice(&bytes).unwrap();
    let by: BTreeMap<String, Value> = reports.iter().map(|r| (r["claim"].as_str().unwrap().to_string(), r.clone())).collect();

    let mut determinism = Criterion::new();
    determinism.eq("exit codes", (code, code2), (0, 0));
    determinism.expect("second run is byte-identical", bytes == std::fs::read(&second).unwrap());
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/verify_all.json");
    determinism.expect("report equals the stored golden file", std::fs::read(golden).ok() == Some(bytes.clone()));
    let all_pass = reports.iter().all(|r| r["status"] == "pass");

    let results = [
        ("1", "table1 suite, highest-root sl2", criterion_table1(&by)),
        ("2", "table2 suite, minuscule sl3", criterion_table2(&by)),
        ("3", "table3 suite, so(4,4)", criterion_table3(&by)),
        ("4", "diagram automorphism traces", criterion_traces(&by)),
        ("5", "quartic properties", criterion_quartic(&by)),
        ("6", "smooth point and t relation", criterion_smooth_point(&by)),
        ("7", "Jordan layer", criterion_jordan(&by)),
        ("8", "property suites", criterion_properties()),
        ("9", "determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (id, name, c) in &results {
        let status = if c.problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id} {name}: {status} ({} checks, tolerance exact)", c.checked);
        for p in &c.problems {
            println!("    {p}");
        }
        if !c.problems.is_empty() {
            failed.push(*id);
        }
    }
    println!("verify all: {} claims, all pass = {all_pass}", reports.len());
    if !all_pass || !failed.is_empty() {
        eprintln!("acceptance failed: criteria {failed:?}");
        std::process::exit(1);
    }
}
