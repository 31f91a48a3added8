//! Claim-by-claim reproduction of the tables, trace computations and tensor
//! identities, reported as canonical JSON.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chevalley::{ChevalleyAlgebra, SignConvention};
use crate::embeddings::{
    check_minuscule, highest_root_sl2, long_root_subalgebra, minuscule_sl3, so44, Cocharacter, Embedding,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, SparseVector};
use crate::gradings::{centralizer_decomposition, grade_by_center, grade_by_cocharacter, Grading, IsotypicReport};
use crate::root_system::{Family, RootSystem, RootSystemType, DEFAULT_MAX_CLASSICAL_RANK};
use crate::sampling::{self, DEFAULT_SEED};
use crate::tensors::{
    determinant_match, hyperdeterminant_match, smooth_point, type_a_square, InvariantForm, JordanContext,
    SymplecticContext,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub anchor: String,
    pub seed: Option<u64>,
    /// Normalization constants found along the way (not compared).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, String>,
}

impl ClaimReport {
    pub fn new(claim: impl Into<String>, anchor: impl Into<String>, expected: Value, computed: Value, seed: Option<u64>) -> Self {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        ClaimReport {
            claim: claim.into(),
            status,
            expected,
            computed,
            anchor: anchor.into(),
            seed,
            constants: BTreeMap::new(),
        }
    }

    fn from_result(
        claim: impl Into<String>,
        anchor: impl Into<String>,
        expected: Value,
        computed: Result<Value>,
        seed: Option<u64>,
    ) -> Self {
        let computed = computed.unwrap_or_else(|e| json!({ "error": e.to_string() }));
        ClaimReport::new(claim, anchor, expected, computed, seed)
    }

    pub fn with_constant(mut self, key: &str, value: impl ToString) -> Self {
        self.constants.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Knobs shared by all verification entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub seed: u64,
    pub samples: SampleCounts,
    pub convention: SignConvention,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: DEFAULT_MAX_CLASSICAL_RANK,
            seed: DEFAULT_SEED,
            samples: SampleCounts::default(),
            convention: SignConvention::Standard,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleCounts {
    pub quartic_vanishing: usize,
    pub homogeneity: usize,
    pub trilinear: usize,
    pub jordan: usize,
    pub determinant: usize,
    pub norm_invariance: usize,
}

impl Default for SampleCounts {
    fn default() -> Self {
        SampleCounts { quartic_vanishing: 100, homogeneity: 10, trilinear: 20, jordan: 20, determinant: 30, norm_invariance: 5 }
    }
}

impl SampleCounts {
    pub fn uniform(n: usize) -> Self {
        SampleCounts { quartic_vanishing: n, homogeneity: n, trilinear: n, jordan: n, determinant: n, norm_invariance: n }
    }
}

/// Ambient algebras are immutable, so one copy per type and convention is shared.
pub fn algebra(ty: RootSystemType, max_rank: usize, convention: SignConvention) -> Result<Arc<ChevalleyAlgebra>> {
    type Cache = HashMap<(RootSystemType, SignConvention), Arc<ChevalleyAlgebra>>;
    static CACHE: OnceLock<Mutex<Cache>> = OnceLock::new();
    ty.check_cap(max_rank)?;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = cache.lock().expect("cache lock").get(&(ty, convention)) {
        return Ok(a.clone());
    }
    let rs = RootSystem::build_capped(ty, max_rank)?;
    let alg = Arc::new(ChevalleyAlgebra::with_convention(&rs, convention));
    cache.lock().expect("cache lock").insert((ty, convention), alg.clone());
    Ok(alg)
}

fn ty(family: Family, rank: usize) -> RootSystemType {
    RootSystemType::new(family, rank).expect("valid table type")
}

fn exceptional() -> [RootSystemType; 5] {
    [ty(Family::G, 2), ty(Family::F, 4), ty(Family::E, 6), ty(Family::E, 7), ty(Family::E, 8)]
}

fn isotypic(emb: &Embedding) -> Result<(IsotypicReport, bool)> {
    let iso = centralizer_decomposition(emb)?;
    let minuscule = check_minuscule(emb)?.minuscule;
    Ok((iso, minuscule))
}

/// The common multiplicity of the nontrivial characters.
fn uniform_dim_w(iso: &IsotypicReport, dim_v: usize) -> Result<usize> {
    let ws: BTreeSet<(usize, usize)> = iso.characters.iter().map(|c| (c.dim_v, c.dim_w)).collect();
    match ws.into_iter().collect::<Vec<_>>().as_slice() {
        [(v, w)] if *v == dim_v => Ok(*w),
        other => Err(Error::structural(format!("unexpected character blocks {other:?}"))),
    }
}

pub fn table1_expected(t: RootSystemType) -> Option<(usize, usize)> {
    let r = t.rank;
    match t.family {
        Family::A if r >= 2 => {
            let n = r - 1;
            Some((2 * n, n * n))
        }
        Family::B if r >= 3 => {
            let n = r - 2;
            Some((4 * n + 2, 3 + n * (2 * n + 1)))
        }
        Family::C if r >= 2 => {
            let n = r - 1;
            Some((2 * n, n * (2 * n + 1)))
        }
        Family::D if r >= 3 => {
            let n = r - 2;
            Some((4 * n, 3 + n * (2 * n - 1)))
        }
        Family::G => Some((4, 3)),
        Family::F => Some((14, 21)),
        Family::E => Some(match r {
            6 => (20, 35),
            7 => (32, 66),
            _ => (56, 133),
        }),
        _ => None,
    }
}

fn table1_rows(max_rank: usize) -> Vec<RootSystemType> {
    let mut rows = Vec::new();
    for n in 1..=4 {
        rows.extend([ty(Family::A, n + 1), ty(Family::B, n + 2), ty(Family::C, n + 1), ty(Family::D, n + 2)]);
    }
    rows.retain(|t| t.rank <= max_rank);
    rows.extend(exceptional());
    rows
}

/// Highest-root sl₂: dim W, dim 𝔥 and dim 𝔤 = 3 + dim 𝔥 + 2 dim W.
pub fn verify_table1(opts: &VerifyOptions) -> Vec<ClaimReport> {
    let max_rank = opts.max_rank;
    table1_rows(max_rank)
        .into_iter()
        .map(|t| {
            let (w, h) = table1_expected(t).expect("table row");
            let expected = json!({ "dim_W": w, "dim_h": h, "identity": true, "minuscule": true });
            let computed = (|| {
                let alg = algebra(t, max_rank, opts.convention)?;
                let emb = highest_root_sl2(&alg)?;
                let (iso, minuscule) = isotypic(&emb)?;
                let dim_w = uniform_dim_w(&iso, 2)?;
                Ok(json!({
                    "dim_W": dim_w,
                    "dim_h": iso.dim_h,
                    "identity": alg.dim() == 3 + iso.dim_h + 2 * dim_w,
                    "minuscule": minuscule,
                }))
            })();
            ClaimReport::from_result(
                format!("table1.{t}"),
                format!("minuscule SL2 in {t}: M and W, dim g = 3 + dim m + 2 dim W"),
                expected,
                computed,
                None,
            )
        })
        .collect()
}

pub fn table2_expected(t: RootSystemType) -> Option<(usize, usize)> {
    let r = t.rank;
    match t.family {
        Family::B if r >= 3 => {
            let n = r - 2;
            Some((2 * n, (2 * n - 1) * (2 * n - 2) / 2 + 1))
        }
        Family::D if r >= 4 => {
            let n = r - 2;
            Some((2 * n - 1, (2 * n - 2) * (2 * n - 3) / 2 + 1))
        }
        Family::G => Some((1, 0)),
        Family::F => Some((6, 8)),
        Family::E => Some(match r {
            6 => (9, 16),
            7 => (15, 35),
            _ => (27, 78),
        }),
        _ => None,
    }
}

fn table2_rows(max_rank: usize) -> Vec<RootSystemType> {
    let mut rows = Vec::new();
    for n in 1..=4 {
        rows.push(ty(Family::B, n + 2));
        if n >= 2 {
            rows.push(ty(Family::D, n + 2));
        }
    }
    rows.retain(|t| t.rank <= max_rank);
    rows.extend(exceptional());
    rows
}

/// Minuscule sl₃: dim V, dim 𝔥, the seven-term μ-grading and
/// dim 𝔤 = 8 + dim 𝔥 + 6 dim V.
pub fn verify_table2(opts: &VerifyOptions) -> Vec<ClaimReport> {
    let max_rank = opts.max_rank;
    table2_rows(max_rank)
        .into_iter()
        .map(|t| {
            let (v, h) = table2_expected(t).expect("table row");
            let grading = [2, v, 2 * v, 4 + h, 2 * v, v, 2];
            let expected = json!({
                "dim_V": v,
                "dim_h": h,
                "grading": grading,
                "identity": true,
                "minuscule": true,
            });
            let computed = (|| {
                let alg = algebra(t, max_rank, opts.convention)?;
                let emb = minuscule_sl3(&alg)?;
                let (iso, minuscule) = isotypic(&emb)?;
                let dim_v = uniform_dim_w(&iso, 3)?;
                let mu = emb.cocharacter().ok_or_else(|| Error::structural("sl3 without cocharacter"))?;
                let g = grade_by_cocharacter(&alg, mu)?;
                let dims: Vec<usize> = g.int_dims().into_iter().map(|(_, d)| d).collect();
                Ok(json!({
                    "dim_V": dim_v,
                    "dim_h": iso.dim_h,
                    "grading": dims,
                    "identity": alg.dim() == 8 + iso.dim_h + 6 * dim_v,
                    "minuscule": minuscule,
                }))
            })();
            ClaimReport::from_result(
                format!("table2.{t}"),
                format!("minuscule SL3 in {t}: centralizer H and V, dim g = 8 + dim h + 6 dim V"),
                expected,
                computed,
                None,
            )
        })
        .collect()
}

pub fn table3_expected(t: RootSystemType) -> Option<(usize, usize)> {
    match (t.family, t.rank) {
        (Family::F, 4) => Some((1, 0)),
        (Family::E, 6) => Some((2, 2)),
        (Family::E, 7) => Some((4, 9)),
        (Family::E, 8) => Some((8, 28)),
        _ => None,
    }
}

/// Minuscule so(4,4): dim W, dim 𝔥 and the three components V₈ ⊗ W.
pub fn verify_table3(opts: &VerifyOptions) -> Vec<ClaimReport> {
    exceptional()[1..]
        .iter()
        .map(|&t| {
            let (w, h) = table3_expected(t).expect("table row");
            let expected = json!({
                "components": [8 * w, 8 * w, 8 * w],
                "dim_W": w,
                "dim_h": h,
                "identity": true,
                "j_type": ["D4"],
                "minuscule": true,
            });
            let computed = (|| {
                let alg = algebra(t, DEFAULT_MAX_CLASSICAL_RANK, opts.convention)?;
                let emb = so44(&alg)?;
                let (iso, minuscule) = isotypic(&emb)?;
                let dim_w = uniform_dim_w(&iso, 8)?;
                let comps: Vec<usize> = iso.characters.iter().map(|c| c.component_dim).collect();
                Ok(json!({
                    "components": comps,
                    "dim_W": dim_w,
                    "dim_h": iso.dim_h,
                    "identity": alg.dim() == 28 + iso.dim_h + 3 * 8 * dim_w,
                    "j_type": iso.j_type,
                    "minuscule": minuscule,
                }))
            })();
            ClaimReport::from_result(
                format!("table3.{t}"),
                format!("minuscule Spin(4,4) in {t}: centralizer H and W, dim g = 28 + dim h + 3 (8 dim W)"),
                expected,
                computed,
                None,
            )
        })
        .collect()
}

struct TraceCase {
    name: String,
    ty: RootSystemType,
    perm: Vec<usize>,
    trace: i64,
    sign: i64,
}

fn trace_cases() -> Vec<TraceCase> {
    let mut cases = Vec::new();
    for r in 2..=6 {
        let perm: Vec<usize> = (0..r).rev().collect();
        // sl_{2n} (r = 2n − 1) has trace 2n + 1; sl_{2n+1} (r = 2n) has −2n.
        let (trace, sign) = if r % 2 == 1 { (r as i64 + 2, 1) } else { (-(r as i64), -1) };
        cases.push(TraceCase { name: format!("A{r}"), ty: ty(Family::A, r), perm, trace, sign });
    }
    for n in 4..=6 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(n - 2, n - 1);
        let n = n as i64;
        cases.push(TraceCase {
            name: format!("D{n}"),
            ty: ty(Family::D, n as usize),
            perm,
            trace: 2 * n * n - 5 * n + 2,
            sign: 1,
        });
    }
    cases.push(TraceCase { name: "E6".into(), ty: ty(Family::E, 6), perm: vec![5, 1, 4, 3, 2, 0], trace: 26, sign: 1 });
    cases.push(TraceCase { name: "D4.triality".into(), ty: ty(Family::D, 4), perm: vec![2, 1, 3, 0], trace: 7, sign: 1 });
    cases
}

/// Traces of diagram automorphisms and their signs on fixed root spaces.
pub fn verify_lemma_traces(opts: &VerifyOptions) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for case in trace_cases() {
        let computed = (|| {
            let alg = algebra(case.ty, DEFAULT_MAX_CLASSICAL_RANK, opts.convention)?;
            let sigma = alg.diagram_automorphism(&case.perm)?;
            let trace = sigma.trace();
            let rs = alg.root_system();
            let mut signs = BTreeSet::new();
            for r in rs.roots() {
                if rs.permute(&case.perm, &r.coords) == r.coords {
                    signs.insert(alg.sign_on_fixed_root(&case.perm, r)?);
                }
            }
            Ok(json!({ "fixed_root_signs": signs, "trace": trace.to_string() }))
        })();
        out.push(ClaimReport::from_result(
            format!("traces.{}", case.name),
            format!("diagram automorphism {:?} of {}: trace and sign on fixed root spaces", case.perm, case.ty),
            json!({ "fixed_root_signs": [case.sign], "trace": case.trace.to_string() }),
            computed,
            None,
        ));
    }
    out
}

fn sample_expected(samples: usize) -> Value {
    json!({ "failures": 0, "samples": samples })
}

fn sample_computed(samples: usize, failures: usize) -> Value {
    json!({ "failures": failures, "samples": samples })
}

fn scaled(v: &[Rational], c: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * c).collect()
}

fn random_scalar(rng: &mut impl rand::Rng) -> Rational {
    sampling::nonzero_int(rng, 7) / sampling::nonzero_int(rng, 5).abs()
}

fn tensor_claims_symplectic(t: RootSystemType, opts: &VerifyOptions, out: &mut Vec<ClaimReport>) {
    let seed = opts.seed;
    let counts = &opts.samples;
    let ctx = algebra(t, opts.max_rank, opts.convention).and_then(|a| SymplecticContext::new(&a));
    let ctx = match ctx {
        Ok(c) => c,
        Err(e) => {
            out.push(ClaimReport::new(
                format!("tensors.gram.{t}"),
                "W carries a nondegenerate alternating form",
                json!({ "antisymmetric": true }),
                json!({ "error": e.to_string() }),
                None,
            ));
            return;
        }
    };
    let n = ctx.dim_w();
    out.push(ClaimReport::new(
        format!("tensors.gram.{t}"),
        "W carries a nondegenerate alternating form",
        json!({ "dim_W": n, "rank": n }),
        json!({ "dim_W": n, "rank": ctx.gram_rank() }),
        None,
    ));

    let computed = (|| {
        let mut rng = sampling::rng(seed, &format!("q.homogeneous.{t}"));
        let mut failures = 0;
        for _ in 0..counts.homogeneity {
            let w = sampling::small_ints(&mut rng, n, 5);
            let l = random_scalar(&mut rng);
            if ctx.quartic_at(&scaled(&w, &l))? != l.pow(4) * ctx.quartic_at(&w)? {
                failures += 1;
            }
        }
        Ok(sample_computed(counts.homogeneity, failures))
    })();
    out.push(ClaimReport::from_result(
        format!("tensors.q.homogeneous.{t}"),
        "(ad w)^4 F = q(w) E defines a quartic form",
        sample_expected(counts.homogeneity),
        computed,
        Some(seed),
    ));

    if t.family == Family::C && (2..=4).contains(&t.rank) {
        let computed = (|| {
            let mut rng = sampling::rng(seed, &format!("q.vanishes.{t}"));
            let mut failures = 0;
            for _ in 0..counts.quartic_vanishing {
                if !ctx.quartic_at(&sampling::small_ints(&mut rng, n, 9))?.is_zero() {
                    failures += 1;
                }
            }
            Ok(sample_computed(counts.quartic_vanishing, failures))
        })();
        out.push(ClaimReport::from_result(
            format!("tensors.q.vanishes.{t}"),
            "for G of type C the quartic q is identically zero",
            sample_expected(counts.quartic_vanishing),
            computed,
            Some(seed),
        ));
    }

    if t.family == Family::A {
        let report = type_a_square(&ctx);
        let mut claim = ClaimReport::from_result(
            format!("tensors.q.square.{t}"),
            "for G of type A the quartic is the square of a quadratic form",
            json!({ "square": true }),
            report.as_ref().map(|r| json!({ "square": r.matches })).map_err(Clone::clone),
            None,
        );
        if let Ok(r) = report {
            claim = claim.with_constant("k", &r.k);
        }
        out.push(claim);
    }

    if t.family == Family::D && t.rank == 4 {
        let report = hyperdeterminant_match(&ctx, seed);
        let mut claim = ClaimReport::from_result(
            "tensors.q.hyperdet.D4",
            "for G = SO8 the quartic q is Cayley's hyperdeterminant",
            json!({ "max_mismatch": "0", "mismatches": 0, "points": 330, "rank_one_value": "0", "unit_is_scalar": true }),
            report.as_ref().map_err(Clone::clone).map(|r| {
                json!({
                    "max_mismatch": r.max_mismatch.to_string(),
                    "mismatches": r.mismatches,
                    "points": r.points,
                    "rank_one_value": r.rank_one_value.to_string(),
                    "unit_is_scalar": !r.scalar.is_zero() && r.unit_value == r.scalar,
                })
            }),
            Some(seed),
        );
        if let Ok(r) = report {
            claim = claim.with_constant("c", &r.scalar);
        }
        out.push(claim);

        let report = smooth_point(&ctx);
        let mut claim = ClaimReport::from_result(
            "tensors.t.smoothpoint.D4",
            "t(v,v,v) is a nonzero multiple of x_{alpha2} for v = x_{a1+a2} + x_{a2+a3} + x_{a2+a4}",
            json!({ "nonzero": true, "on_alpha2": true, "pairing_is_q": true }),
            report.as_ref().map_err(Clone::clone).map(|r| {
                json!({ "nonzero": !r.coefficient.is_zero(), "on_alpha2": r.on_alpha2, "pairing_is_q": r.pairing == r.q })
            }),
            None,
        );
        if let Ok(r) = report {
            claim = claim.with_constant("c", &r.coefficient);
        }
        out.push(claim);
    }

    let trilinear_types = [ty(Family::B, 3), ty(Family::D, 4), ty(Family::E, 6), ty(Family::E, 7), ty(Family::E, 8)];
    if trilinear_types.contains(&t) {
        let computed = (|| {
            let mut rng = sampling::rng(seed, &format!("t.relation.{t}"));
            let mut failures = 0;
            let mut nonzero = false;
            for _ in 0..counts.trilinear {
                let w = sampling::small_ints(&mut rng, n, 5);
                let tw = ctx.trilinear_at(&w, &w, &w)?;
                let q = ctx.quartic_at(&w)?;
                nonzero |= !q.is_zero();
                if ctx.symplectic_at(&tw, &w)? != q {
                    failures += 1;
                }
            }
            Ok(json!({ "failures": failures, "q_nonzero": nonzero, "samples": counts.trilinear }))
        })();
        out.push(ClaimReport::from_result(
            format!("tensors.t.relation.{t}"),
            "<t(w,w,w), w> = q(w)",
            json!({ "failures": 0, "q_nonzero": counts.trilinear > 0, "samples": counts.trilinear }),
            computed,
            Some(seed),
        ));
    }

    if t == ty(Family::D, 4) || !t.family.is_classical() {
        let computed = (|| {
            let h = ctx.embedding().centralizer()?;
            let mut gram_fail = 0;
            let mut quartic_fail = 0;
            for v in h.basis() {
                let m = ctx.algebra().element(v.clone())?;
                if !ctx.invariance_check(InvariantForm::Gram, &m, seed)? {
                    gram_fail += 1;
                }
                if !ctx.invariance_check(InvariantForm::Quartic, &m, seed)? {
                    quartic_fail += 1;
                }
            }
            Ok(json!({ "basis": h.dim(), "gram_failures": gram_fail, "quartic_failures": quartic_fail }))
        })();
        let dim_h = table1_expected(t).map(|(_, h)| h).unwrap_or(0);
        out.push(ClaimReport::from_result(
            format!("tensors.invariance.{t}"),
            "M stabilizes the alternating form and the quartic (checked on Lie(M))",
            json!({ "basis": dim_h, "gram_failures": 0, "quartic_failures": 0 }),
            computed,
            Some(seed),
        ));
    }
}

fn tensor_claims_jordan(t: RootSystemType, opts: &VerifyOptions, out: &mut Vec<ClaimReport>) {
    let seed = opts.seed;
    let counts = &opts.samples;
    let ctx = match algebra(t, opts.max_rank, opts.convention).and_then(|a| JordanContext::new(&a, seed)) {
        Ok(c) => c,
        Err(e) => {
            out.push(ClaimReport::new(
                format!("jordan.fundamental.{t}"),
                "(g'(1), g'(-1)) with Q(x)(y) = (ad x)^2 y is a Jordan pair",
                sample_expected(counts.jordan),
                json!({ "error": e.to_string() }),
                Some(seed),
            ));
            return;
        }
    };
    let n = ctx.dim_v();

    let computed = (|| {
        let mut rng = sampling::rng(seed, &format!("jordan.fundamental.{t}"));
        let mut failures = 0;
        for _ in 0..counts.jordan {
            let x = sampling::small_ints(&mut rng, n, 4);
            let y = sampling::small_ints(&mut rng, n, 4);
            if !ctx.fundamental_identity(&x, &y)? {
                failures += 1;
            }
        }
        Ok(sample_computed(counts.jordan, failures))
    })();
    out.push(ClaimReport::from_result(
        format!("jordan.fundamental.{t}"),
        "(g'(1), g'(-1)) with Q(x)(y) = (ad x)^2 y is a Jordan pair",
        sample_expected(counts.jordan),
        computed,
        Some(seed),
    ));

    let computed = (|| {
        let mut rng = sampling::rng(seed, &format!("jordan.norm.{t}"));
        let (mut inconsistent, mut not_cubic) = (0, 0);
        for _ in 0..counts.jordan {
            let x = sampling::small_ints(&mut rng, n, 4);
            let l = random_scalar(&mut rng);
            match (ctx.cubic_norm_at(&x), ctx.cubic_norm_at(&scaled(&x, &l))) {
                (Ok(a), Ok(b)) => {
                    if b != l.pow(3) * a {
                        not_cubic += 1;
                    }
                }
                (Err(Error::Structural(_)), _) | (_, Err(Error::Structural(_))) => inconsistent += 1,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        let unit = ctx.cubic_norm_at(ctx.unit())?;
        Ok(json!({
            "degree3_failures": not_cubic,
            "residual_failures": inconsistent,
            "samples": counts.jordan,
            "unit_norm": unit.to_string(),
        }))
    })();
    out.push(ClaimReport::from_result(
        format!("jordan.norm.degree3.{t}"),
        "the cubic norm f exists and deg f = 3",
        json!({ "degree3_failures": 0, "residual_failures": 0, "samples": counts.jordan, "unit_norm": "1" }),
        computed,
        Some(seed),
    ));

    let computed = (|| {
        let basis = ctx.h_basis();
        let mut failures = 0;
        for m in &basis {
            if !ctx.norm_invariance(m, counts.norm_invariance, seed)? {
                failures += 1;
            }
        }
        Ok(json!({ "basis": basis.len(), "failures": failures }))
    })();
    let dim_h = table2_expected(t).map(|(_, h)| h).unwrap_or(0);
    out.push(ClaimReport::from_result(
        format!("jordan.norm.invariance.{t}"),
        "f is invariant under the centralizer H",
        json!({ "basis": dim_h, "failures": 0 }),
        computed,
        Some(seed),
    ));

    if t.family == Family::F {
        let report = determinant_match(&ctx, counts.determinant, seed);
        let mut claim = ClaimReport::from_result(
            "jordan.norm.determinant.F4",
            "for F4, V = Sym^2(V3) with norm the determinant",
            json!({ "coefficients_match": true, "mismatches": 0, "points": counts.determinant }),
            report.as_ref().map_err(Clone::clone).map(|r| {
                json!({ "coefficients_match": r.coefficients_match, "mismatches": r.mismatches, "points": r.points })
            }),
            Some(seed),
        );
        if let Ok(r) = report {
            claim = claim.with_constant("k", &r.k);
        }
        out.push(claim);
    }
}

/// Quartic, trilinear and Jordan-layer checks.
pub fn verify_tensors(opts: &VerifyOptions) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    let mut types: Vec<RootSystemType> = vec![
        ty(Family::A, 2),
        ty(Family::A, 3),
        ty(Family::A, 4),
        ty(Family::A, 5),
        ty(Family::B, 3),
        ty(Family::C, 2),
        ty(Family::C, 3),
        ty(Family::C, 4),
        ty(Family::D, 4),
    ];
    types.retain(|t| t.rank <= opts.max_rank);
    types.extend(exceptional());
    for t in types {
        tensor_claims_symplectic(t, opts, &mut out);
    }
    for &t in &exceptional()[1..] {
        tensor_claims_jordan(t, opts, &mut out);
    }
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

/// Algebras up to this dimension get the Jacobi identity on every basis triple.
pub const JACOBI_EXHAUSTIVE_DIM: usize = 52;
/// Random triples checked for larger algebras.
pub const JACOBI_RANDOM_TRIPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub exhaustive: bool,
    pub triples: usize,
    pub failures: usize,
}

fn jacobi_sum(alg: &ChevalleyAlgebra, x: &SparseVector, y: &SparseVector, z: &SparseVector) -> SparseVector {
    let b = |u: &SparseVector, v: &SparseVector| alg.bracket_coords(u, v);
    b(&b(x, y), z).add(&b(&b(y, z), x)).add(&b(&b(z, x), y))
}

/// Exhaustive on basis triples i < j < k (plus antisymmetry on pairs) up to
/// [`JACOBI_EXHAUSTIVE_DIM`]; otherwise seeded triples of elements with three
/// nonzero coordinates each.
pub fn jacobi_check(alg: &ChevalleyAlgebra, seed: u64) -> JacobiReport {
    let d = alg.dim();
    let mut failures = 0;
    if d <= JACOBI_EXHAUSTIVE_DIM {
        let unit = |i| SparseVector::unit(d, i);
        for i in 0..d {
            for j in i..d {
                if !alg.bracket_basis(i, j).add(alg.bracket_basis(j, i)).is_zero() {
                    failures += 1;
                }
            }
        }
        let mut triples = 0;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    triples += 1;
                    if !jacobi_sum(alg, &unit(i), &unit(j), &unit(k)).is_zero() {
                        failures += 1;
                    }
                }
            }
        }
        return JacobiReport { exhaustive: true, triples, failures };
    }
    let mut rng = sampling::rng(seed, &format!("jacobi.{}", alg.root_type()));
    let mut element = || {
        use rand::Rng;
        SparseVector::from_pairs(d, (0..3).map(|_| (rng.gen_range(0..d), sampling::nonzero_int(&mut rng, 3))).collect::<Vec<_>>())
    };
    for _ in 0..JACOBI_RANDOM_TRIPLES {
        let (x, y, z) = (element(), element(), element());
        if !jacobi_sum(alg, &x, &y, &z).is_zero() {
            failures += 1;
        }
    }
    JacobiReport { exhaustive: false, triples: JACOBI_RANDOM_TRIPLES, failures }
}

/// Every type accepted under the rank cap, classical first.
pub fn all_types(max_rank: usize) -> Vec<RootSystemType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=max_rank {
            if let Ok(t) = RootSystemType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out.extend(exceptional());
    out
}

/// Every embedding the library constructs for `alg`, one per kind; kinds
/// that do not apply to the type are skipped.
pub fn constructed_embeddings(alg: &Arc<ChevalleyAlgebra>) -> Vec<Embedding> {
    let mut out: Vec<Embedding> = Vec::new();
    for emb in [highest_root_sl2(alg), minuscule_sl3(alg), long_root_subalgebra(alg), so44(alg)].into_iter().flatten() {
        if out.iter().all(|e| e.kind() != emb.kind()) {
            out.push(emb);
        }
    }
    out
}

fn grading_claim(id: String, anchor: &str, alg: &ChevalleyAlgebra, g: Result<Grading>) -> ClaimReport {
    let computed = g.and_then(|g| {
        Ok(json!({ "multiplicative": g.is_multiplicative(alg)?, "total_dim": g.total_dim() }))
    });
    ClaimReport::from_result(id, anchor, json!({ "multiplicative": true, "total_dim": alg.dim() }), computed, None)
}

/// Jacobi identity per ambient type, minuscule check per constructed
/// embedding, multiplicativity per computed grading.
pub fn verify_properties(opts: &VerifyOptions) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for t in all_types(opts.max_rank) {
        let alg = match algebra(t, opts.max_rank, opts.convention) {
            Ok(a) => a,
            Err(e) => {
                out.push(ClaimReport::new(format!("props.build.{t}"), "Chevalley basis", json!(true), json!({"error": e.to_string()}), None));
                continue;
            }
        };
        let j = jacobi_check(&alg, opts.seed);
        out.push(ClaimReport::new(
            format!("props.jacobi.{t}"),
            "Jacobi identity for the Chevalley structure constants",
            json!({ "exhaustive": j.exhaustive, "failures": 0, "triples": j.triples }),
            serde_json::to_value(&j).expect("report serializes"),
            (!j.exhaustive).then_some(opts.seed),
        ));
        out.push(grading_claim(
            format!("props.grading.{t}.highest_coroot"),
            "grading by the highest coroot",
            &alg,
            grade_by_cocharacter(&alg, &Cocharacter::highest_coroot(alg.root_system())),
        ));
        for emb in constructed_embeddings(&alg) {
            let kind = emb.kind().name();
            let computed = check_minuscule(&emb).map(|r| json!({ "minuscule": r.minuscule, "witness": r.witness }));
            out.push(ClaimReport::from_result(
                format!("props.minuscule.{t}.{kind}"),
                "every composition factor of g/j is minuscule",
                json!({ "minuscule": true, "witness": null }),
                computed,
                None,
            ));
            out.push(grading_claim(
                format!("props.grading.{t}.{kind}.center"),
                "Vinberg grading by the center of J",
                &alg,
                grade_by_center(&emb),
            ));
            if let Some(mu) = emb.cocharacter() {
                out.push(grading_claim(
                    format!("props.grading.{t}.{kind}.cocharacter"),
                    "grading by the cocharacter mu",
                    &alg,
                    grade_by_cocharacter(&alg, mu),
                ));
            }
        }
    }
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    Table3,
    Traces,
    Tensors,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "table1" => Suite::Table1,
            "table2" => Suite::Table2,
            "table3" => Suite::Table3,
            "traces" => Suite::Traces,
            "tensors" => Suite::Tensors,
            "all" => Suite::All,
            _ => return Err(Error::usage(format!("unknown suite {s:?}"))),
        })
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<ClaimReport> {
    let mut out = match suite {
        Suite::Table1 => verify_table1(opts),
        Suite::Table2 => verify_table2(opts),
        Suite::Table3 => verify_table3(opts),
        Suite::Traces => verify_lemma_traces(opts),
        Suite::Tensors => verify_tensors(opts),
        Suite::All => {
            let mut v = verify_table1(opts);
            v.extend(verify_table2(opts));
            v.extend(verify_table3(opts));
            v.extend(verify_lemma_traces(opts));
            v.extend(verify_tensors(opts));
            v
        }
    };
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json(reports: &[ClaimReport]) -> String {
    let v = serde_json::to_value(reports).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}
