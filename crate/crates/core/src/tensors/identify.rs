//! Identifications of the quartic with classical invariants.

use serde::Serialize;

use super::poly::{cube_index, hyperdeterminant, interpolate_homogeneous, Monomial, Polynomial};
use super::symplectic::SymplecticContext;
use crate::error::{Error, Result};
use crate::exact_linalg::Rational;
use crate::root_system::{Family, RootSystemType};
use crate::sampling;

#[derive(Clone, Debug, Serialize)]
pub struct HyperdetReport {
    /// The scalar c with q = c · HypDet after the diagonal change of variables.
    pub scalar: Rational,
    /// Diagonal rescaling sᵢⱼₖ, indexed like the tensor entries.
    pub scalings: Vec<Rational>,
    pub points: usize,
    pub mismatches: usize,
    pub max_mismatch: Rational,
    pub rank_one_value: Rational,
    pub unit_value: Rational,
}

impl HyperdetReport {
    pub fn passed(&self) -> bool {
        !self.scalar.is_zero()
            && self.points >= 330
            && self.mismatches == 0
            && self.rank_one_value.is_zero()
            && self.unit_value == self.scalar
    }
}

fn require_type(ctx: &SymplecticContext, family: Family, rank: Option<usize>) -> Result<RootSystemType> {
    let t = ctx.algebra().root_type();
    if t.family != family || rank.is_some_and(|r| r != t.rank) {
        return Err(Error::usage(format!("check not defined for ambient type {t}")));
    }
    Ok(t)
}

fn unit_monomial(n: usize, entries: &[(usize, u32)]) -> Monomial {
    let mut m = vec![0; n];
    for &(i, e) in entries {
        m[i] += e;
    }
    m
}

/// Matches q on W of D₄ against Cayley's hyperdeterminant.
///
/// Coordinates: `wᵢⱼₖ` is the coefficient of the root vector at
/// α₂ + iα₁ + jα₃ + kα₄. The match allows one diagonal rescaling of these
/// coordinates and one global scalar, both solved from four coefficients of q.
pub fn hyperdeterminant_match(ctx: &SymplecticContext, seed: u64) -> Result<HyperdetReport> {
    require_type(ctx, Family::D, Some(4))?;
    let n = ctx.dim_w();
    let mut position = vec![0usize; 8];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let root = [i as i64, 1, j as i64, k as i64];
                position[cube_index(i, j, k)] =
                    ctx.w_position(&root).ok_or_else(|| Error::structural(format!("{root:?} is not in W")))?;
            }
        }
    }
    let to_w = |y: &[Rational]| -> Vec<Rational> {
        let mut w = vec![Rational::zero(); n];
        for (c, &p) in y.iter().zip(&position) {
            w[p] = c.clone();
        }
        w
    };
    let (q, values) = interpolate_homogeneous(8, 4, |y| ctx.quartic_at(&to_w(y)))?;
    let idx = |i, j, k| cube_index(i, j, k);
    let coef = |entries: &[(usize, u32)]| q.coefficient(&unit_monomial(8, entries));

    let c = coef(&[(idx(0, 0, 0), 2), (idx(1, 1, 1), 2)]);
    let mut s = vec![Rational::zero(); 8];
    let mut consistent = !c.is_zero();
    if consistent {
        for u in [idx(0, 0, 1), idx(0, 1, 0), idx(1, 0, 0)] {
            s[u] = Rational::one();
            let bar = 7 - u;
            let b = coef(&[(idx(0, 0, 0), 1), (u, 1), (bar, 1), (idx(1, 1, 1), 1)]);
            s[bar] = -b / (Rational::from(2) * &c);
        }
        let t = coef(&[(idx(0, 0, 0), 1), (idx(0, 1, 1), 1), (idx(1, 0, 1), 1), (idx(1, 1, 0), 1)]);
        let denom = Rational::from(4) * &c * &s[idx(0, 1, 1)] * &s[idx(1, 0, 1)] * &s[idx(1, 1, 0)];
        consistent = !t.is_zero() && !denom.is_zero();
        if consistent {
            s[idx(0, 0, 0)] = t / denom;
            s[idx(1, 1, 1)] = s[idx(0, 0, 0)].recip();
        }
    }
    if !consistent {
        return Ok(HyperdetReport {
            scalar: Rational::zero(),
            scalings: s,
            points: values.len(),
            mismatches: values.len(),
            max_mismatch: Rational::zero(),
            rank_one_value: Rational::zero(),
            unit_value: Rational::zero(),
        });
    }

    let scaled = |y: &[Rational]| -> Vec<Rational> { y.iter().zip(&s).map(|(a, b)| a * b).collect() };
    let mut mismatches = 0;
    let mut max_mismatch = Rational::zero();
    for (p, value) in &values {
        let y: Vec<Rational> = p.iter().map(|&e| Rational::from(e as i64)).collect();
        let diff = (value - &(&c * &hyperdeterminant(&scaled(&y)))).abs();
        if !diff.is_zero() {
            mismatches += 1;
            if diff > max_mismatch {
                max_mismatch = diff;
            }
        }
    }

    let unscale = |t: &[Rational]| -> Vec<Rational> { t.iter().zip(&s).map(|(a, b)| a / b).collect() };
    let mut rng = sampling::rng(seed, "hyperdet.rank-one");
    let (a, b, d) = (
        [sampling::nonzero_int(&mut rng, 9), sampling::nonzero_int(&mut rng, 9)],
        [sampling::nonzero_int(&mut rng, 9), sampling::nonzero_int(&mut rng, 9)],
        [sampling::nonzero_int(&mut rng, 9), sampling::nonzero_int(&mut rng, 9)],
    );
    let mut rank_one = vec![Rational::zero(); 8];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                rank_one[idx(i, j, k)] = &a[i] * &b[j] * &d[k];
            }
        }
    }
    let rank_one_value = ctx.quartic_at(&to_w(&unscale(&rank_one)))?;
    let mut unit = vec![Rational::zero(); 8];
    unit[idx(0, 0, 0)] = Rational::one();
    unit[idx(1, 1, 1)] = Rational::one();
    let unit_value = ctx.quartic_at(&to_w(&unscale(&unit)))?;

    Ok(HyperdetReport {
        scalar: c,
        scalings: s,
        points: values.len(),
        mismatches,
        max_mismatch,
        rank_one_value,
        unit_value,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    /// q = k · (Σ aᵢ x_{γᵢ} x_{β−γᵢ})².
    pub k: Rational,
    pub weights: Vec<Rational>,
    /// W positions of the paired roots (γᵢ, β − γᵢ).
    pub pairs: Vec<(usize, usize)>,
    pub matches: bool,
}

/// For ambient type A, checks that q is a constant times the square of a
/// quadratic form pairing each γ ∈ W with β − γ.
pub fn type_a_square(ctx: &SymplecticContext) -> Result<SquareReport> {
    require_type(ctx, Family::A, None)?;
    let rs = ctx.algebra().root_system();
    let beta = rs.highest_root().coords.clone();
    let n = ctx.dim_w();
    let mut pairs = Vec::new();
    for &k in ctx.w_roots() {
        let g = &rs.roots()[k].coords;
        let partner: Vec<i64> = beta.iter().zip(g).map(|(b, x)| b - x).collect();
        let (i, j) = (
            ctx.w_position(g).ok_or_else(|| Error::structural("root missing from W"))?,
            ctx.w_position(&partner).ok_or_else(|| Error::structural("β − γ missing from W"))?,
        );
        if i < j {
            pairs.push((i, j));
        }
    }
    let (q, _) = interpolate_homogeneous(n, 4, |w| ctx.quartic_at(w))?;
    let pair_monomial = |a: &(usize, usize), b: &(usize, usize)| unit_monomial(n, &[(a.0, 1), (a.1, 1), (b.0, 1), (b.1, 1)]);
    let k = q.coefficient(&pair_monomial(&pairs[0], &pairs[0]));
    if k.is_zero() {
        return Ok(SquareReport { k, weights: Vec::new(), pairs, matches: false });
    }
    let mut weights = vec![Rational::one()];
    for p in &pairs[1..] {
        weights.push(q.coefficient(&pair_monomial(&pairs[0], p)) / (Rational::from(2) * &k));
    }
    let mut terms = Vec::new();
    for (a, wa) in pairs.iter().zip(&weights) {
        for (b, wb) in pairs.iter().zip(&weights) {
            terms.push((pair_monomial(a, b), &k * wa * wb));
        }
    }
    let expected = Polynomial::from_terms(n, terms);
    Ok(SquareReport { matches: expected == q, k, weights, pairs })
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothPointReport {
    /// Coefficient of x_{α₂} in t(v, v, v).
    pub coefficient: Rational,
    /// Whether t(v, v, v) has no other components.
    pub on_alpha2: bool,
    /// ⟨t(v,v,v), v⟩ and q(v), which must agree.
    pub pairing: Rational,
    pub q: Rational,
}

impl SmoothPointReport {
    pub fn passed(&self) -> bool {
        self.on_alpha2 && !self.coefficient.is_zero() && self.pairing == self.q
    }
}

/// t(v, v, v) for v = x_{α₁+α₂} + x_{α₂+α₃} + x_{α₂+α₄} in D₄.
pub fn smooth_point(ctx: &SymplecticContext) -> Result<SmoothPointReport> {
    require_type(ctx, Family::D, Some(4))?;
    let mut v = vec![Rational::zero(); ctx.dim_w()];
    for root in [[1, 1, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1]] {
        let p = ctx.w_position(&root).ok_or_else(|| Error::structural("root missing from W"))?;
        v[p] = Rational::one();
    }
    let t = ctx.trilinear_at(&v, &v, &v)?;
    let a2 = ctx.w_position(&[0, 1, 0, 0]).ok_or_else(|| Error::structural("α₂ missing from W"))?;
    let on_alpha2 = t.iter().enumerate().all(|(i, c)| i == a2 || c.is_zero());
    Ok(SmoothPointReport {
        coefficient: t[a2].clone(),
        on_alpha2,
        pairing: ctx.symplectic_at(&t, &v)?,
        q: ctx.quartic_at(&v)?,
    })
}
