//! The Jordan pair (𝔤′(1), 𝔤′(−1)) carried by the stock subalgebra, and the
//! cubic norm of the associated Jordan algebra.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::poly::{interpolate_homogeneous, symmetric_det3, Polynomial};
use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::embeddings::{minuscule_sl3, Embedding};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank, solve, Rational, SparseMatrix, SparseVector};
use crate::gradings::{stock, Stock};
use crate::root_system::Family;
use crate::sampling;

const Y0_ATTEMPTS: usize = 64;
const PROBES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// 𝔤′(1) = V.
    Plus,
    /// 𝔤′(−1) = V∨.
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

#[derive(Clone, Debug)]
pub struct JordanContext {
    alg: Arc<ChevalleyAlgebra>,
    sl3: Embedding,
    stock: Stock,
    v_basis: Vec<usize>,
    vdual_basis: Vec<usize>,
    v_pos: HashMap<usize, usize>,
    vdual_pos: HashMap<usize, usize>,
    y0: Vec<Rational>,
    /// Q_{y0}⁻¹ y0, the unit of the y0-homotope.
    unit: Vec<Rational>,
    /// Generic directions used to interpolate the norm at nongeneric points.
    probes: Vec<Vec<Rational>>,
}

/// Minimal-polynomial data x³ = T x² − S x + N e of an element of the homotope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormData {
    pub trace: Rational,
    pub quadratic: Rational,
    pub norm: Rational,
}

impl JordanContext {
    pub fn new(alg: &Arc<ChevalleyAlgebra>, seed: u64) -> Result<Self> {
        let t = alg.root_type();
        if !matches!(t.family, Family::F | Family::E) {
            return Err(Error::usage(format!("the Jordan pair is built for F4 and E-types, not {t}")));
        }
        let sl3 = minuscule_sl3(alg)?;
        let st = stock(alg, &sl3)?;
        let indices = |k: i64| -> Result<Vec<usize>> {
            let comp = st.component(k);
            let mut out = Vec::new();
            for v in comp.basis() {
                match v.entries() {
                    [(i, _)] if alg.basis_root(*i).is_some() => out.push(*i),
                    _ => return Err(Error::structural("stock component is not spanned by root vectors")),
                }
            }
            out.sort_unstable();
            Ok(out)
        };
        let v_basis = indices(1)?;
        let vdual_basis = indices(-1)?;
        if v_basis.len() != vdual_basis.len() {
            return Err(Error::structural("V and V∨ have different dimensions"));
        }
        let v_pos = v_basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let vdual_pos = vdual_basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut ctx = JordanContext {
            alg: alg.clone(),
            sl3,
            stock: st,
            v_basis,
            vdual_basis,
            v_pos,
            vdual_pos,
            y0: Vec::new(),
            unit: Vec::new(),
            probes: Vec::new(),
        };
        let n = ctx.dim_v();
        let mut rng = sampling::rng(seed, "jordan.y0");
        for _ in 0..Y0_ATTEMPTS {
            let y0 = sampling::small_ints(&mut rng, n, 3);
            let q = ctx.q_matrix(&y0, Side::Minus)?;
            if rank(&q) == n {
                let e = solve(&q, &SparseVector::from_dense(&y0))?
                    .ok_or_else(|| Error::structural("invertible Q_{y0} failed to solve"))?;
                ctx.y0 = y0;
                ctx.unit = e.to_dense();
                break;
            }
        }
        if ctx.y0.is_empty() {
            return Err(Error::usage("no invertible y0 found; try another seed"));
        }
        let mut rng = sampling::rng(seed, "jordan.probes");
        for _ in 0..Y0_ATTEMPTS {
            if ctx.probes.len() == PROBES {
                break;
            }
            let z = sampling::small_ints(&mut rng, n, 3);
            if ctx.norm_data(&z)?.is_some() {
                ctx.probes.push(z);
            }
        }
        if ctx.probes.len() < PROBES {
            return Err(Error::structural("could not find generic elements of V"));
        }
        Ok(ctx)
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn sl3(&self) -> &Embedding {
        &self.sl3
    }

    pub fn stock(&self) -> &Stock {
        &self.stock
    }

    pub fn dim_v(&self) -> usize {
        self.v_basis.len()
    }

    pub fn v_basis_indices(&self) -> &[usize] {
        &self.v_basis
    }

    pub fn vdual_basis_indices(&self) -> &[usize] {
        &self.vdual_basis
    }

    pub fn y0(&self) -> &[Rational] {
        &self.y0
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    /// Basis of 𝔥, the centralizer of the sl₃.
    pub fn h_basis(&self) -> Vec<LieElement> {
        self.stock.centralizer.basis().iter().map(|v| self.alg.element(v.clone()).expect("ambient vector")).collect()
    }

    fn basis(&self, side: Side) -> &[usize] {
        match side {
            Side::Plus => &self.v_basis,
            Side::Minus => &self.vdual_basis,
        }
    }

    pub fn ambient(&self, coords: &[Rational], side: Side) -> Result<SparseVector> {
        let basis = self.basis(side);
        if coords.len() != basis.len() {
            return Err(Error::usage(format!("expected {} coordinates, got {}", basis.len(), coords.len())));
        }
        Ok(SparseVector::from_pairs(
            self.alg.dim(),
            coords.iter().zip(basis).filter(|(c, _)| !c.is_zero()).map(|(c, &b)| (b, c.clone())),
        ))
    }

    pub fn coords(&self, v: &SparseVector, side: Side) -> Option<Vec<Rational>> {
        let pos = match side {
            Side::Plus => &self.v_pos,
            Side::Minus => &self.vdual_pos,
        };
        let mut out = vec![Rational::zero(); self.dim_v()];
        for (i, c) in v.iter() {
            out[*pos.get(&i)?] = c.clone();
        }
        Some(out)
    }

    fn side_of(&self, v: &SparseVector) -> Option<Side> {
        if self.coords(v, Side::Plus).is_some() {
            Some(Side::Plus)
        } else if self.coords(v, Side::Minus).is_some() {
            Some(Side::Minus)
        } else {
            None
        }
    }

    fn ad2(&self, x: &SparseVector, y: &SparseVector) -> SparseVector {
        let t = self.alg.bracket_coords(x, y);
        self.alg.bracket_coords(x, &t)
    }

    /// Q_x y = (ad x)² y for x ∈ 𝔤′(ε), y ∈ 𝔤′(−ε).
    pub fn jordan_q(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        for v in [x, y] {
            if v.root_type() != self.alg.root_type() {
                return Err(Error::usage(format!("element of {} used with {}", v.root_type(), self.alg.root_type())));
            }
        }
        let sx = self.side_of(x.coords()).ok_or_else(|| Error::usage("x is not in 𝔤′(1) or 𝔤′(−1)"))?;
        let sy = self.side_of(y.coords()).ok_or_else(|| Error::usage("y is not in 𝔤′(1) or 𝔤′(−1)"))?;
        // Zero lies on both sides.
        let compatible = sx != sy || x.is_zero() || y.is_zero();
        if !compatible {
            return Err(Error::usage("x and y lie in the same graded component"));
        }
        self.alg.element(self.ad2(x.coords(), y.coords()))
    }

    /// Matrix of Q_x from the opposite side to the side of `x`.
    pub fn q_matrix(&self, x: &[Rational], side: Side) -> Result<SparseMatrix> {
        let xa = self.ambient(x, side)?;
        let n = self.dim_v();
        let mut columns = Vec::with_capacity(n);
        for &b in self.basis(side.opposite()) {
            let img = self.ad2(&xa, &SparseVector::unit(self.alg.dim(), b));
            let c = self.coords(&img, side).ok_or_else(|| Error::structural("(ad x)² y left the graded component"))?;
            columns.push(SparseVector::from_dense(&c));
        }
        Ok(SparseMatrix::from_columns(n, &columns))
    }

    /// Q_{Q_x y} = Q_x Q_y Q_x for x ∈ V, y ∈ V∨.
    pub fn fundamental_identity(&self, x: &[Rational], y: &[Rational]) -> Result<bool> {
        let qx = self.q_matrix(x, Side::Plus)?;
        let qy = self.q_matrix(y, Side::Minus)?;
        let z = qx.mul_vec(&SparseVector::from_dense(y))?.to_dense();
        let qz = self.q_matrix(&z, Side::Plus)?;
        Ok(qz == qx.mul(&qy)?.mul(&qx)?)
    }

    fn apply_q(&self, x: &[Rational], side: Side, y: &[Rational]) -> Result<Vec<Rational>> {
        let v = self.ad2(&self.ambient(x, side)?, &self.ambient(y, side.opposite())?);
        self.coords(&v, side).ok_or_else(|| Error::structural("(ad x)² y left the graded component"))
    }

    /// Solves x³ = T x² − S x + N e in the y0-homotope; `None` when x, x², e
    /// are linearly dependent.
    pub fn norm_data(&self, x: &[Rational]) -> Result<Option<NormData>> {
        let x2 = self.apply_q(x, Side::Plus, &self.y0)?;
        let qy0x = self.apply_q(&self.y0, Side::Minus, x)?;
        let x3 = self.apply_q(x, Side::Plus, &qy0x)?;
        let m = SparseMatrix::from_columns(
            self.dim_v(),
            &[SparseVector::from_dense(&x2), SparseVector::from_dense(x), SparseVector::from_dense(&self.unit)],
        );
        if rank(&m) < 3 {
            return Ok(None);
        }
        let sol = solve(&m, &SparseVector::from_dense(&x3))?.ok_or_else(|| {
            Error::structural(format!("x³ is not in the span of x², x, e (residual nonzero at x = {x:?})"))
        })?;
        Ok(Some(NormData { trace: sol.get(0), quadratic: -sol.get(1), norm: sol.get(2) }))
    }

    /// The cubic norm f(x), the constant term N of the generic minimal polynomial.
    pub fn cubic_norm(&self, x: &LieElement) -> Result<Rational> {
        if x.root_type() != self.alg.root_type() {
            return Err(Error::usage(format!("element of {} used with {}", x.root_type(), self.alg.root_type())));
        }
        let c = self.coords(x.coords(), Side::Plus).ok_or_else(|| Error::usage("x is not in 𝔤′(1)"))?;
        self.cubic_norm_at(&c)
    }

    pub fn cubic_norm_at(&self, x: &[Rational]) -> Result<Rational> {
        if let Some(d) = self.norm_data(x)? {
            return Ok(d.norm);
        }
        // N is cubic, so N(x + tz) at t = 1..4 determines N(x).
        'probe: for z in &self.probes {
            let mut values = Vec::with_capacity(4);
            for t in 1..=4 {
                let t = Rational::from(t);
                let p: Vec<Rational> = x.iter().zip(z).map(|(a, b)| a + &(&t * b)).collect();
                match self.norm_data(&p)? {
                    Some(d) => values.push(d.norm),
                    None => continue 'probe,
                }
            }
            let w = [4, -6, 4, -1];
            return Ok(values.iter().zip(w).map(|(v, c)| v * &Rational::from(c)).sum());
        }
        Err(Error::structural("no generic line through x"))
    }

    /// d/dt f(x + t[m, x]) at t = 0, from four exact samples of a cubic.
    pub fn norm_derivative(&self, m: &LieElement, x: &[Rational]) -> Result<Option<Rational>> {
        let mx = self.alg.bracket_coords(m.coords(), &self.ambient(x, Side::Plus)?);
        let Some(mx) = self.coords(&mx, Side::Plus) else {
            return Ok(None);
        };
        let mut p = Vec::with_capacity(4);
        for t in 0..4 {
            let t = Rational::from(t);
            let pt: Vec<Rational> = x.iter().zip(&mx).map(|(a, b)| a + &(&t * b)).collect();
            p.push(self.cubic_norm_at(&pt)?);
        }
        let w = [-11, 18, -9, 2];
        let s: Rational = p.iter().zip(w).map(|(v, c)| v * &Rational::from(c)).sum();
        Ok(Some(s / Rational::from(6)))
    }

    /// Whether `m` annihilates f at every sampled point.
    pub fn norm_invariance(&self, m: &LieElement, samples: usize, seed: u64) -> Result<bool> {
        let mut rng = sampling::rng(seed, "jordan.invariance");
        for _ in 0..samples {
            let x = sampling::small_ints(&mut rng, self.dim_v(), 4);
            match self.norm_derivative(m, &x)? {
                Some(d) if d.is_zero() => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeterminantReport {
    /// f = k · det of the symmetric matrix with diagonal uᵢ x_{dᵢ} and x_{oᵢ} opposite.
    pub k: Rational,
    pub u: Vec<Rational>,
    pub diagonal: Vec<usize>,
    pub off_diagonal: Vec<usize>,
    pub coefficients_match: bool,
    pub points: usize,
    pub mismatches: usize,
}

impl DeterminantReport {
    pub fn passed(&self) -> bool {
        !self.k.is_zero() && self.coefficients_match && self.mismatches == 0
    }
}

fn failed_det(points: usize) -> DeterminantReport {
    DeterminantReport {
        k: Rational::zero(),
        u: Vec::new(),
        diagonal: Vec::new(),
        off_diagonal: Vec::new(),
        coefficients_match: false,
        points,
        mismatches: points,
    }
}

/// Identifies the F₄ cubic norm on V (dim 6) with a 3×3 symmetric determinant
/// after a diagonal change of variables.
pub fn determinant_match(ctx: &JordanContext, points: usize, seed: u64) -> Result<DeterminantReport> {
    let t = ctx.algebra().root_type();
    if t.family != Family::F || ctx.dim_v() != 6 {
        return Err(Error::usage(format!("determinant match is defined for F4, not {t}")));
    }
    let (f, _) = interpolate_homogeneous(6, 3, |x| ctx.cubic_norm_at(x))?;
    let mono = |entries: &[(usize, u32)]| {
        let mut m = vec![0u32; 6];
        for &(i, e) in entries {
            m[i] += e;
        }
        m
    };
    let squared: Vec<usize> = (0..6).filter(|&i| f.terms().keys().any(|m| m[i] == 2)).collect();
    if squared.len() != 3 {
        return Ok(failed_det(points));
    }
    let off: Vec<usize> = squared;
    let diag: Vec<usize> = (0..6).filter(|i| !off.contains(i)).collect();
    // Pair each diagonal variable with the off-diagonal one it multiplies squared.
    let mut opposite = Vec::with_capacity(3);
    for &d in &diag {
        let partners: Vec<usize> = off.iter().copied().filter(|&o| !f.coefficient(&mono(&[(d, 1), (o, 2)])).is_zero()).collect();
        match partners.as_slice() {
            [o] => opposite.push(*o),
            _ => return Ok(failed_det(points)),
        }
    }
    let k = f.coefficient(&mono(&[(opposite[0], 1), (opposite[1], 1), (opposite[2], 1)])) / Rational::from(2);
    if k.is_zero() {
        return Ok(failed_det(points));
    }
    let u: Vec<Rational> = diag
        .iter()
        .zip(&opposite)
        .map(|(&d, &o)| -f.coefficient(&mono(&[(d, 1), (o, 2)])) / &k)
        .collect();
    let mut terms = vec![
        (mono(&[(diag[0], 1), (diag[1], 1), (diag[2], 1)]), &k * &u[0] * &u[1] * &u[2]),
        (mono(&[(opposite[0], 1), (opposite[1], 1), (opposite[2], 1)]), Rational::from(2) * &k),
    ];
    for i in 0..3 {
        terms.push((mono(&[(diag[i], 1), (opposite[i], 2)]), -(&k * &u[i])));
    }
    let coefficients_match = Polynomial::from_terms(6, terms) == f;

    let mut rng = sampling::rng(seed, "jordan.determinant");
    let mut mismatches = 0;
    for _ in 0..points {
        let x = sampling::small_ints(&mut rng, 6, 6);
        let d = [&u[0] * &x[diag[0]], &u[1] * &x[diag[1]], &u[2] * &x[diag[2]]];
        let o = [x[opposite[0]].clone(), x[opposite[1]].clone(), x[opposite[2]].clone()];
        if ctx.cubic_norm_at(&x)? != &k * &symmetric_det3(&d, &o) {
            mismatches += 1;
        }
    }
    Ok(DeterminantReport { k, u, diagonal: diag, off_diagonal: opposite, coefficients_match, points, mismatches })
}
