//! The symplectic space W = 𝔤₁ of the highest-root grading, with its
//! alternating form, quartic q and trilinear map t.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::embeddings::{highest_root_sl2, Embedding};
use crate::error::{Error, Result};
use crate::exact_linalg::{inverse, rank, Rational, SparseMatrix, SparseVector};
use crate::sampling;

/// Number of random points used by [`SymplecticContext::invariance_check`].
pub const INVARIANCE_SAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantForm {
    Gram,
    Quartic,
}

#[derive(Clone, Debug)]
pub struct SymplecticContext {
    emb: Embedding,
    /// Ambient root indices of the roots γ with ⟨γ, β∨⟩ = 1.
    w_roots: Vec<usize>,
    /// Ambient basis indices of the corresponding root vectors.
    w_basis: Vec<usize>,
    w_pos: HashMap<usize, usize>,
    e: LieElement,
    f: LieElement,
    e_index: usize,
    gram: SparseMatrix,
    /// Inverse of the transposed gram matrix.
    dual: SparseMatrix,
}

impl SymplecticContext {
    pub fn new(alg: &Arc<ChevalleyAlgebra>) -> Result<Self> {
        let emb = highest_root_sl2(alg)?;
        let rs = alg.root_system();
        let beta = rs.highest_root().coords.clone();
        let w_roots: Vec<usize> =
            (0..rs.roots().len()).filter(|&k| rs.root_pairing(&rs.roots()[k].coords, &beta) == 1).collect();
        let w_basis: Vec<usize> = w_roots.iter().map(|&k| alg.root_basis_index(k)).collect();
        let w_pos = w_basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let e = emb.tag("E").cloned().ok_or_else(|| Error::structural("sl2 triple without E"))?;
        let f = emb.tag("F").cloned().ok_or_else(|| Error::structural("sl2 triple without F"))?;
        let e_index = alg.root_basis_index(rs.root_index(&beta).ok_or_else(|| Error::structural("β missing"))?);
        let n = w_basis.len();
        let mut ctx = SymplecticContext {
            emb,
            w_roots,
            w_basis,
            w_pos,
            e,
            f,
            e_index,
            gram: SparseMatrix::zero(n, n),
            dual: SparseMatrix::zero(n, n),
        };
        let mut triplets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let b = alg.bracket_basis(ctx.w_basis[i], ctx.w_basis[j]).clone();
                let c = ctx.e_coefficient(&b, "[w, w']")?;
                if !c.is_zero() {
                    triplets.push((i, j, c));
                }
            }
        }
        ctx.gram = SparseMatrix::from_triplets(n, n, triplets);
        if ctx.gram.entries().any(|(i, j, v)| ctx.gram.get(j, i) != -v.clone()) {
            return Err(Error::structural("gram matrix is not antisymmetric"));
        }
        ctx.dual = inverse(&ctx.gram.transpose())?.ok_or_else(|| Error::structural("gram matrix is degenerate"))?;
        Ok(ctx)
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        self.emb.ambient()
    }

    pub fn dim_w(&self) -> usize {
        self.w_basis.len()
    }

    pub fn w_roots(&self) -> &[usize] {
        &self.w_roots
    }

    pub fn w_basis_indices(&self) -> &[usize] {
        &self.w_basis
    }

    pub fn w_basis(&self) -> Vec<LieElement> {
        self.w_basis.iter().map(|&b| self.algebra().basis_element(b)).collect()
    }

    pub fn e(&self) -> &LieElement {
        &self.e
    }

    pub fn f(&self) -> &LieElement {
        &self.f
    }

    pub fn gram(&self) -> &SparseMatrix {
        &self.gram
    }

    pub fn gram_rank(&self) -> usize {
        rank(&self.gram)
    }

    /// Position in W coordinates of the root with the given coordinates.
    pub fn w_position(&self, root: &[i64]) -> Option<usize> {
        let k = self.algebra().root_system().root_index(root)?;
        self.w_pos.get(&self.algebra().root_basis_index(k)).copied()
    }

    pub fn element(&self, coords: &[Rational]) -> Result<LieElement> {
        self.algebra().element(self.ambient(coords)?)
    }

    pub fn coords(&self, w: &LieElement) -> Result<Vec<Rational>> {
        if w.root_type() != self.algebra().root_type() {
            return Err(Error::usage(format!("element of {} used in W of {}", w.root_type(), self.algebra().root_type())));
        }
        self.w_coords(w.coords())
    }

    fn ambient(&self, coords: &[Rational]) -> Result<SparseVector> {
        if coords.len() != self.dim_w() {
            return Err(Error::usage(format!("expected {} W coordinates, got {}", self.dim_w(), coords.len())));
        }
        Ok(SparseVector::from_pairs(
            self.algebra().dim(),
            coords.iter().zip(&self.w_basis).filter(|(c, _)| !c.is_zero()).map(|(c, &b)| (b, c.clone())),
        ))
    }

    fn w_coords(&self, v: &SparseVector) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.dim_w()];
        for (i, c) in v.iter() {
            match self.w_pos.get(&i) {
                Some(&p) => out[p] = c.clone(),
                None => return Err(Error::usage("element does not lie in W")),
            }
        }
        Ok(out)
    }

    fn e_coefficient(&self, v: &SparseVector, what: &str) -> Result<Rational> {
        if v.iter().any(|(i, _)| i != self.e_index) {
            return Err(Error::structural(format!("{what} is not proportional to E")));
        }
        Ok(v.get(self.e_index))
    }

    fn bracket(&self, x: &SparseVector, y: &SparseVector) -> SparseVector {
        self.algebra().bracket_coords(x, y)
    }

    pub fn symplectic_form(&self, w: &LieElement, w2: &LieElement) -> Result<Rational> {
        let (a, b) = (self.coords(w)?, self.coords(w2)?);
        self.symplectic_at(&a, &b)
    }

    pub fn symplectic_at(&self, a: &[Rational], b: &[Rational]) -> Result<Rational> {
        let v = self.bracket(&self.ambient(a)?, &self.ambient(b)?);
        self.e_coefficient(&v, "[w, w']")
    }

    /// The scalar q(w) with (ad w)⁴F = q(w)E.
    pub fn quartic_eval(&self, w: &LieElement) -> Result<Rational> {
        self.quartic_at(&self.coords(w)?)
    }

    pub fn quartic_at(&self, w: &[Rational]) -> Result<Rational> {
        self.quartic_ambient(&self.ambient(w)?)
    }

    fn quartic_ambient(&self, w: &SparseVector) -> Result<Rational> {
        let mut p = self.f.coords().clone();
        for _ in 0..4 {
            p = self.bracket(w, &p);
        }
        self.e_coefficient(&p, "(ad w)⁴F")
    }

    /// The symmetric 4-linear form Φ with Φ(w,w,w,w) = q(w).
    pub fn polarize_quartic(&self, w1: &LieElement, w2: &LieElement, w3: &LieElement, w4: &LieElement) -> Result<Rational> {
        let args = [self.coords(w1)?, self.coords(w2)?, self.coords(w3)?, self.coords(w4)?];
        self.polarize_at(&args)
    }

    pub fn polarize_at(&self, args: &[Vec<Rational>; 4]) -> Result<Rational> {
        let amb: Vec<SparseVector> = args.iter().map(|a| self.ambient(a)).collect::<Result<_>>()?;
        let mut total = Rational::zero();
        for mask in 1u32..16 {
            let mut s = SparseVector::zero(self.algebra().dim());
            for (k, v) in amb.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s = s.add(v);
                }
            }
            let q = self.quartic_ambient(&s)?;
            if (4 - mask.count_ones()) % 2 == 0 {
                total += q;
            } else {
                total -= q;
            }
        }
        Ok(total / Rational::from(24))
    }

    /// Φ(v, w, w, w), read off from (ad w)³⁻ᵏ ad v (ad w)ᵏ F.
    pub fn quartic_derivative(&self, v: &LieElement, w: &LieElement) -> Result<Rational> {
        let (v, w) = (self.coords(v)?, self.coords(w)?);
        Ok(self.derivatives_ambient(&[self.ambient(&v)?], &self.ambient(&w)?)?.remove(0))
    }

    /// Φ(v, w, w, w) for every v in `vs`.
    fn derivatives_ambient(&self, vs: &[SparseVector], w: &SparseVector) -> Result<Vec<Rational>> {
        let mut powers = vec![self.f.coords().clone()];
        for _ in 0..3 {
            let next = self.bracket(w, powers.last().unwrap());
            powers.push(next);
        }
        let mut out = Vec::with_capacity(vs.len());
        for v in vs {
            let mut acc = SparseVector::zero(self.algebra().dim());
            for (k, pk) in powers.iter().enumerate() {
                let mut t = self.bracket(v, pk);
                for _ in 0..(3 - k) {
                    t = self.bracket(w, &t);
                }
                acc = acc.add(&t);
            }
            out.push(self.e_coefficient(&acc, "directional derivative")? / Rational::from(4));
        }
        Ok(out)
    }

    /// The symmetric trilinear t with ⟨t(x,y,z), u⟩ = Φ(x,y,z,u).
    pub fn trilinear_t(&self, x: &LieElement, y: &LieElement, z: &LieElement) -> Result<LieElement> {
        let t = self.trilinear_at(&self.coords(x)?, &self.coords(y)?, &self.coords(z)?)?;
        self.element(&t)
    }

    pub fn trilinear_at(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vec<Rational>> {
        let phi = if x == y && y == z {
            self.cubic_phi(x)?
        } else {
            self.general_phi(x, y, z)?
        };
        Ok(self.dual.mul_vec(&SparseVector::from_dense(&phi))?.to_dense())
    }

    /// (Φ(w, w, w, u_j))_j via directional derivatives.
    fn cubic_phi(&self, w: &[Rational]) -> Result<Vec<Rational>> {
        let dim = self.algebra().dim();
        let units: Vec<SparseVector> = self.w_basis.iter().map(|&b| SparseVector::unit(dim, b)).collect();
        self.derivatives_ambient(&units, &self.ambient(w)?)
    }

    /// (Φ(x, y, z, u_j))_j by inclusion–exclusion.
    fn general_phi(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vec<Rational>> {
        let dim = self.algebra().dim();
        let args = [self.ambient(x)?, self.ambient(y)?, self.ambient(z)?];
        let mut subsets = Vec::with_capacity(8);
        for mask in 0u32..8 {
            let mut s = SparseVector::zero(dim);
            for (k, v) in args.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s = s.add(v);
                }
            }
            subsets.push((mask.count_ones(), s));
        }
        let sign = |n: u32| if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let mut base = Rational::zero();
        for (size, s) in &subsets {
            if *size > 0 {
                base += sign(4 - size) * self.quartic_ambient(s)?;
            }
        }
        let mut out = Vec::with_capacity(self.dim_w());
        for &b in &self.w_basis {
            let u = SparseVector::unit(dim, b);
            let mut total = base.clone();
            for (size, s) in &subsets {
                total += sign(3 - size) * self.quartic_ambient(&s.add(&u))?;
            }
            out.push(total / Rational::from(24));
        }
        Ok(out)
    }

    /// Whether `m` annihilates the chosen form infinitesimally.
    pub fn invariance_check(&self, form: InvariantForm, m: &LieElement, seed: u64) -> Result<bool> {
        let alg = self.algebra();
        if m.root_type() != alg.root_type() {
            return Err(Error::usage(format!("element of {} used with {}", m.root_type(), alg.root_type())));
        }
        let n = self.dim_w();
        // Matrix of ad m on W; if it leaves W the form cannot be invariant.
        let mut images = Vec::with_capacity(n);
        for &b in &self.w_basis {
            let img = self.bracket(m.coords(), &SparseVector::unit(alg.dim(), b));
            match self.w_coords(&img) {
                Ok(c) => images.push(c),
                Err(_) => return Ok(false),
            }
        }
        match form {
            InvariantForm::Gram => {
                for i in 0..n {
                    for j in i..n {
                        let lhs: Rational = (0..n)
                            .map(|k| &images[i][k] * &self.gram.get(k, j) + &images[j][k] * &self.gram.get(i, k))
                            .sum();
                        if !lhs.is_zero() {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            InvariantForm::Quartic => {
                let mut rng = sampling::rng(seed, "invariance.quartic");
                for _ in 0..INVARIANCE_SAMPLES {
                    let w = sampling::small_ints(&mut rng, n, 5);
                    let mw: Vec<Rational> =
                        (0..n).map(|k| (0..n).map(|i| &w[i] * &images[i][k]).sum()).collect();
                    let d = self.derivatives_ambient(&[self.ambient(&mw)?], &self.ambient(&w)?)?;
                    if !d[0].is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::root_system::build_root_system;

    fn ctx(t: &str) -> SymplecticContext {
        let alg = Arc::new(build_chevalley(&build_root_system(t.parse().unwrap()).unwrap()));
        SymplecticContext::new(&alg).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn gram_is_nondegenerate() {
        let c = ctx("D4");
        assert_eq!(c.dim_w(), 8);
        assert_eq!(c.gram_rank(), 8);
        let c = ctx("G2");
        assert_eq!(c.dim_w(), 4);
        assert_eq!(c.gram_rank(), 4);
    }

    #[test]
    fn quartic_homogeneity_and_zero() {
        let c = ctx("G2");
        let w = ints(&[1, -2, 3, 1]);
        assert!(c.quartic_at(&ints(&[0, 0, 0, 0])).unwrap().is_zero());
        let q = c.quartic_at(&w).unwrap();
        let w3: Vec<Rational> = w.iter().map(|x| x * &Rational::from(3)).collect();
        assert_eq!(c.quartic_at(&w3).unwrap(), q * Rational::from(81));
    }

    #[test]
    fn type_c_quartic_vanishes() {
        let c = ctx("C3");
        let mut rng = sampling::rng(1, "t");
        for _ in 0..10 {
            let w = sampling::small_ints(&mut rng, c.dim_w(), 5);
            assert!(c.quartic_at(&w).unwrap().is_zero());
        }
    }

    #[test]
    fn polarization_and_trilinear_agree() {
        let c = ctx("B3");
        let mut rng = sampling::rng(2, "t");
        let n = c.dim_w();
        let w = sampling::small_ints(&mut rng, n, 3);
        let x = sampling::small_ints(&mut rng, n, 3);
        let y = sampling::small_ints(&mut rng, n, 3);
        let q = c.quartic_at(&w).unwrap();
        assert_eq!(c.polarize_at(&[w.clone(), w.clone(), w.clone(), w.clone()]).unwrap(), q);
        assert_eq!(
            c.polarize_at(&[x.clone(), y.clone(), w.clone(), w.clone()]).unwrap(),
            c.polarize_at(&[y.clone(), x.clone(), w.clone(), w.clone()]).unwrap()
        );
        // Fast and general paths for t(w, w, w).
        let fast = c.trilinear_at(&w, &w, &w).unwrap();
        let general = c.general_phi(&w, &w, &w).unwrap();
        let general = c.dual.mul_vec(&SparseVector::from_dense(&general)).unwrap().to_dense();
        assert_eq!(fast, general);
        assert_eq!(c.symplectic_at(&fast, &w).unwrap(), q);
        // Symmetry of t.
        assert_eq!(c.trilinear_at(&x, &y, &w).unwrap(), c.trilinear_at(&w, &x, &y).unwrap());
        let zero = vec![Rational::zero(); n];
        assert!(c.trilinear_at(&zero, &x, &y).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn coroot_h_is_not_invariant() {
        let c = ctx("D4");
        let h = c.embedding().tag("H").unwrap().clone();
        assert!(!c.invariance_check(InvariantForm::Gram, &h, 1).unwrap());
        let zero = c.algebra().zero();
        assert!(c.invariance_check(InvariantForm::Gram, &zero, 1).unwrap());
        assert!(c.invariance_check(InvariantForm::Quartic, &zero, 1).unwrap());
    }
}
