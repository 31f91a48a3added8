//! Split simple Lie algebras over ℚ in a Chevalley basis.
//!
//! Basis order: h₁..h_r, then e_α for the positive roots in root-system
//! order, then e_{−α} in the same order. Structure constants follow Carter:
//! N_{α,β} = ±(p+1) is fixed on extraspecial pairs and propagated to every
//! other pair with the usual quadratic relations.

use std::collections::HashMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exact_linalg::{
    kernel_basis, DenseAccumulator, Rational, SparseMatrix, SparseVector, Subspace,
};
use crate::root_system::{Root, RootSystem, RootSystemType};

/// Sign choice on extraspecial pairs. Any choice yields a Chevalley basis;
/// `Alternate` flips the sign for every other extraspecial pair and exists to
/// check that results do not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    #[default]
    Standard,
    Alternate,
}

/// An element of a Chevalley algebra, as coordinates in its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    ty: RootSystemType,
    coords: SparseVector,
}

impl LieElement {
    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn coords(&self) -> &SparseVector {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        assert_eq!(self.ty, other.ty, "elements of different algebras");
        LieElement { ty: self.ty, coords: self.coords.add(&other.coords) }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        assert_eq!(self.ty, other.ty, "elements of different algebras");
        LieElement { ty: self.ty, coords: self.coords.sub(&other.coords) }
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        LieElement { ty: self.ty, coords: self.coords.scale(c) }
    }

    pub fn add_scaled(&self, c: &Rational, other: &LieElement) -> LieElement {
        assert_eq!(self.ty, other.ty, "elements of different algebras");
        LieElement { ty: self.ty, coords: self.coords.add_scaled(c, &other.coords) }
    }
}

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    convention: SignConvention,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    n: HashMap<(usize, usize), i64>,
    table: Vec<SparseVector>,
}

pub fn build_chevalley(rs: &RootSystem) -> ChevalleyAlgebra {
    ChevalleyAlgebra::with_convention(rs, SignConvention::Standard)
}

impl ChevalleyAlgebra {
    pub fn with_convention(rs: &RootSystem, convention: SignConvention) -> Self {
        let n = structure_constants(rs, convention);
        let rank = rs.rank();
        let p = rs.num_positive();
        let dim = rank + 2 * p;
        let mut labels: Vec<String> = (1..=rank).map(|i| format!("h{i}")).collect();
        for (k, r) in rs.roots().iter().enumerate() {
            let sign = if k < p { '+' } else { '-' };
            let c: Vec<String> = r.coords.iter().map(|x| x.abs().to_string()).collect();
            labels.push(format!("e{sign}[{}]", c.join(",")));
        }
        let label_index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();

        let mut table = vec![SparseVector::zero(dim); dim * dim];
        for (a, ra) in rs.roots().iter().enumerate() {
            let ba = rank + a;
            for i in 0..rank {
                let c: i64 = (0..rank).map(|k| ra.coords[k] * rs.cartan()[k][i]).sum();
                if c != 0 {
                    table[i * dim + ba] = SparseVector::unit(dim, ba).scale(&Rational::from_int(c));
                    table[ba * dim + i] = SparseVector::unit(dim, ba).scale(&Rational::from_int(-c));
                }
            }
            for (b, rb) in rs.roots().iter().enumerate() {
                let bb = rank + b;
                if b == rs.negative_index(a) {
                    let h = rs.coroot_coeffs(&ra.coords);
                    table[ba * dim + bb] = SparseVector::from_pairs(
                        dim,
                        h.iter().enumerate().map(|(i, &c)| (i, Rational::from_int(c))),
                    );
                    continue;
                }
                let sum: Vec<i64> = ra.coords.iter().zip(&rb.coords).map(|(x, y)| x + y).collect();
                if let Some(t) = rs.root_index(&sum) {
                    let c = n[&(a, b)];
                    table[ba * dim + bb] = SparseVector::unit(dim, rank + t).scale(&Rational::from_int(c));
                }
            }
        }
        ChevalleyAlgebra { rs: rs.clone(), convention, labels, label_index, n, table }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_type(&self) -> RootSystemType {
        self.rs.root_type()
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Basis index of the root vector e_γ for a root index γ.
    pub fn root_basis_index(&self, root_idx: usize) -> usize {
        self.rank() + root_idx
    }

    /// Root index of a basis element, or `None` for Cartan elements.
    pub fn basis_root(&self, basis_idx: usize) -> Option<usize> {
        basis_idx.checked_sub(self.rank())
    }

    pub fn basis_root_coords(&self, basis_idx: usize) -> Option<&Root> {
        self.basis_root(basis_idx).map(|r| &self.rs.roots()[r])
    }

    /// N_{α,β} for root indices with α + β a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Option<i64> {
        self.n.get(&(a, b)).copied()
    }

    pub fn element(&self, coords: SparseVector) -> Result<LieElement> {
        if coords.dim() != self.dim() {
            return Err(Error::usage(format!(
                "coordinate vector of dim {} for an algebra of dim {}",
                coords.dim(),
                self.dim()
            )));
        }
        Ok(LieElement { ty: self.root_type(), coords })
    }

    pub fn zero(&self) -> LieElement {
        LieElement { ty: self.root_type(), coords: SparseVector::zero(self.dim()) }
    }

    pub fn basis_element(&self, i: usize) -> LieElement {
        LieElement { ty: self.root_type(), coords: SparseVector::unit(self.dim(), i) }
    }

    pub fn h(&self, i: usize) -> LieElement {
        self.basis_element(i)
    }

    /// The root vector e_γ.
    pub fn e(&self, root: &[i64]) -> Result<LieElement> {
        let idx = self
            .rs
            .root_index(root)
            .ok_or_else(|| Error::usage(format!("{root:?} is not a root of {}", self.root_type())))?;
        Ok(self.basis_element(self.root_basis_index(idx)))
    }

    /// The coroot h_γ = [e_γ, e_{−γ}].
    pub fn coroot(&self, root: &[i64]) -> Result<LieElement> {
        if !self.rs.is_root(root) {
            return Err(Error::usage(format!("{root:?} is not a root of {}", self.root_type())));
        }
        let h = self.rs.coroot_coeffs(root);
        Ok(LieElement {
            ty: self.root_type(),
            coords: SparseVector::from_pairs(
                self.dim(),
                h.iter().enumerate().map(|(i, &c)| (i, Rational::from_int(c))),
            ),
        })
    }

    /// Structure table entry [b_i, b_j].
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVector {
        &self.table[i * self.dim() + j]
    }

    pub(crate) fn bracket_coords(&self, x: &SparseVector, y: &SparseVector) -> SparseVector {
        let dim = self.dim();
        let mut acc = DenseAccumulator::new(dim);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let t = &self.table[i * dim + j];
                if t.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in t.iter() {
                    acc.add(k, &(&ab * c));
                }
            }
        }
        acc.finish()
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        if x.ty != self.root_type() || x.coords.dim() != self.dim() {
            return Err(Error::usage(format!(
                "element of {} used with the algebra of {}",
                x.ty,
                self.root_type()
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(LieElement { ty: self.root_type(), coords: self.bracket_coords(&x.coords, &y.coords) })
    }

    /// Matrix of y ↦ [x, y].
    pub fn ad_matrix(&self, x: &LieElement) -> Result<SparseMatrix> {
        self.check(x)?;
        Ok(self.ad_coords(&x.coords))
    }

    pub(crate) fn ad_coords(&self, x: &SparseVector) -> SparseMatrix {
        let dim = self.dim();
        let mut triplets = Vec::new();
        for (i, a) in x.iter() {
            for j in 0..dim {
                for (k, c) in self.table[i * dim + j].iter() {
                    triplets.push((k, j, a * c));
                }
            }
        }
        SparseMatrix::from_triplets(dim, dim, triplets)
    }

    /// {z : [g, z] = 0 for every generator g}.
    pub fn centralizer(&self, generators: &[LieElement]) -> Result<Subspace> {
        let dim = self.dim();
        if generators.is_empty() {
            return Ok(Subspace::whole(dim));
        }
        let mut blocks = Vec::with_capacity(generators.len());
        for g in generators {
            blocks.push(self.ad_matrix(g)?);
        }
        let stacked = SparseMatrix::vstack(&blocks)?;
        Ok(Subspace::span(dim, kernel_basis(&stacked)))
    }

    /// Pinned automorphism induced by a diagram symmetry, as a matrix.
    pub fn diagram_automorphism(&self, perm: &[usize]) -> Result<SparseMatrix> {
        let images = self.automorphism_images(perm)?;
        let dim = self.dim();
        let rank = self.rank();
        let mut triplets: Vec<(usize, usize, Rational)> = (0..rank).map(|i| (perm[i], i, Rational::one())).collect();
        for (src, (dst, c)) in images.iter().enumerate() {
            triplets.push((rank + dst, rank + src, Rational::from_int(*c)));
        }
        let m = SparseMatrix::from_triplets(dim, dim, triplets);
        // Post-check: σ[bᵢ, bⱼ] = [σbᵢ, σbⱼ] on all basis pairs.
        let cols: Vec<SparseVector> = (0..dim)
            .map(|j| m.mul_vec(&SparseVector::unit(dim, j)))
            .collect::<Result<_>>()?;
        for i in 0..dim {
            for j in i + 1..dim {
                let lhs = m.mul_vec(self.bracket_basis(i, j))?;
                let rhs = self.bracket_coords(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Err(Error::structural(format!(
                        "diagram automorphism fails on ({}, {})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(m)
    }

    /// The scalar by which the pinned automorphism acts on 𝔤_α for α fixed by `perm`.
    pub fn sign_on_fixed_root(&self, perm: &[usize], alpha: &Root) -> Result<i64> {
        let idx = self
            .rs
            .root_index(&alpha.coords)
            .ok_or_else(|| Error::usage(format!("{:?} is not a root", alpha.coords)))?;
        if self.rs.permute(perm, &alpha.coords) != alpha.coords {
            return Err(Error::usage(format!("{:?} is not fixed by {perm:?}", alpha.coords)));
        }
        let images = self.automorphism_images(perm)?;
        Ok(images[idx].1)
    }

    /// For each root index γ: (index of π(γ), c) with σ(e_γ) = c·e_{π(γ)}.
    fn automorphism_images(&self, perm: &[usize]) -> Result<Vec<(usize, i64)>> {
        let rs = &self.rs;
        if !rs.diagram_symmetries().iter().any(|p| p == perm) {
            return Err(Error::usage(format!("{perm:?} is not a diagram symmetry of {}", rs.root_type())));
        }
        let rank = rs.rank();
        let p = rs.num_positive();
        let mut out = vec![(0usize, 0i64); 2 * p];
        for sign in [1i64, -1] {
            for k in 0..p {
                let gamma: Vec<i64> = rs.positive_roots()[k].coords.iter().map(|c| sign * c).collect();
                let idx = rs.root_index(&gamma).unwrap();
                let target = rs.root_index(&rs.permute(perm, &gamma)).unwrap();
                if gamma.iter().map(|c| c.abs()).sum::<i64>() == 1 {
                    out[idx] = (target, 1);
                    continue;
                }
                let (i, rest) = (0..rank)
                    .find_map(|i| {
                        let mut g = gamma.clone();
                        g[i] -= sign;
                        rs.root_index(&g).map(|r| (i, r))
                    })
                    .unwrap();
                let mut ai = vec![0; rank];
                ai[i] = sign;
                let ai_idx = rs.root_index(&ai).unwrap();
                let pai_idx = rs.root_index(&rs.permute(perm, &ai)).unwrap();
                let (prest, c_rest) = out[rest];
                let num = self.n[&(pai_idx, prest)] * c_rest;
                let den = self.n[&(ai_idx, rest)];
                if num % den != 0 {
                    return Err(Error::structural("non-integral automorphism coefficient"));
                }
                out[idx] = (target, num / den);
            }
        }
        Ok(out)
    }

    /// JSON object `{label: "num/den"}` for an element.
    pub fn element_to_json(&self, x: &LieElement) -> Value {
        let mut map = Map::new();
        for (i, v) in x.coords.iter() {
            map.insert(self.labels[i].clone(), Value::String(v.to_string()));
        }
        Value::Object(map)
    }

    pub fn element_from_json(&self, v: &Value) -> Result<LieElement> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::usage("element JSON must be an object of label to rational"))?;
        let mut pairs = Vec::with_capacity(obj.len());
        for (label, val) in obj {
            let idx = self
                .label_index(label)
                .ok_or_else(|| Error::usage(format!("unknown basis label {label:?} for {}", self.root_type())))?;
            let q: Rational = match val {
                Value::String(s) => s.parse().map_err(|e| Error::usage(format!("{e}")))?,
                Value::Number(n) if n.is_i64() => Rational::from_int(n.as_i64().unwrap()),
                _ => return Err(Error::usage(format!("coefficient of {label} must be a \"num/den\" string"))),
            };
            pairs.push((idx, q));
        }
        self.element(SparseVector::from_pairs(self.dim(), pairs))
    }
}

/// Carter's algorithm: N on extraspecial pairs, propagated to all pairs.
fn structure_constants(rs: &RootSystem, convention: SignConvention) -> HashMap<(usize, usize), i64> {
    let p = rs.num_positive();
    let roots = rs.roots();
    let add = |a: usize, b: usize| -> Option<usize> {
        let s: Vec<i64> = roots[a].coords.iter().zip(&roots[b].coords).map(|(x, y)| x + y).collect();
        rs.root_index(&s)
    };
    let sub = |a: usize, b: usize| -> Option<usize> {
        let s: Vec<i64> = roots[a].coords.iter().zip(&roots[b].coords).map(|(x, y)| x - y).collect();
        rs.root_index(&s)
    };
    let norm = |a: usize| Rational::from_int(rs.norm2(&roots[a].coords));
    let string_p = |a: usize, b: usize| -> i64 {
        let mut k = 0;
        let mut g = roots[b].coords.clone();
        loop {
            for (x, y) in g.iter_mut().zip(&roots[a].coords) {
                *x -= y;
            }
            if rs.is_root(&g) {
                k += 1;
            } else {
                return k;
            }
        }
    };

    let mut npos: HashMap<(usize, usize), Rational> = HashMap::new();

    fn general(
        x: usize,
        y: usize,
        p: usize,
        rs: &RootSystem,
        npos: &HashMap<(usize, usize), Rational>,
    ) -> Rational {
        let neg = |i: usize| rs.negative_index(i);
        let roots = rs.roots();
        let norm = |a: usize| Rational::from_int(rs.norm2(&roots[a].coords));
        let (xp, yp) = (x < p, y < p);
        if xp && yp {
            return npos[&(x, y)].clone();
        }
        if !xp && !yp {
            return -npos[&(neg(x), neg(y))].clone();
        }
        let s: Vec<i64> = roots[x].coords.iter().zip(&roots[y].coords).map(|(a, b)| -(a + b)).collect();
        let z = rs.root_index(&s).expect("sum is a root");
        if (y < p) == (z < p) {
            norm(z) / norm(x) * general(y, z, p, rs, npos)
        } else {
            norm(z) / norm(y) * general(z, x, p, rs, npos)
        }
    }

    for xi in 0..p {
        let pairs: Vec<(usize, usize)> = (0..xi)
            .filter_map(|a| sub(xi, a).filter(|&b| b < p && a < b).map(|b| (a, b)))
            .collect();
        let Some(&(g, d)) = pairs.first() else {
            continue;
        };
        let eps = match convention {
            SignConvention::Standard => 1,
            SignConvention::Alternate => {
                if xi % 2 == 1 {
                    -1
                } else {
                    1
                }
            }
        };
        let ngd = Rational::from_int(eps * (string_p(g, d) + 1));
        npos.insert((g, d), ngd.clone());
        npos.insert((d, g), -ngd.clone());
        let ng = rs.negative_index(g);
        let nd = rs.negative_index(d);
        for &(a, b) in &pairs[1..] {
            let mut t = Rational::zero();
            if let Some(bg) = sub(b, g) {
                t += general(b, ng, p, rs, &npos) * general(a, nd, p, rs, &npos) / norm(bg);
            }
            if let Some(ag) = sub(a, g) {
                t += general(ng, a, p, rs, &npos) * general(b, nd, p, rs, &npos) / norm(ag);
            }
            let nab = norm(xi) * t / ngd.clone();
            npos.insert((b, a), -nab.clone());
            npos.insert((a, b), nab);
        }
    }

    let mut n = HashMap::new();
    for x in 0..2 * p {
        for y in 0..2 * p {
            if add(x, y).is_some() {
                let v = general(x, y, p, rs, &npos);
                let v = v.to_i64().expect("integral structure constant");
                debug_assert_eq!(v.abs(), string_p(x, y) + 1);
                n.insert((x, y), v);
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_system;

    fn alg(t: &str) -> ChevalleyAlgebra {
        build_chevalley(&build_root_system(t.parse().unwrap()).unwrap())
    }

    #[test]
    fn sl2_relations() {
        let a = alg("A1");
        assert_eq!(a.dim(), 3);
        let e = a.e(&[1]).unwrap();
        let f = a.e(&[-1]).unwrap();
        let h = a.h(0);
        assert_eq!(a.bracket(&e, &f).unwrap(), h);
        assert_eq!(a.bracket(&h, &e).unwrap(), e.scale(&Rational::from_int(2)));
        assert_eq!(a.labels(), &["h1", "e+[1]", "e-[1]"]);
    }

    #[test]
    fn g2_has_three() {
        let a = alg("G2");
        assert!(a.n.values().any(|v| v.abs() == 3));
    }

    #[test]
    fn d4_bracket_example() {
        let a = alg("D4");
        let x = a.bracket(&a.e(&[1, 1, 0, 0]).unwrap(), &a.e(&[0, 0, 1, 0]).unwrap()).unwrap();
        assert!(!x.is_zero());
        assert_eq!(x.coords().nnz(), 1);
        let (k, _) = x.coords().leading().unwrap();
        assert_eq!(a.basis_root_coords(k).unwrap().coords, vec![1, 1, 1, 0]);
    }

    #[test]
    fn json_round_trip() {
        let a = alg("B3");
        let x = a
            .e(&[1, 1, 0])
            .unwrap()
            .scale(&Rational::new(-7, 3))
            .add(&a.h(2).scale(&Rational::new(5, 2)));
        let j = a.element_to_json(&x);
        assert_eq!(a.element_from_json(&j).unwrap(), x);
        assert!(a.element_from_json(&serde_json::json!({"h9": "1"})).is_err());
    }

    #[test]
    fn mismatch_is_usage_error() {
        let b = alg("B3");
        let c = alg("C3");
        assert!(matches!(b.bracket(&b.h(0), &c.h(0)), Err(Error::Usage(_))));
    }

    #[test]
    fn jacobi_small_types() {
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            for conv in [SignConvention::Standard, SignConvention::Alternate] {
                let a = ChevalleyAlgebra::with_convention(&build_root_system(t.parse().unwrap()).unwrap(), conv);
                let d = a.dim();
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let bi = SparseVector::unit(d, i);
                            let bj = SparseVector::unit(d, j);
                            let bk = SparseVector::unit(d, k);
                            let s = a
                                .bracket_coords(&a.bracket_coords(&bi, &bj), &bk)
                                .add(&a.bracket_coords(&a.bracket_coords(&bj, &bk), &bi))
                                .add(&a.bracket_coords(&a.bracket_coords(&bk, &bi), &bj));
                            assert!(s.is_zero(), "{t} {conv:?} ({i},{j},{k})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_basics() {
        let a = alg("A2");
        let id = a.diagram_automorphism(&[0, 1]).unwrap();
        assert_eq!(id, SparseMatrix::identity(a.dim()));
        let beta = a.root_system().highest_root().clone();
        assert_eq!(a.sign_on_fixed_root(&[1, 0], &beta).unwrap(), -1);
        assert!(a.diagram_automorphism(&[0, 0]).is_err());
    }
}
