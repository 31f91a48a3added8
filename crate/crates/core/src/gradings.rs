//! Gradings of 𝔤 by cocharacters and by the center of an embedded 𝔧, the
//! isotypic decomposition under 𝔧 × 𝔥, and the stock subalgebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chevalley::ChevalleyAlgebra;
use crate::embeddings::{bracket_closure, Cocharacter, Embedding, EmbeddingKind};
use crate::error::{Error, Result};
use crate::exact_linalg::{LatticeQuotient, SparseVector, Subspace};
use crate::root_system::{classify_cartan, components, Family, RootSystemType};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum GradeLabel {
    Int(i64),
    Class(Vec<i64>),
}

impl fmt::Display for GradeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeLabel::Int(i) => write!(f, "{i}"),
            GradeLabel::Class(c) => {
                let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", s.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum LabelGroup {
    Integers,
    Quotient(LatticeQuotient),
}

impl LabelGroup {
    pub fn add(&self, a: &GradeLabel, b: &GradeLabel) -> Result<GradeLabel> {
        match (self, a, b) {
            (LabelGroup::Integers, GradeLabel::Int(x), GradeLabel::Int(y)) => Ok(GradeLabel::Int(x + y)),
            (LabelGroup::Quotient(q), GradeLabel::Class(x), GradeLabel::Class(y)) => {
                let s: Vec<i64> = x.iter().zip(y).map(|(u, v)| u + v).collect();
                Ok(GradeLabel::Class(q.reduce(&s)))
            }
            _ => Err(Error::usage("label of the wrong kind for this grading")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Grading {
    ty: RootSystemType,
    dim: usize,
    group: LabelGroup,
    components: BTreeMap<GradeLabel, Subspace>,
}

impl Grading {
    pub fn new(
        ty: RootSystemType,
        dim: usize,
        group: LabelGroup,
        components: BTreeMap<GradeLabel, Subspace>,
    ) -> Result<Self> {
        let g = Grading { ty, dim, group, components };
        let total: usize = g.components.values().map(|s| s.dim()).sum();
        let spans = g.components.values().fold(Subspace::zero(dim), |acc, s| acc.sum(s));
        if total != spans.dim() {
            return Err(Error::structural("grading components are not independent"));
        }
        Ok(g)
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &LabelGroup {
        &self.group
    }

    pub fn components(&self) -> &BTreeMap<GradeLabel, Subspace> {
        &self.components
    }

    pub fn component(&self, label: &GradeLabel) -> Option<&Subspace> {
        self.components.get(label)
    }

    pub fn dims(&self) -> BTreeMap<GradeLabel, usize> {
        self.components.iter().map(|(l, s)| (l.clone(), s.dim())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(|s| s.dim()).sum()
    }

    /// Integer-labelled dimensions in label order.
    pub fn int_dims(&self) -> Vec<(i64, usize)> {
        self.components
            .iter()
            .filter_map(|(l, s)| match l {
                GradeLabel::Int(i) => Some((*i, s.dim())),
                GradeLabel::Class(_) => None,
            })
            .collect()
    }

    /// [𝔤(a), 𝔤(b)] ⊆ 𝔤(a+b) on every pair of basis vectors.
    pub fn is_multiplicative(&self, alg: &ChevalleyAlgebra) -> Result<bool> {
        for (a, sa) in &self.components {
            for (b, sb) in &self.components {
                if a > b {
                    continue;
                }
                let target = self.components.get(&self.group.add(a, b)?);
                for x in sa.basis() {
                    for y in sb.basis() {
                        let z = alg.bracket_coords(x, y);
                        let ok = match target {
                            Some(t) => t.contains(&z),
                            None => z.is_zero(),
                        };
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Merge components along a label map.
    pub fn coarsen(&self, f: impl Fn(&GradeLabel) -> GradeLabel) -> BTreeMap<GradeLabel, Subspace> {
        let mut out: BTreeMap<GradeLabel, Subspace> = BTreeMap::new();
        for (l, s) in &self.components {
            let k = f(l);
            let merged = match out.remove(&k) {
                Some(prev) => prev.sum(s),
                None => s.clone(),
            };
            out.insert(k, merged);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|(l, s)| {
                let support: BTreeSet<usize> = s.basis().iter().flat_map(|v| v.iter().map(|(i, _)| i)).collect();
                json!({"label": l, "dim": s.dim(), "basis_indices": support})
            })
            .collect();
        json!({
            "ambient_type": self.ty.to_string(),
            "label_kind": match self.group { LabelGroup::Integers => "integer", LabelGroup::Quotient(_) => "finite-group" },
            "total_dim": self.total_dim(),
            "components": comps,
        })
    }
}

/// 𝔤(m) = (Cartan if m = 0) ⊕ span{e_γ : ⟨μ, γ⟩ = m}.
pub fn grade_by_cocharacter(alg: &ChevalleyAlgebra, mu: &Cocharacter) -> Result<Grading> {
    let rs = alg.root_system();
    if mu.pairings.len() != rs.rank() {
        return Err(Error::usage("cocharacter of the wrong rank"));
    }
    let dim = alg.dim();
    let mut buckets: BTreeMap<GradeLabel, Vec<SparseVector>> = BTreeMap::new();
    for i in 0..rs.rank() {
        buckets.entry(GradeLabel::Int(0)).or_default().push(SparseVector::unit(dim, i));
    }
    for (k, r) in rs.roots().iter().enumerate() {
        buckets
            .entry(GradeLabel::Int(mu.eval(&r.coords)))
            .or_default()
            .push(SparseVector::unit(dim, alg.root_basis_index(k)));
    }
    let comps = buckets.into_iter().map(|(l, v)| (l, Subspace::span(dim, v))).collect();
    Grading::new(alg.root_type(), dim, LabelGroup::Integers, comps)
}

/// Grading by classes of `cartan_of_j`-weights in P(J)/Q(J).
pub fn grade_by_center(emb: &Embedding) -> Result<Grading> {
    let alg = emb.ambient();
    let q = emb.center_lattice();
    let dim = alg.dim();
    let mut buckets: BTreeMap<GradeLabel, Vec<SparseVector>> = BTreeMap::new();
    for b in 0..dim {
        let class = q.reduce(&emb.weight_of_basis(b));
        buckets.entry(GradeLabel::Class(class)).or_default().push(SparseVector::unit(dim, b));
    }
    let comps = buckets.into_iter().map(|(l, v)| (l, Subspace::span(dim, v))).collect();
    Grading::new(alg.root_type(), dim, LabelGroup::Quotient(q.clone()), comps)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterBlock {
    pub label: Vec<i64>,
    pub dim_v: usize,
    pub dim_w: usize,
    pub component_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicReport {
    pub ambient_type: String,
    pub kind: EmbeddingKind,
    pub dim_g: usize,
    pub dim_j: usize,
    pub dim_h: usize,
    pub j_type: Vec<String>,
    pub characters: Vec<CharacterBlock>,
}

impl IsotypicReport {
    /// dim 𝔧 + dim 𝔥 + Σ dim V_χ · dim W_χ = dim 𝔤.
    pub fn identity_holds(&self) -> bool {
        self.dim_j + self.dim_h + self.characters.iter().map(|c| c.dim_v * c.dim_w).sum::<usize>() == self.dim_g
    }
}

pub fn centralizer_decomposition(emb: &Embedding) -> Result<IsotypicReport> {
    let alg = emb.ambient();
    let q = emb.center_lattice();
    let j = emb.j_structure();
    let h = emb.centralizer()?;
    if emb.subalgebra().sum(&h).dim() != emb.dim() + h.dim() {
        return Err(Error::structural("𝔧 meets its centralizer"));
    }
    let mut classes: BTreeMap<Vec<i64>, BTreeMap<Vec<i64>, usize>> = BTreeMap::new();
    for b in 0..alg.dim() {
        let w = emb.weight_of_basis(b);
        *classes.entry(q.reduce(&w)).or_default().entry(w).or_default() += 1;
    }
    let zero = vec![0i64; j.rank()];
    let mut characters = Vec::new();
    for (class, weights) in &classes {
        let comp: usize = weights.values().sum();
        if *class == zero {
            if comp != emb.dim() + h.dim() {
                return Err(Error::structural(format!(
                    "trivial class has dim {comp}, expected dim 𝔧 + dim 𝔥 = {}",
                    emb.dim() + h.dim()
                )));
            }
            continue;
        }
        let lambda = weights.keys().next().unwrap();
        let orbit = j.weyl_orbit(lambda);
        let distinct: BTreeSet<Vec<i64>> = weights.keys().cloned().collect();
        let dim_v = orbit.len();
        if !comp.is_multiple_of(dim_v) {
            return Err(Error::structural(format!(
                "component {class:?} of dim {comp} is not a multiple of dim V = {dim_v}"
            )));
        }
        let dim_w = comp / dim_v;
        if orbit != distinct || weights.values().any(|&m| m != dim_w) {
            return Err(Error::structural(format!("component {class:?} is not isotypic")));
        }
        characters.push(CharacterBlock { label: class.clone(), dim_v, dim_w, component_dim: comp });
    }
    Ok(IsotypicReport {
        ambient_type: alg.root_type().to_string(),
        kind: emb.kind(),
        dim_g: alg.dim(),
        dim_j: emb.dim(),
        dim_h: h.dim(),
        j_type: j.type_names(),
        characters,
    })
}

/// Decomposition of an ad(Cartan)-stable subspace into its Cartan part and root spaces.
pub fn weight_decomposition(alg: &ChevalleyAlgebra, sub: &Subspace) -> Result<(Subspace, Vec<usize>)> {
    let rank = alg.rank();
    let dim = alg.dim();
    let mut cartan = Subspace::zero(dim);
    let mut roots = BTreeSet::new();
    for v in sub.basis() {
        let proj: Vec<_> = v.iter().filter(|(i, _)| *i < rank).map(|(i, c)| (i, c.clone())).collect();
        cartan.insert(&SparseVector::from_pairs(dim, proj));
        roots.extend(v.iter().filter_map(|(i, _)| alg.basis_root(i)));
    }
    let roots: Vec<usize> = roots.into_iter().collect();
    let ok = cartan.dim() + roots.len() == sub.dim()
        && sub.contains_space(&cartan)
        && roots.iter().all(|&r| sub.contains(&SparseVector::unit(dim, alg.root_basis_index(r))));
    if !ok {
        return Err(Error::structural("subspace is not stable under the Cartan subalgebra"));
    }
    Ok((cartan, roots))
}

/// The 3-graded stock subalgebra 𝔤′ = ⟨𝔥, 𝔤_{±α̂}⟩.
#[derive(Clone, Debug)]
pub struct Stock {
    pub subalgebra: Subspace,
    pub centralizer: Subspace,
    pub node: usize,
    pub types: Vec<RootSystemType>,
    /// Root indices (ambient numbering) of the roots of 𝔤′.
    pub roots: Vec<usize>,
    pub grading: Grading,
}

impl Stock {
    pub fn dim(&self) -> usize {
        self.subalgebra.dim()
    }

    pub fn component(&self, k: i64) -> &Subspace {
        &self.grading.components()[&GradeLabel::Int(k)]
    }

    pub fn type_names(&self) -> Vec<String> {
        self.types.iter().map(|t| t.to_string()).collect()
    }
}

pub fn stock(alg: &ChevalleyAlgebra, sl3: &Embedding) -> Result<Stock> {
    let rs = alg.root_system();
    let t = rs.root_type();
    if !matches!(t.family, Family::F | Family::E) {
        return Err(Error::usage(format!("the stock is defined for F4 and E-types, not {t}")));
    }
    let mu = match (sl3.kind(), sl3.cocharacter()) {
        (EmbeddingKind::Sl3ViaMu, Some(mu)) => mu,
        _ => return Err(Error::usage("stock needs the minuscule sl3 embedding")),
    };
    let node = mu
        .pairings
        .iter()
        .position(|&m| m != 0)
        .ok_or_else(|| Error::structural("zero cocharacter"))?;
    let h = sl3.centralizer()?;
    let dim = alg.dim();
    let mut gens: Vec<SparseVector> = h.basis().to_vec();
    let mut simple = vec![0i64; rs.rank()];
    simple[node] = 1;
    gens.push(alg.e(&simple)?.into_coords());
    simple[node] = -1;
    gens.push(alg.e(&simple)?.into_coords());
    let sub = bracket_closure(alg, &gens);
    let (cartan_part, roots) = weight_decomposition(alg, &sub)?;

    let mut buckets: BTreeMap<GradeLabel, Vec<SparseVector>> = BTreeMap::new();
    buckets.insert(GradeLabel::Int(0), cartan_part.basis().to_vec());
    for &r in &roots {
        let k = rs.roots()[r].coords[node];
        buckets
            .entry(GradeLabel::Int(k))
            .or_default()
            .push(SparseVector::unit(dim, alg.root_basis_index(r)));
    }
    if buckets.keys().any(|l| !matches!(l, GradeLabel::Int(-1..=1))) {
        return Err(Error::structural("stock grading is not a 3-grading"));
    }
    let comps = buckets.into_iter().map(|(l, v)| (l, Subspace::span(dim, v))).collect();
    let grading = Grading::new(t, dim, LabelGroup::Integers, comps)?;

    // Root system of 𝔤′: simple roots are the indecomposable positive ones.
    let pos: Vec<&Vec<i64>> = roots
        .iter()
        .filter(|&&r| r < rs.num_positive())
        .map(|&r| &rs.roots()[r].coords)
        .collect();
    let pos_set: BTreeSet<&Vec<i64>> = pos.iter().copied().collect();
    let simple_roots: Vec<&Vec<i64>> = pos
        .iter()
        .copied()
        .filter(|g| {
            !pos.iter().any(|a| {
                let rest: Vec<i64> = g.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                pos_set.contains(&rest)
            })
        })
        .collect();
    let n = simple_roots.len();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| rs.root_pairing(simple_roots[i], simple_roots[j])).collect())
        .collect();
    let mut types = Vec::new();
    for comp in components(&cartan, &(0..n).collect::<Vec<_>>()) {
        let sub_cartan: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
        types.push(classify_cartan(&sub_cartan)?);
    }
    types.sort();
    Ok(Stock { subalgebra: sub, centralizer: h, node, types, roots, grading })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::embeddings::{highest_root_sl2, long_root_subalgebra, minuscule_sl3};
    use crate::root_system::build_root_system;
    use std::sync::Arc;

    fn alg(t: &str) -> Arc<ChevalleyAlgebra> {
        Arc::new(build_chevalley(&build_root_system(t.parse().unwrap()).unwrap()))
    }

    #[test]
    fn zero_cocharacter_single_component() {
        let a = alg("B3");
        let g = grade_by_cocharacter(&a, &Cocharacter::new(vec![0, 0, 0])).unwrap();
        assert_eq!(g.int_dims(), vec![(0, 21)]);
        assert!(g.is_multiplicative(&a).unwrap());
    }

    #[test]
    fn five_term_grading() {
        let a = alg("G2");
        let mu = Cocharacter::highest_coroot(a.root_system());
        let g = grade_by_cocharacter(&a, &mu).unwrap();
        assert_eq!(g.int_dims(), vec![(-2, 1), (-1, 4), (0, 4), (1, 4), (2, 1)]);
        assert!(g.is_multiplicative(&a).unwrap());
    }

    #[test]
    fn center_gradings_f4() {
        let a = alg("F4");
        let l = long_root_subalgebra(&a).unwrap();
        let g = grade_by_center(&l).unwrap();
        let mut dims: Vec<usize> = g.dims().values().copied().collect();
        dims.sort();
        assert_eq!(dims, vec![8, 8, 8, 28]);
        assert!(g.is_multiplicative(&a).unwrap());

        let s = minuscule_sl3(&a).unwrap();
        let g = grade_by_center(&s).unwrap();
        let mut dims: Vec<usize> = g.dims().values().copied().collect();
        dims.sort();
        assert_eq!(dims, vec![16, 18, 18]);
    }

    #[test]
    fn isotypic_g2() {
        let a = alg("G2");
        let r = centralizer_decomposition(&highest_root_sl2(&a).unwrap()).unwrap();
        assert_eq!((r.dim_h, r.characters.len()), (3, 1));
        assert_eq!((r.characters[0].dim_v, r.characters[0].dim_w), (2, 4));
        assert!(r.identity_holds());
    }

    #[test]
    fn stock_f4() {
        let a = alg("F4");
        let s = stock(&a, &minuscule_sl3(&a).unwrap()).unwrap();
        assert_eq!(s.dim(), 21);
        assert_eq!(s.type_names(), vec!["C3"]);
        assert_eq!((s.component(1).dim(), s.component(-1).dim()), (6, 6));
        assert!(s.grading.is_multiplicative(&a).unwrap());
    }
}
