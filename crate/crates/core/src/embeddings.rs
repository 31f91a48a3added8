//! Distinguished semisimple subalgebras 𝔧 ⊆ 𝔤 and the minuscule test.
//!
//! Every embedding carries a torus of 𝔧 lying in the ambient Cartan
//! subalgebra. From it we recover the root system of 𝔧, its simple coroots
//! (`cartan_of_j`) and the group P(J)/Q(J). Weights are always recorded as
//! pairings with those simple coroots.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::exact_linalg::{eigenspaces_within, solve, LatticeQuotient, Rational, SparseMatrix, SparseVector, Subspace};
use crate::root_system::{classify_cartan, components, Family, Root, RootSystem, RootSystemType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EmbeddingKind {
    HighestRootSl2,
    LongRootSub,
    Sl3ViaMu,
    /// A D₄ root subsystem of an E-type algebra (the split so(4,4)).
    D4Subsystem,
    /// Bracket closure of caller-supplied generators.
    Custom,
}

impl EmbeddingKind {
    pub fn name(self) -> &'static str {
        match self {
            EmbeddingKind::HighestRootSl2 => "HighestRootSl2",
            EmbeddingKind::LongRootSub => "LongRootSub",
            EmbeddingKind::Sl3ViaMu => "Sl3ViaMu",
            EmbeddingKind::D4Subsystem => "D4Subsystem",
            EmbeddingKind::Custom => "Custom",
        }
    }
}

/// A dominant cocharacter μ, recorded by ⟨μ, αᵢ⟩.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cocharacter {
    pub pairings: Vec<i64>,
}

impl Cocharacter {
    pub fn new(pairings: Vec<i64>) -> Self {
        Cocharacter { pairings }
    }

    /// ⟨μ, γ⟩ for a root-lattice vector γ.
    pub fn eval(&self, gamma: &[i64]) -> i64 {
        self.pairings.iter().zip(gamma).map(|(m, c)| m * c).sum()
    }

    /// β∨ for the highest root β, as a cocharacter.
    pub fn highest_coroot(rs: &RootSystem) -> Self {
        let beta = &rs.highest_root().coords;
        Cocharacter::new((0..rs.rank()).map(|i| rs.root_pairing(&unit(rs.rank(), i), beta)).collect())
    }
}

/// Root data of 𝔧 relative to its torus.
#[derive(Clone, Debug)]
pub struct JStructure {
    /// Simple coroots of 𝔧, as ambient Cartan elements.
    pub simple_coroots: Vec<LieElement>,
    /// `cartan[i][j] = ⟨αᵢ, αⱼ∨⟩` for the simple roots of 𝔧.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots of 𝔧, as pairings with the simple coroots.
    pub positive_roots: Vec<Vec<i64>>,
    /// Coroot of each positive root in the simple coroots.
    pub coroot_coeffs: Vec<Vec<i64>>,
    /// Root vector for every root of 𝔧 (both signs).
    pub root_vectors: BTreeMap<Vec<i64>, SparseVector>,
    /// Simple roots, as pairings with the simple coroots (rows of `cartan`).
    pub simple_roots: Vec<Vec<i64>>,
    pub types: Vec<RootSystemType>,
}

impl JStructure {
    pub fn rank(&self) -> usize {
        self.simple_coroots.len()
    }

    /// ⟨λ, φ∨⟩ for a weight λ and the k-th positive root φ.
    pub fn coroot_pairing(&self, lambda: &[i64], k: usize) -> i64 {
        self.coroot_coeffs[k].iter().zip(lambda).map(|(c, l)| c * l).sum()
    }

    pub fn reflect(&self, i: usize, lambda: &[i64]) -> Vec<i64> {
        let li = lambda[i];
        lambda.iter().enumerate().map(|(j, &l)| l - li * self.cartan[i][j]).collect()
    }

    pub fn weyl_orbit(&self, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![lambda.to_vec()];
        seen.insert(lambda.to_vec());
        while let Some(w) = stack.pop() {
            for i in 0..self.rank() {
                let r = self.reflect(i, &w);
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
        seen
    }

    pub fn type_names(&self) -> Vec<String> {
        self.types.iter().map(|t| t.to_string()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Embedding {
    ambient: Arc<ChevalleyAlgebra>,
    kind: EmbeddingKind,
    subalgebra: Subspace,
    j: JStructure,
    generators: Vec<LieElement>,
    tagged: BTreeMap<String, LieElement>,
    center: LatticeQuotient,
    mu: Option<Cocharacter>,
}

impl Embedding {
    /// Assembles an embedding from a bracket-closed subspace and a torus of
    /// it lying in the ambient Cartan subalgebra.
    pub fn new(
        ambient: &Arc<ChevalleyAlgebra>,
        kind: EmbeddingKind,
        subalgebra: Subspace,
        torus: &[LieElement],
        tagged: BTreeMap<String, LieElement>,
        mu: Option<Cocharacter>,
    ) -> Result<Self> {
        let alg = ambient.as_ref();
        if subalgebra.ambient_dim() != alg.dim() {
            return Err(Error::usage("subalgebra lives in a different algebra"));
        }
        if !is_bracket_closed(alg, &subalgebra) {
            return Err(Error::structural("subalgebra is not closed under the bracket"));
        }
        let j = j_structure(alg, &subalgebra, torus)?;
        let mut generators = Vec::new();
        for s in &j.simple_roots {
            let neg: Vec<i64> = s.iter().map(|x| -x).collect();
            generators.push(alg.element(j.root_vectors[s].clone())?);
            generators.push(alg.element(j.root_vectors[&neg].clone())?);
        }
        let center = LatticeQuotient::new(j.rank(), &j.cartan)?;
        Ok(Embedding { ambient: ambient.clone(), kind, subalgebra, j, generators, tagged, center, mu })
    }

    pub fn ambient(&self) -> &ChevalleyAlgebra {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> &Arc<ChevalleyAlgebra> {
        &self.ambient
    }

    pub fn kind(&self) -> EmbeddingKind {
        self.kind
    }

    pub fn subalgebra(&self) -> &Subspace {
        &self.subalgebra
    }

    pub fn subalgebra_basis(&self) -> Vec<LieElement> {
        self.subalgebra
            .basis()
            .iter()
            .map(|v| self.ambient.element(v.clone()).unwrap())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.subalgebra.dim()
    }

    pub fn cartan_of_j(&self) -> &[LieElement] {
        &self.j.simple_coroots
    }

    pub fn j_structure(&self) -> &JStructure {
        &self.j
    }

    /// Root vectors of the simple roots of 𝔧 and their negatives; they generate 𝔧.
    pub fn generators(&self) -> &[LieElement] {
        &self.generators
    }

    pub fn tagged(&self) -> &BTreeMap<String, LieElement> {
        &self.tagged
    }

    pub fn tag(&self, name: &str) -> Option<&LieElement> {
        self.tagged.get(name)
    }

    /// P(J)/Q(J).
    pub fn center_lattice(&self) -> &LatticeQuotient {
        &self.center
    }

    pub fn cocharacter(&self) -> Option<&Cocharacter> {
        self.mu.as_ref()
    }

    /// Weight of an ambient basis vector under `cartan_of_j`.
    pub fn weight_of_basis(&self, b: usize) -> Vec<i64> {
        let alg = self.ambient.as_ref();
        match alg.basis_root_coords(b) {
            None => vec![0; self.j.rank()],
            Some(root) => self
                .j
                .simple_coroots
                .iter()
                .map(|h| cartan_eval(alg, h.coords(), &root.coords))
                .collect(),
        }
    }

    /// Centralizer 𝔥 of 𝔧 in the ambient algebra.
    pub fn centralizer(&self) -> Result<Subspace> {
        self.ambient.centralizer(&self.generators)
    }

    pub fn to_json(&self) -> Value {
        let alg = self.ambient.as_ref();
        let support: BTreeSet<usize> =
            self.subalgebra.basis().iter().flat_map(|v| v.iter().map(|(i, _)| i)).collect();
        let tagged: serde_json::Map<String, Value> =
            self.tagged.iter().map(|(k, v)| (k.clone(), alg.element_to_json(v))).collect();
        json!({
            "kind": self.kind.name(),
            "ambient_type": alg.root_type().to_string(),
            "dim": self.dim(),
            "j_type": self.j.type_names(),
            "cartan_of_j": self.j.simple_coroots.iter().map(|h| alg.element_to_json(h)).collect::<Vec<_>>(),
            "j_cartan_matrix": self.j.cartan,
            "center_invariants": self.center.invariants(),
            "tagged": tagged,
            "subalgebra_basis_indices": support.into_iter().collect::<Vec<_>>(),
            "cocharacter": self.mu.as_ref().map(|m| m.pairings.clone()),
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// γ(h) for a Cartan element h (ambient coordinates) and a root-lattice vector γ.
fn cartan_eval(alg: &ChevalleyAlgebra, h: &SparseVector, gamma: &[i64]) -> i64 {
    let rs = alg.root_system();
    let mut total = Rational::zero();
    for (k, c) in h.iter() {
        let pk: i64 = (0..rs.rank()).map(|j| gamma[j] * rs.cartan()[j][k]).sum();
        total += c * &Rational::from_int(pk);
    }
    total.to_i64().expect("integral weight")
}

pub fn is_bracket_closed(alg: &ChevalleyAlgebra, sub: &Subspace) -> bool {
    let basis = sub.basis();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            if !sub.contains(&alg.bracket_coords(x, y)) {
                return false;
            }
        }
    }
    true
}

/// Smallest bracket-closed subspace containing `gens`.
pub fn bracket_closure(alg: &ChevalleyAlgebra, gens: &[SparseVector]) -> Subspace {
    let mut sub = Subspace::span(alg.dim(), gens);
    let mut frontier: Vec<SparseVector> = sub.basis().to_vec();
    while !frontier.is_empty() {
        let current: Vec<SparseVector> = sub.basis().to_vec();
        let mut fresh = Vec::new();
        for x in &frontier {
            for y in &current {
                let z = alg.bracket_coords(x, y);
                if sub.insert(&z) {
                    fresh.push(z);
                }
            }
        }
        frontier = fresh;
    }
    sub
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

fn j_structure(alg: &ChevalleyAlgebra, sub: &Subspace, torus: &[LieElement]) -> Result<JStructure> {
    let rank = alg.rank();
    let dim = alg.dim();
    if torus.iter().any(|t| t.coords().iter().any(|(i, _)| i >= rank)) {
        return Err(Error::usage("torus elements must lie in the ambient Cartan subalgebra"));
    }
    if torus.iter().any(|t| !sub.contains(t.coords())) {
        return Err(Error::usage("torus is not contained in the subalgebra"));
    }
    let ops: Vec<SparseMatrix> = torus.iter().map(|t| alg.ad_coords(t.coords())).collect();
    let spaces = eigenspaces_within(&ops, sub)?;
    let zero = vec![0i64; torus.len()];
    let zero_dim = spaces.get(&zero).map_or(0, |b| b.len());
    if zero_dim != torus.len() {
        return Err(Error::structural(format!(
            "torus of dimension {} is not a Cartan subalgebra of 𝔧 (zero weight space has dim {zero_dim})",
            torus.len()
        )));
    }
    let mut vectors: BTreeMap<Vec<i64>, SparseVector> = BTreeMap::new();
    for (key, basis) in &spaces {
        if *key == zero {
            continue;
        }
        if basis.len() != 1 {
            return Err(Error::structural(format!("root space of 𝔧 with key {key:?} has dim {}", basis.len())));
        }
        vectors.insert(key.clone(), basis[0].clone());
    }

    // Torus coordinates of a Cartan element h = Σ aₖ tₖ.
    let torus_matrix = SparseMatrix::from_columns(dim, &torus.iter().map(|t| t.coords().clone()).collect::<Vec<_>>());
    let torus_coords = |h: &SparseVector| -> Result<Vec<Rational>> {
        let a = solve(&torus_matrix, h)?.ok_or_else(|| Error::structural("coroot outside the torus"))?;
        Ok(a.to_dense())
    };
    let eval_key = |key: &[i64], a: &[Rational]| -> Rational {
        key.iter().zip(a).map(|(k, x)| x * &Rational::from_int(*k)).sum()
    };

    let positive: Vec<Vec<i64>> = vectors.keys().filter(|k| lex_positive(k)).cloned().collect();
    let mut coroot_of: BTreeMap<Vec<i64>, (SparseVector, Vec<Rational>)> = BTreeMap::new();
    for phi in &positive {
        let neg: Vec<i64> = phi.iter().map(|x| -x).collect();
        let y = vectors
            .get(&neg)
            .ok_or_else(|| Error::structural("root system of 𝔧 is not symmetric"))?;
        let h = alg.bracket_coords(&vectors[phi], y);
        let a = torus_coords(&h)?;
        let val = eval_key(phi, &a);
        if val.is_zero() {
            return Err(Error::structural("degenerate coroot in 𝔧"));
        }
        let s = Rational::from_int(2) / val;
        let a: Vec<Rational> = a.iter().map(|x| x * &s).collect();
        coroot_of.insert(phi.clone(), (h.scale(&s), a));
    }
    let pos_set: BTreeSet<&Vec<i64>> = positive.iter().collect();
    let simple: Vec<Vec<i64>> = positive
        .iter()
        .filter(|phi| {
            !positive.iter().any(|a| {
                let rest: Vec<i64> = phi.iter().zip(a).map(|(x, y)| x - y).collect();
                pos_set.contains(&rest)
            })
        })
        .cloned()
        .collect();
    let r = simple.len();
    let to_int = |x: Rational| x.to_i64().ok_or_else(|| Error::structural("non-integral pairing in 𝔧"));
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            cartan[i][j] = to_int(eval_key(&simple[i], &coroot_of[&simple[j]].1))?;
        }
    }
    // P(J) coordinates of a torus key.
    let convert = |key: &[i64]| -> Result<Vec<i64>> {
        simple.iter().map(|s| to_int(eval_key(key, &coroot_of[s].1))).collect()
    };
    let simple_coroots: Vec<LieElement> =
        simple.iter().map(|s| alg.element(coroot_of[s].0.clone())).collect::<Result<_>>()?;
    // Coroot of each positive root in the simple coroots (torus coordinates).
    let simple_cols: Vec<SparseVector> =
        simple.iter().map(|s| SparseVector::from_dense(&coroot_of[s].1)).collect();
    let simple_matrix = SparseMatrix::from_columns(torus.len(), &simple_cols);
    let mut positive_roots = Vec::new();
    let mut coroot_coeffs = Vec::new();
    for phi in &positive {
        positive_roots.push(convert(phi)?);
        let c = solve(&simple_matrix, &SparseVector::from_dense(&coroot_of[phi].1))?
            .ok_or_else(|| Error::structural("coroot not in the coroot lattice of 𝔧"))?;
        coroot_coeffs.push(c.to_dense().into_iter().map(to_int).collect::<Result<Vec<_>>>()?);
    }
    let mut root_vectors = BTreeMap::new();
    for (key, v) in vectors {
        root_vectors.insert(convert(&key)?, v);
    }
    let simple_roots: Vec<Vec<i64>> = simple.iter().map(|s| convert(s)).collect::<Result<_>>()?;
    let mut types = Vec::new();
    for comp in components(&cartan, &(0..r).collect::<Vec<_>>()) {
        let sub_cartan: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
        types.push(classify_cartan(&sub_cartan)?);
    }
    types.sort();
    Ok(JStructure { simple_coroots, cartan, positive_roots, coroot_coeffs, root_vectors, simple_roots, types })
}

/// The sl₂ spanned by e_β, e_{−β}, h_β for the highest root β.
pub fn highest_root_sl2(alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding> {
    let rs = alg.root_system();
    if rs.rank() < 2 {
        return Err(Error::usage("highest_root_sl2 needs ambient rank at least 2"));
    }
    let beta = rs.highest_root().coords.clone();
    let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
    let e = alg.e(&beta)?;
    let f = alg.e(&neg)?;
    let h = alg.coroot(&beta)?;
    let sub = Subspace::span(alg.dim(), [e.coords(), f.coords(), h.coords()]);
    let tagged = BTreeMap::from([("E".to_string(), e), ("F".to_string(), f), ("H".to_string(), h.clone())]);
    Embedding::new(alg, EmbeddingKind::HighestRootSl2, sub, &[h], tagged, None)
}

/// Cartan subalgebra plus all long root spaces.
pub fn long_root_subalgebra(alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding> {
    let rs = alg.root_system();
    if !rs.has_two_lengths() {
        return Err(Error::usage(format!("{} has a single root length", rs.root_type())));
    }
    let mut gens: Vec<SparseVector> = (0..rs.rank()).map(|i| SparseVector::unit(alg.dim(), i)).collect();
    for (k, r) in rs.roots().iter().enumerate() {
        if rs.is_long(r) {
            gens.push(SparseVector::unit(alg.dim(), alg.root_basis_index(k)));
        }
    }
    let sub = Subspace::span(alg.dim(), &gens);
    let torus: Vec<LieElement> = (0..rs.rank()).map(|i| alg.h(i)).collect();
    Embedding::new(alg, EmbeddingKind::LongRootSub, sub, &torus, BTreeMap::new(), None)
}

/// The cocharacter μ defining the minuscule sl₃: ⟨μ, β⟩ = 3 and exactly two
/// positive roots of μ-degree 3.
pub fn sl3_cocharacter(rs: &RootSystem) -> Result<Cocharacter> {
    let t = rs.root_type();
    let n = rs.rank();
    let mu = match t.family {
        Family::A => return Err(Error::usage("sl3_cocharacter is not defined for type A")),
        Family::C => return Err(Error::usage("sl3_cocharacter is not defined for type C")),
        Family::D if n == 3 => return Err(Error::usage("sl3_cocharacter is not defined for D3 = A3")),
        Family::B if n < 3 => return Err(Error::usage("sl3_cocharacter needs rank at least 3 in type B")),
        Family::D if n == 4 => Cocharacter::new(vec![1, 0, 1, 1]),
        Family::B | Family::D => {
            let mut p = vec![0; n];
            p[0] = 1;
            p[2] = 1;
            Cocharacter::new(p)
        }
        Family::E | Family::F | Family::G => {
            let beta = &rs.highest_root().coords;
            let node = (0..n)
                .filter(|&i| beta[i] == 3)
                .find(|&i| rs.positive_roots().iter().filter(|r| r.coords[i] == 3).count() == 2)
                .ok_or_else(|| Error::usage(format!("no admissible node for {t}")))?;
            Cocharacter::new(unit(n, node))
        }
    };
    let top = rs.positive_roots().iter().filter(|r| mu.eval(&r.coords) == 3).count();
    if mu.eval(&rs.highest_root().coords) != 3 || top != 2 {
        return Err(Error::structural(format!("cocharacter for {t} does not give a two-dimensional top piece")));
    }
    Ok(mu)
}

/// The sl₃ spanned by 𝔤(3), [𝔤(3), 𝔤(−3)] and 𝔤(−3) for μ = sl3_cocharacter.
pub fn minuscule_sl3(alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding> {
    let rs = alg.root_system();
    let mu = sl3_cocharacter(rs)?;
    let top: Vec<Root> = rs.positive_roots().iter().filter(|r| mu.eval(&r.coords) == 3).cloned().collect();
    let plus: Vec<LieElement> = top.iter().map(|r| alg.e(&r.coords)).collect::<Result<_>>()?;
    let minus: Vec<LieElement> = top.iter().map(|r| alg.e(&r.neg().coords)).collect::<Result<_>>()?;
    let mut gens: Vec<SparseVector> = plus.iter().chain(&minus).map(|x| x.coords().clone()).collect();
    for x in &plus {
        for y in &minus {
            gens.push(alg.bracket(x, y)?.into_coords());
        }
    }
    let sub = Subspace::span(alg.dim(), &gens);
    if sub.dim() != 8 {
        return Err(Error::structural(format!("sl3 candidate has dim {}", sub.dim())));
    }
    let torus: Vec<LieElement> = top.iter().map(|r| alg.coroot(&r.coords)).collect::<Result<_>>()?;
    let mut tagged = BTreeMap::new();
    for (i, (x, y)) in plus.iter().zip(&minus).enumerate() {
        tagged.insert(format!("x{}", i + 1), x.clone());
        tagged.insert(format!("y{}", i + 1), y.clone());
    }
    let emb = Embedding::new(alg, EmbeddingKind::Sl3ViaMu, sub, &torus, tagged, Some(mu))?;
    if emb.j.type_names() != ["A2"] {
        return Err(Error::structural(format!("sl3 candidate has type {:?}", emb.j.type_names())));
    }
    Ok(emb)
}

/// The D₄ root subsystem on α₂, α₃, α₄, α₅ of an E-type algebra.
pub fn d4_subsystem(alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding> {
    let rs = alg.root_system();
    if rs.root_type().family != Family::E {
        return Err(Error::usage("d4_subsystem is defined for types E6, E7, E8"));
    }
    let nodes = [1usize, 2, 3, 4];
    let mut gens: Vec<SparseVector> = nodes.iter().map(|&i| SparseVector::unit(alg.dim(), i)).collect();
    for (k, r) in rs.roots().iter().enumerate() {
        if r.coords.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(&i)) {
            gens.push(SparseVector::unit(alg.dim(), alg.root_basis_index(k)));
        }
    }
    let sub = Subspace::span(alg.dim(), &gens);
    let torus: Vec<LieElement> = nodes.iter().map(|&i| alg.h(i)).collect();
    Embedding::new(alg, EmbeddingKind::D4Subsystem, sub, &torus, BTreeMap::new(), None)
}

/// The minuscule so(4,4): long roots in F₄, a D₄ subsystem in E-types.
pub fn so44(alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding> {
    let t = alg.root_type();
    let emb = match t.family {
        Family::F => long_root_subalgebra(alg)?,
        Family::E => d4_subsystem(alg)?,
        _ => return Err(Error::usage(format!("so(4,4) embedding is only built for F4 and E-types, not {t}"))),
    };
    if emb.dim() != 28 || emb.j.type_names() != ["D4"] {
        return Err(Error::structural(format!(
            "so(4,4) candidate has dim {} and type {:?}",
            emb.dim(),
            emb.j.type_names()
        )));
    }
    Ok(emb)
}

/// Bracket closure of arbitrary generators with a caller-chosen torus.
pub fn custom_embedding(
    alg: &Arc<ChevalleyAlgebra>,
    generators: &[LieElement],
    torus: &[LieElement],
    tagged: BTreeMap<String, LieElement>,
) -> Result<Embedding> {
    let gens: Vec<SparseVector> = generators.iter().map(|g| g.coords().clone()).collect();
    let sub = bracket_closure(alg, &gens);
    Embedding::new(alg, EmbeddingKind::Custom, sub, torus, tagged, None)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinusculeReport {
    pub minuscule: bool,
    /// Weights of 𝔤/𝔧 under `cartan_of_j`, with multiplicity.
    pub weights: BTreeMap<Vec<i64>, usize>,
    /// A weight, a positive root of 𝔧 and their pairing outside {0, ±1}.
    pub witness: Option<(Vec<i64>, Vec<i64>, i64)>,
}

pub fn check_minuscule(emb: &Embedding) -> Result<MinusculeReport> {
    let alg = emb.ambient();
    let mut weights: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for b in 0..alg.dim() {
        *weights.entry(emb.weight_of_basis(b)).or_default() += 1;
    }
    let j = emb.j_structure();
    let mut own: Vec<Vec<i64>> = vec![vec![0; j.rank()]; j.rank()];
    own.extend(j.root_vectors.keys().cloned());
    for w in own {
        let m = weights
            .get_mut(&w)
            .filter(|m| **m > 0)
            .ok_or_else(|| Error::structural(format!("weight {w:?} of 𝔧 missing from the ambient algebra")))?;
        *m -= 1;
    }
    weights.retain(|_, m| *m > 0);
    let mut witness = None;
    'outer: for lambda in weights.keys() {
        for (k, phi) in j.positive_roots.iter().enumerate() {
            let p = j.coroot_pairing(lambda, k);
            if p.abs() > 1 {
                witness = Some((lambda.clone(), phi.clone(), p));
                break 'outer;
            }
        }
    }
    Ok(MinusculeReport { minuscule: witness.is_none(), weights, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::root_system::build_root_system;

    fn alg(t: &str) -> Arc<ChevalleyAlgebra> {
        Arc::new(build_chevalley(&build_root_system(t.parse().unwrap()).unwrap()))
    }

    #[test]
    fn sl2_triple() {
        let a = alg("B3");
        let e = highest_root_sl2(&a).unwrap();
        let (x, y, h) = (e.tag("E").unwrap(), e.tag("F").unwrap(), e.tag("H").unwrap());
        assert_eq!(&a.bracket(x, y).unwrap(), h);
        assert_eq!(a.bracket(h, x).unwrap(), x.scale(&Rational::from_int(2)));
        assert_eq!(e.center_lattice().invariants(), vec![2]);
        assert!(check_minuscule(&e).unwrap().minuscule);
        assert!(highest_root_sl2(&alg("A1")).is_err());
    }

    #[test]
    fn long_roots() {
        let g2 = long_root_subalgebra(&alg("G2")).unwrap();
        assert_eq!((g2.dim(), g2.j_structure().type_names()), (8, vec!["A2".to_string()]));
        let c3 = long_root_subalgebra(&alg("C3")).unwrap();
        assert_eq!(c3.dim(), 9);
        assert_eq!(c3.j_structure().type_names(), vec!["A1", "A1", "A1"]);
        assert_eq!(c3.center_lattice().invariants(), vec![2, 2, 2]);
        assert!(long_root_subalgebra(&alg("E6")).is_err());
    }

    #[test]
    fn sl3_cocharacters() {
        let mu = |t: &str| sl3_cocharacter(&build_root_system(t.parse().unwrap()).unwrap()).map(|m| m.pairings);
        assert_eq!(mu("E6").unwrap(), vec![0, 0, 0, 1, 0, 0]);
        assert_eq!(mu("E8").unwrap(), vec![0, 0, 0, 0, 0, 0, 1, 0]);
        assert_eq!(mu("D4").unwrap(), vec![1, 0, 1, 1]);
        assert_eq!(mu("G2").unwrap(), vec![1, 0]);
        assert_eq!(mu("F4").unwrap(), vec![0, 1, 0, 0]);
        assert!(mu("A3").is_err());
        assert!(mu("D3").is_err());
    }

    #[test]
    fn sl3_in_g2_is_long_root() {
        let a = alg("G2");
        let s = minuscule_sl3(&a).unwrap();
        let l = long_root_subalgebra(&a).unwrap();
        assert_eq!(s.subalgebra(), l.subalgebra());
        assert_eq!(s.center_lattice().invariants(), vec![3]);
    }

    #[test]
    fn principal_sl2_is_not_minuscule() {
        let a = alg("A2");
        let two = Rational::from_int(2);
        let e = a.e(&[1, 0]).unwrap().add(&a.e(&[0, 1]).unwrap());
        let f = a.e(&[-1, 0]).unwrap().add(&a.e(&[0, -1]).unwrap()).scale(&two);
        let h = a.h(0).add(&a.h(1)).scale(&two);
        let emb = custom_embedding(&a, &[e, f], &[h], BTreeMap::new()).unwrap();
        assert_eq!(emb.dim(), 3);
        let rep = check_minuscule(&emb).unwrap();
        assert!(!rep.minuscule);
        assert_eq!(rep.witness.unwrap().2.abs(), 4);
    }
}
