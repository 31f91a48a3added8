//! Irreducible reduced root systems of types A–G in Bourbaki numbering.
//!
//! Roots are integer vectors of simple-root coefficients. Lengths come from
//! an integer symmetric form with (α, α) ∈ {2, 4, 6}, so every pairing is an
//! integer contraction and no square roots are ever needed.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the rank of the classical families A–D.
pub const DEFAULT_MAX_CLASSICAL_RANK: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(Error::usage(format!("no root system of type {}{}", family.letter(), rank)))
        }
    }

    /// Rejects classical types above `max_rank`.
    pub fn check_cap(self, max_rank: usize) -> Result<Self> {
        if self.family.is_classical() && self.rank > max_rank {
            return Err(Error::usage(format!(
                "{self} exceeds the classical rank cap {max_rank}"
            )));
        }
        Ok(self)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(unknown()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        RootSystemType::new(family, rank).map_err(|_| unknown())
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root, as coefficients in the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLength {
    Long,
    Short,
}

/// A weight λ, recorded by its pairings ⟨λ, αᵢ∨⟩ with the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub pairings: Vec<i64>,
}

impl Weight {
    pub fn new(pairings: Vec<i64>) -> Self {
        Weight { pairings }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { pairings: vec![0; rank] }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut p = vec![0; rank];
        p[i] = 1;
        Weight { pairings: p }
    }

    pub fn is_dominant(&self) -> bool {
        self.pairings.iter().all(|&x| x >= 0)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    positive: Vec<Root>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    max_norm: i64,
    symmetries: Vec<Vec<usize>>,
}

/// Symmetric form on simple roots: squared lengths and off-diagonal products.
fn symmetric_form(ty: RootSystemType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut b = vec![vec![0i64; n]; n];
    let mut bond = |i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    let mut lengths = vec![2i64; n];
    match ty.family {
        Family::A => (1..n).for_each(|i| bond(i, i + 1, -1)),
        Family::B => {
            lengths = vec![4; n];
            lengths[n - 1] = 2;
            (1..n).for_each(|i| bond(i, i + 1, -2));
        }
        Family::C => {
            lengths[n - 1] = 4;
            (1..n - 1).for_each(|i| bond(i, i + 1, -1));
            bond(n - 1, n, -2);
        }
        Family::D => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1));
            bond(n - 2, n, -1);
        }
        Family::E => {
            bond(2, 4, -1);
            bond(1, 3, -1);
            (3..n).for_each(|i| bond(i, i + 1, -1));
        }
        Family::F => {
            lengths = vec![4, 4, 2, 2];
            bond(1, 2, -2);
            bond(2, 3, -2);
            bond(3, 4, -1);
        }
        Family::G => {
            lengths = vec![2, 6];
            bond(1, 2, -3);
        }
    }
    for (i, l) in lengths.into_iter().enumerate() {
        b[i][i] = l;
    }
    b
}

/// Build a root system, applying the default classical rank cap.
pub fn build_root_system(ty: RootSystemType) -> Result<RootSystem> {
    RootSystem::build_capped(ty, DEFAULT_MAX_CLASSICAL_RANK)
}

impl RootSystem {
    pub fn build_capped(ty: RootSystemType, max_classical_rank: usize) -> Result<Self> {
        let ty = RootSystemType::new(ty.family, ty.rank)?.check_cap(max_classical_rank)?;
        Ok(Self::build_unchecked(ty))
    }

    fn build_unchecked(ty: RootSystemType) -> Self {
        let n = ty.rank;
        let form = symmetric_form(ty);
        let cartan = symmetric_cartan(ty);

        // Grow positive roots by height with the root-string criterion.
        let mut positive: Vec<Root> = (0..n).map(|i| Root::new(unit(n, i))).collect();
        let mut known: HashMap<Vec<i64>, ()> = positive.iter().map(|r| (r.coords.clone(), ())).collect();
        let mut layer: Vec<Vec<i64>> = positive.iter().map(|r| r.coords.clone()).collect();
        while !layer.is_empty() {
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for g in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = g.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..n).map(|j| g[j] * cartan[j][i]).sum();
                    if p - pair > 0 {
                        let mut up = g.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            layer = next.into_iter().collect();
            for g in &layer {
                known.insert(g.clone(), ());
                positive.push(Root::new(g.clone()));
            }
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coords.cmp(&b.coords)));

        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
        let max_norm = (0..n).map(|i| form[i][i]).max().unwrap();
        let symmetries = diagram_symmetries(&cartan);
        RootSystem { ty, cartan, form, positive, roots, index, max_norm, symmetries }
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `cartan()[i][j] = ⟨αᵢ, αⱼ∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Ordered by height, ties broken lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives in the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().unwrap()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::new(unit(self.rank(), i))
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// Index of `-roots()[i]`.
    pub fn negative_index(&self, i: usize) -> usize {
        let p = self.positive.len();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    /// Invariant symmetric form on root-lattice coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (ai, row) in a.iter().zip(&self.form) {
            if *ai == 0 {
                continue;
            }
            s += ai * row.iter().zip(b).map(|(f, bj)| f * bj).sum::<i64>();
        }
        s
    }

    pub fn norm2(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// Squared length of the simple root αᵢ in the internal normalization.
    pub fn simple_norm2(&self, i: usize) -> i64 {
        self.form[i][i]
    }

    pub fn length(&self, root: &Root) -> RootLength {
        if self.norm2(&root.coords) == self.max_norm {
            RootLength::Long
        } else {
            RootLength::Short
        }
    }

    pub fn is_long(&self, root: &Root) -> bool {
        self.length(root) == RootLength::Long
    }

    pub fn has_two_lengths(&self) -> bool {
        (0..self.rank()).any(|i| self.form[i][i] != self.max_norm)
    }

    /// ⟨γ, α∨⟩ for root-lattice vectors γ and a root α.
    pub fn root_pairing(&self, gamma: &[i64], alpha: &[i64]) -> i64 {
        2 * self.inner(gamma, alpha) / self.norm2(alpha)
    }

    /// Coefficients of α∨ in the simple coroots.
    pub fn coroot_coeffs(&self, alpha: &[i64]) -> Vec<i64> {
        let d = self.norm2(alpha);
        (0..self.rank()).map(|i| alpha[i] * self.form[i][i] / d).collect()
    }

    /// The weight of a root-lattice vector: its pairings with the simple coroots.
    pub fn weight_of(&self, gamma: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new((0..n).map(|i| (0..n).map(|j| gamma[j] * self.cartan[j][i]).sum()).collect())
    }

    /// ⟨λ, α∨⟩.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        if lambda.pairings.len() != self.rank() {
            return Err(Error::usage("weight has the wrong rank"));
        }
        if !self.is_root(&alpha.coords) {
            return Err(Error::usage(format!("{:?} is not a root of {}", alpha.coords, self.ty)));
        }
        Ok(self
            .coroot_coeffs(&alpha.coords)
            .iter()
            .zip(&lambda.pairings)
            .map(|(c, l)| c * l)
            .sum())
    }

    pub fn is_minuscule(&self, lambda: &Weight) -> Result<bool> {
        if !lambda.is_dominant() {
            return Err(Error::usage("is_minuscule expects a dominant weight"));
        }
        for alpha in &self.positive {
            if self.pairing(lambda, alpha)?.abs() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.pairings[i];
        Weight::new(
            lambda
                .pairings
                .iter()
                .enumerate()
                .map(|(j, &l)| l - li * self.cartan[i][j])
                .collect(),
        )
    }

    pub fn weyl_orbit(&self, lambda: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.reflect(i, &w);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// Simple-root permutations preserving the Cartan matrix, identity first.
    pub fn diagram_symmetries(&self) -> &[Vec<usize>] {
        &self.symmetries
    }

    /// Image of a root-lattice vector under a simple-root permutation.
    pub fn permute(&self, perm: &[usize], coords: &[i64]) -> Vec<i64> {
        let mut out = vec![0; coords.len()];
        for (i, &c) in coords.iter().enumerate() {
            out[perm[i]] = c;
        }
        out
    }

    /// Sorted list of the connected components of a set of simple-root indices.
    pub fn simple_components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        components(&self.cartan, nodes)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn diagram_symmetries(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn extend(cartan: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        let n = cartan.len();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let ok = (0..k).all(|j| cartan[k][j] == cartan[c][perm[j]] && cartan[j][k] == cartan[perm[j]][c])
                && cartan[k][k] == cartan[c][c];
            if ok {
                used[c] = true;
                perm.push(c);
                extend(cartan, perm, used, out);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(cartan, &mut Vec::new(), &mut vec![false; cartan.len()], &mut out);
    out
}

/// Connected components of the Dynkin graph restricted to `nodes`.
pub(crate) fn components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let nbrs: Vec<usize> = left.iter().copied().filter(|&u| cartan[v][u] != 0).collect();
            for u in nbrs {
                left.remove(&u);
                comp.push(u);
                stack.push(u);
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Identify the type of an irreducible Cartan matrix. B₂ and C₂ coincide
/// and are reported as B₂.
pub fn classify_cartan(cartan: &[Vec<i64>]) -> Result<RootSystemType> {
    let n = cartan.len();
    if n == 0 || components(cartan, &(0..n).collect::<Vec<_>>()).len() != 1 {
        return Err(Error::structural("Cartan matrix is empty or decomposable"));
    }
    [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| RootSystemType::new(f, n).ok())
        .find(|&t| isomorphic(&symmetric_cartan(t), cartan))
        .ok_or_else(|| Error::structural("unrecognized Cartan matrix"))
}

fn symmetric_cartan(ty: RootSystemType) -> Vec<Vec<i64>> {
    let form = symmetric_form(ty);
    let n = ty.rank;
    (0..n).map(|i| (0..n).map(|j| 2 * form[i][j] / form[j][j]).collect()).collect()
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = perm.len();
        if k == a.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] || a[k][k] != b[c][c] {
                continue;
            }
            if (0..k).all(|j| a[k][j] == b[c][perm[j]] && a[j][k] == b[perm[j]][c]) {
                used[c] = true;
                perm.push(c);
                if go(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; n])
}
