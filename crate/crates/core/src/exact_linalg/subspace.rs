//! Subspaces of ℚⁿ held in reduced row echelon form.

use std::borrow::Borrow;

use super::elimination::Echelon;
use super::{Rational, SparseVector};

/// A linear subspace of ℚⁿ with a canonical (RREF) basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ech: Echelon::new(ambient) }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| SparseVector::unit(ambient, i)))
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: Borrow<SparseVector>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.borrow());
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> &[SparseVector] {
        self.ech.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    pub fn insert(&mut self, v: &SparseVector) -> bool {
        self.ech.insert(v)
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.ech.contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to `basis()`, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVector) -> Option<Vec<Rational>> {
        self.ech.coordinates(v)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(v);
        }
        s
    }

    /// Residue of `v` modulo the subspace (zero iff `v` is contained).
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        self.ech.reduce(v)
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.dim() == other.dim() && self.contains_space(other)
    }
}

impl Eq for Subspace {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis() {
        let a = Subspace::span(3, [SparseVector::from_ints(&[1, 1, 0]), SparseVector::from_ints(&[0, 1, 1])]);
        let b = Subspace::span(3, [SparseVector::from_ints(&[1, 2, 1]), SparseVector::from_ints(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&SparseVector::from_ints(&[2, 3, 1])));
        assert!(!a.contains(&SparseVector::from_ints(&[1, 0, 0])));
    }

    #[test]
    fn coordinates_reconstruct() {
        let s = Subspace::span(3, [SparseVector::from_ints(&[1, 1, 0]), SparseVector::from_ints(&[0, 1, 1])]);
        let v = SparseVector::from_ints(&[2, 5, 3]);
        let c = s.coordinates(&v).unwrap();
        let mut back = SparseVector::zero(3);
        for (ci, b) in c.iter().zip(s.basis()) {
            back = back.add_scaled(ci, b);
        }
        assert_eq!(back, v);
    }
}
