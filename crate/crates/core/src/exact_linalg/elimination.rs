//! Exact row reduction: solving, kernels, rank and subspace membership.
//!
//! Rows are reduced incrementally into reduced row echelon form. Each new
//! row is cleared against the existing pivots, normalized to a unit pivot at
//! its lowest surviving column, and that column is then cleared from the
//! earlier rows. Inputs in this crate are sparse with small integer entries,
//! so fill-in stays modest at the dimensions we handle (≤ 248).

use super::{Rational, SparseMatrix, SparseVector};
use crate::error::{Error, Result};

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new(), row_of_pivot: vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col].is_some()
    }

    /// Residue of `v` after clearing all pivot columns.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.dim, "dimension mismatch");
        // In RREF a pivot row is zero on every other pivot column, so the
        // multipliers can be read off `v` directly.
        let mut out = v.clone();
        for (col, coeff) in v.iter() {
            if let Some(r) = self.row_of_pivot[col] {
                out = out.add_scaled(&-coeff.clone(), &self.rows[r]);
            }
        }
        out
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the row span.
    pub fn coordinates(&self, v: &SparseVector) -> Option<Vec<Rational>> {
        if !self.reduce(v).is_zero() {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.recip());
        for row in self.rows.iter_mut() {
            let c = row.get(pivot);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        self.row_of_pivot[pivot] = Some(self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn null_space(&self) -> Vec<SparseVector> {
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.dim];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (j, v) in row.iter() {
                if j != p {
                    columns[j].push((p, -v.clone()));
                }
            }
        }
        (0..self.dim)
            .filter(|&j| !self.is_pivot(j))
            .map(|j| {
                let mut entries = std::mem::take(&mut columns[j]);
                entries.push((j, Rational::one()));
                SparseVector::from_pairs(self.dim, entries)
            })
            .collect()
    }
}

fn echelon_of_rows(a: &SparseMatrix) -> Echelon {
    let mut ech = Echelon::new(a.cols());
    for row in a.row_vectors() {
        ech.insert(row);
    }
    ech
}

/// Exact solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &SparseMatrix, b: &SparseVector) -> Result<Option<SparseVector>> {
    if a.rows() != b.dim() {
        return Err(Error::usage(format!(
            "solve: matrix has {} rows but right-hand side has dim {}",
            a.rows(),
            b.dim()
        )));
    }
    let n = a.cols();
    let mut ech = Echelon::new(n + 1);
    for (i, row) in a.row_vectors().iter().enumerate() {
        let mut pairs: Vec<(usize, Rational)> = row.iter().map(|(j, v)| (j, v.clone())).collect();
        let rhs = b.get(i);
        if !rhs.is_zero() {
            pairs.push((n, rhs));
        }
        ech.insert(&SparseVector::from_pairs(n + 1, pairs));
    }
    if ech.is_pivot(n) {
        return Ok(None);
    }
    let x = ech
        .rows()
        .iter()
        .zip(ech.pivots())
        .map(|(row, &p)| (p, row.get(n)))
        .collect::<Vec<_>>();
    Ok(Some(SparseVector::from_pairs(n, x)))
}

/// Exact basis of the null space of `A`; empty iff `A` is injective.
pub fn kernel_basis(a: &SparseMatrix) -> Vec<SparseVector> {
    echelon_of_rows(a).null_space()
}

/// Exact rank over ℚ.
pub fn rank(a: &SparseMatrix) -> usize {
    echelon_of_rows(a).rank()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &SparseMatrix) -> Result<Option<SparseMatrix>> {
    if !a.is_square() {
        return Err(Error::usage("inverse of a non-square matrix"));
    }
    let n = a.rows();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        match solve(a, &SparseVector::unit(n, j))? {
            Some(x) => columns.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(SparseMatrix::from_columns(n, &columns)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn solve_identity() {
        let a = SparseMatrix::identity(2);
        let x = solve(&a, &SparseVector::from_ints(&[3, 5])).unwrap().unwrap();
        assert_eq!(x, SparseVector::from_ints(&[3, 5]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = SparseMatrix::from_dense_ints(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&a, &SparseVector::from_ints(&[1, 3])).unwrap().is_none());
    }

    #[test]
    fn solve_matches_cramer() {
        // Cramer: det = 1*4 - 2*3 = -2; x = (5*4 - 2*6)/-2 = -4, y = (1*6 - 3*5)/-2 = 9/2.
        let a = SparseMatrix::from_dense_ints(&[vec![1, 2], vec![3, 4]]);
        let x = solve(&a, &SparseVector::from_ints(&[5, 6])).unwrap().unwrap();
        assert_eq!(x.to_dense(), vec![q(-4, 1), q(9, 2)]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = SparseMatrix::identity(2);
        assert!(matches!(solve(&a, &SparseVector::zero(3)), Err(Error::Usage(_))));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        let k = kernel_basis(&SparseMatrix::zero(3, 3));
        assert_eq!(k.len(), 3);
        let mut ech = Echelon::new(3);
        for v in &k {
            ech.insert(v);
        }
        assert_eq!(ech.rank(), 3);

        let a = SparseMatrix::from_dense_ints(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        // Row-reduction oracle: x + y = 0, z = 0.
        let v = &k[0];
        assert_eq!(v.get(0), -v.get(1));
        assert!(v.get(2).is_zero() && !v.get(0).is_zero());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::identity(5)), 5);
        assert_eq!(rank(&SparseMatrix::zero(4, 6)), 0);
        assert_eq!(rank(&SparseMatrix::from_dense_ints(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = SparseMatrix::from_dense_ints(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&a).unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), SparseMatrix::identity(2));
        let sing = SparseMatrix::from_dense_ints(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&sing).unwrap().is_none());
    }
}
