use std::collections::BTreeMap;

use super::Rational;
use crate::error::{Error, Result};

/// Sparse vector over ℚ: sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} out of range for dim {dim}");
        SparseVector { dim, entries: vec![(index, Rational::one())] }
    }

    /// Builds a vector from arbitrary pairs; repeated indices are summed and zeros dropped.
    pub fn from_pairs<I>(dim: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < dim, "index {i} out of range for dim {dim}");
            if v.is_zero() {
                continue;
            }
            *acc.entry(i).or_default() += v;
        }
        SparseVector {
            dim,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Trusted constructor: `entries` must be sorted, distinct and nonzero.
    pub(crate) fn from_sorted(dim: usize, entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        SparseVector { dim, entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVector { dim: values.len(), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let dense: Vec<Rational> = values.iter().map(|&v| Rational::from_int(v)).collect();
        Self::from_dense(&dense)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Index of the first stored entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVector) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> Self {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVector) -> Self {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut acc = Rational::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            match i.cmp(j) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    acc += x * y;
                    a += 1;
                    b += 1;
                }
            }
        }
        acc
    }

    /// Restriction to the given coordinates, re-indexed `0..indices.len()`.
    pub fn restrict(&self, indices: &[usize]) -> Self {
        let dense: Vec<Rational> = indices.iter().map(|&i| self.get(i)).collect();
        Self::from_dense(&dense)
    }
}

/// Accumulates a sparse vector in a dense scratch buffer.
pub(crate) struct DenseAccumulator {
    values: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl DenseAccumulator {
    pub fn new(dim: usize) -> Self {
        DenseAccumulator { values: vec![Rational::zero(); dim], touched: Vec::new(), mark: vec![false; dim] }
    }

    pub fn add(&mut self, index: usize, value: &Rational) {
        if !self.mark[index] {
            self.mark[index] = true;
            self.touched.push(index);
        }
        self.values[index] += value;
    }

    pub fn finish(&mut self) -> SparseVector {
        self.touched.sort_unstable();
        let dim = self.values.len();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::take(&mut self.values[i]);
            self.mark[i] = false;
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SparseVector::from_sorted(dim, entries)
    }
}

/// Sparse matrix over ℚ, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVector::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(|i| SparseVector::unit(n, i)).collect() }
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        let data = values
            .iter()
            .enumerate()
            .map(|(i, v)| SparseVector::from_pairs(n, [(i, v.clone())]))
            .collect();
        SparseMatrix { rows: n, cols: n, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVector>) -> Self {
        assert!(rows.iter().all(|r| r.dim() == cols), "row dimension mismatch");
        SparseMatrix { rows: rows.len(), cols, data: rows }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let cols = columns.len();
        let mut triplets = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.dim(), rows, "column dimension mismatch");
            for (i, v) in c.iter() {
                triplets.push((i, j, v.clone()));
            }
        }
        Self::from_triplets(rows, cols, triplets)
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut per_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "entry ({i},{j}) out of range");
            per_row[i].push((j, v));
        }
        let data = per_row.into_iter().map(|r| SparseVector::from_pairs(cols, r)).collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense_ints(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| SparseVector::from_ints(r)).collect();
        SparseMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVector] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, j, v)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, _)| i == j)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &SparseVector) -> Result<SparseVector> {
        if v.dim() != self.cols {
            return Err(Error::usage(format!(
                "matrix with {} columns applied to vector of dim {}",
                self.cols,
                v.dim()
            )));
        }
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let x = r.dot(v);
                (!x.is_zero()).then_some((i, x))
            })
            .collect();
        Ok(SparseVector::from_sorted(self.rows, entries))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let triplets: Vec<_> = self.entries().map(|(i, j, v)| (j, i, v.clone())).collect();
        Self::from_triplets(self.cols, self.rows, triplets)
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = DenseAccumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|r| {
                for (k, a) in r.iter() {
                    for (j, b) in other.data[k].iter() {
                        acc.add(j, &(a * b));
                    }
                }
                acc.finish()
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::usage("matrix shape mismatch"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self - λ I` for square matrices.
    pub fn shift(&self, lambda: &Rational) -> SparseMatrix {
        assert!(self.is_square());
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| r.add_scaled(&-lambda.clone(), &SparseVector::unit(self.cols, i)))
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[SparseMatrix]) -> Result<SparseMatrix> {
        let cols = match blocks.first() {
            Some(b) => b.cols,
            None => return Ok(SparseMatrix::zero(0, 0)),
        };
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::usage("vstack column mismatch"));
        }
        let data: Vec<SparseVector> = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(SparseMatrix { rows: data.len(), cols, data })
    }

    /// Upper bound on the absolute value of every eigenvalue (max absolute row sum).
    pub fn row_sum_bound(&self) -> Rational {
        self.data
            .iter()
            .map(|r| r.iter().map(|(_, v)| v.abs()).sum::<Rational>())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVector::from_ints(&[1, 2, 0, 3]);
        let b = SparseVector::from_ints(&[1, 0, 5, 3]);
        let d = a.sub(&b);
        assert_eq!(d, SparseVector::from_ints(&[0, 2, -5, 0]));
        assert_eq!(d.nnz(), 2);
    }

    #[test]
    fn matrix_products() {
        let a = SparseMatrix::from_dense_ints(&[vec![1, 2], vec![3, 4]]);
        let v = SparseVector::from_ints(&[1, -1]);
        assert_eq!(a.mul_vec(&v).unwrap(), SparseVector::from_ints(&[-1, -1]));
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, SparseMatrix::from_dense_ints(&[vec![7, 10], vec![15, 22]]));
        assert_eq!(a.transpose().get(0, 1), Rational::from_int(3));
        assert_eq!(a.trace(), Rational::from_int(5));
        assert!(a.mul_vec(&SparseVector::zero(3)).is_err());
    }
}
