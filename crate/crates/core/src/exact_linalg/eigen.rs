//! Simultaneous integer eigenspaces of commuting diagonalizable operators.

use std::collections::BTreeMap;

use super::elimination::Echelon;
use super::{Rational, SparseMatrix, SparseVector, Subspace};
use crate::error::{Error, Result};

/// Eigenvalue tuple → basis of the simultaneous eigenspace.
pub type Eigenspaces = BTreeMap<Vec<i64>, Vec<SparseVector>>;

/// Splits the ambient space into simultaneous eigenspaces of `ops`.
///
/// Each operator must be diagonalizable with integer eigenvalues and the
/// operators must commute. Anything else is reported as a structural error.
pub fn common_integer_eigenspaces(ops: &[SparseMatrix]) -> Result<Eigenspaces> {
    let n = match ops.first() {
        Some(op) => op.rows(),
        None => {
            return Err(Error::usage(
                "common_integer_eigenspaces: ambient dimension unknown without operators; use eigenspaces_within",
            ))
        }
    };
    check_shapes(ops, n)?;
    if ops.iter().all(|op| op.is_diagonal()) {
        let mut out = Eigenspaces::new();
        for i in 0..n {
            let key = ops
                .iter()
                .map(|op| integer_eigenvalue(&op.get(i, i)))
                .collect::<Result<Vec<_>>>()?;
            out.entry(key).or_default().push(SparseVector::unit(n, i));
        }
        return Ok(out);
    }
    eigenspaces_within(ops, &Subspace::whole(n))
}

/// Simultaneous eigenspaces of `ops` restricted to an invariant subspace.
pub fn eigenspaces_within(ops: &[SparseMatrix], space: &Subspace) -> Result<Eigenspaces> {
    let n = space.ambient_dim();
    check_shapes(ops, n)?;
    let mut parts: Vec<(Vec<i64>, Subspace)> = vec![(Vec::new(), space.clone())];
    for op in ops {
        let mut next = Vec::new();
        for (key, sub) in parts {
            for (lambda, piece) in split_one(op, &sub)? {
                let mut k = key.clone();
                k.push(lambda);
                next.push((k, piece));
            }
        }
        parts = next;
    }
    let mut out = Eigenspaces::new();
    for (key, sub) in parts {
        if sub.dim() > 0 {
            out.insert(key, sub.basis().to_vec());
        }
    }
    Ok(out)
}

fn check_shapes(ops: &[SparseMatrix], n: usize) -> Result<()> {
    for op in ops {
        if op.rows() != n || op.cols() != n {
            return Err(Error::usage(format!(
                "operator of shape {}x{} on a space of dimension {n}",
                op.rows(),
                op.cols()
            )));
        }
    }
    Ok(())
}

fn integer_eigenvalue(x: &Rational) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::structural(format!("non-integer eigenvalue {x}")))
}

fn split_one(op: &SparseMatrix, sub: &Subspace) -> Result<Vec<(i64, Subspace)>> {
    let k = sub.dim();
    if k == 0 {
        return Ok(Vec::new());
    }
    let n = sub.ambient_dim();
    // Matrix of `op` restricted to `sub`, column j = coordinates of op·b_j.
    let mut columns = Vec::with_capacity(k);
    for b in sub.basis() {
        let image = op.mul_vec(b)?;
        let coords = sub
            .coordinates(&image)
            .ok_or_else(|| Error::structural("subspace is not invariant under the operator"))?;
        columns.push(SparseVector::from_dense(&coords));
    }
    let restricted = SparseMatrix::from_columns(k, &columns);
    let bound = restricted.row_sum_bound().ceil();
    let bound: i64 = i64::try_from(bound).map_err(|_| Error::structural("eigenvalue bound overflow"))?;
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in -bound..=bound {
        let shifted = restricted.shift(&Rational::from_int(lambda));
        let mut ech = Echelon::new(k);
        for row in shifted.row_vectors() {
            ech.insert(row);
        }
        let kernel = ech.null_space();
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        let lifted = kernel.iter().map(|c| {
            let mut v = SparseVector::zero(n);
            for (j, cj) in c.iter() {
                v = v.add_scaled(cj, &sub.basis()[j]);
            }
            v
        });
        out.push((lambda, Subspace::span(n, lifted)));
        if found == k {
            break;
        }
    }
    if found != k {
        return Err(Error::structural(format!(
            "operator is not diagonalizable with integer eigenvalues on a {k}-dimensional subspace ({found} eigenvectors found)"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[i64]) -> SparseMatrix {
        SparseMatrix::diagonal(&v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn single_diagonal() {
        let e = common_integer_eigenspaces(&[diag(&[1, -1])]).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![1]], vec![SparseVector::unit(2, 0)]);
        assert_eq!(e[&vec![-1]], vec![SparseVector::unit(2, 1)]);
    }

    #[test]
    fn empty_ops_within() {
        let e = eigenspaces_within(&[], &Subspace::whole(3)).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&Vec::<i64>::new()].len(), 3);
    }

    #[test]
    fn two_ops_keys() {
        let e = common_integer_eigenspaces(&[diag(&[2, 0, -2]), diag(&[0, 1, 0])]).unwrap();
        let keys: Vec<_> = e.keys().cloned().collect();
        assert_eq!(keys, vec![vec![-2, 0], vec![0, 1], vec![2, 0]]);
        assert!(e.values().all(|b| b.len() == 1));
    }

    #[test]
    fn non_diagonal_operator() {
        // [[0,1],[1,0]] has eigenvalues ±1 with eigenvectors (1,1), (1,-1).
        let m = SparseMatrix::from_dense_ints(&[vec![0, 1], vec![1, 0]]);
        let e = common_integer_eigenspaces(std::slice::from_ref(&m)).unwrap();
        assert_eq!(e.len(), 2);
        for (key, basis) in &e {
            for v in basis {
                assert_eq!(m.mul_vec(v).unwrap(), v.scale(&Rational::from_int(key[0])));
            }
        }
    }

    #[test]
    fn non_integer_eigenvalue_rejected() {
        let m = SparseMatrix::diagonal(&[Rational::new(1, 2)]);
        assert!(matches!(common_integer_eigenspaces(&[m]), Err(Error::Structural(_))));
        // Nilpotent Jordan block: not diagonalizable.
        let j = SparseMatrix::from_dense_ints(&[vec![0, 1], vec![0, 0]]);
        assert!(matches!(common_integer_eigenspaces(&[j]), Err(Error::Structural(_))));
    }
}
