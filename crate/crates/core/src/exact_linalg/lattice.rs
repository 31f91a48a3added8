//! Integer lattices: Hermite normal form, reduction modulo a full-rank
//! sublattice, and Smith invariants of finite quotients ℤⁿ/L.

use crate::error::{Error, Result};

fn row_hnf(mut rows: Vec<Vec<i128>>, n: usize) -> Vec<Vec<i128>> {
    let mut out: Vec<Vec<i128>> = Vec::new();
    let mut r0 = 0;
    for col in 0..n {
        // Euclid on column `col` among rows r0.. .
        loop {
            let nz: Vec<usize> = (r0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &p = nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let q = rows[i][col].div_euclid(rows[p][col]);
                    let pr = rows[p].clone();
                    for (x, y) in rows[i].iter_mut().zip(pr) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (r0..rows.len()).find(|&i| rows[i][col] != 0) {
            rows.swap(r0, i);
            if rows[r0][col] < 0 {
                rows[r0].iter_mut().for_each(|x| *x = -*x);
            }
            let pr = rows[r0].clone();
            for row in out.iter_mut() {
                let q = row[col].div_euclid(pr[col]);
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= q * y;
                }
            }
            out.push(pr);
            r0 += 1;
        }
    }
    out
}

/// The quotient ℤⁿ / L for a full-rank lattice L given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotient {
    n: usize,
    hnf: Vec<Vec<i128>>,
}

impl LatticeQuotient {
    pub fn new(n: usize, generators: &[Vec<i64>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::usage("lattice generator of the wrong length"));
        }
        let rows = generators.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
        let hnf = row_hnf(rows, n);
        if hnf.len() != n {
            return Err(Error::structural("sublattice is not of full rank"));
        }
        Ok(LatticeQuotient { n, hnf })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Canonical representative of `v + L`, each pivot coordinate in `[0, d)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        let mut x: Vec<i128> = v.iter().map(|&a| a as i128).collect();
        // HNF of a full-rank lattice is upper triangular with pivot i at column i.
        for row in &self.hnf {
            let col = row.iter().position(|&a| a != 0).unwrap();
            let q = x[col].div_euclid(row[col]);
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi -= q * ri;
            }
        }
        x.into_iter().map(|a| a as i64).collect()
    }

    pub fn order(&self) -> u64 {
        self.hnf.iter().enumerate().map(|(i, r)| r[i] as u64).product()
    }

    /// Invariant factors d₁ | d₂ | … of the quotient, omitting the trivial ones.
    pub fn invariants(&self) -> Vec<u64> {
        smith_invariants(&self.hnf)
    }

    /// All canonical representatives, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let diag: Vec<i64> = (0..self.n).map(|i| self.hnf[i][i] as i64).collect();
        let mut out = vec![vec![0i64; self.n]];
        for (i, &d) in diag.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d).map(move |k| {
                        let mut w = v.clone();
                        w[i] = k;
                        w
                    })
                })
                .collect();
        }
        let mut reduced: Vec<Vec<i64>> = out.iter().map(|v| self.reduce(v)).collect();
        reduced.sort();
        reduced.dedup();
        reduced
    }
}

fn smith_invariants(m: &[Vec<i128>]) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Find a nonzero pivot of minimal absolute value in the remaining block.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    let pr = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(pr) {
                        *x -= q * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        let y = row[t];
                        row[j] -= q * y;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block by p.
            if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
                let ri = a[i].clone();
                for (x, y) in a[t].iter_mut().zip(ri) {
                    *x += y;
                }
                continue;
            }
            diag.push(p.unsigned_abs() as u64);
            break;
        }
    }
    finish(diag)
}

fn finish(diag: Vec<u64>) -> Vec<u64> {
    diag.into_iter().filter(|&d| d != 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_quotients() {
        // A₂: ℤ/3.
        let a2 = LatticeQuotient::new(2, &[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.order(), 3);
        assert_eq!(a2.invariants(), vec![3]);
        // D₄: (ℤ/2)².
        let d4 = LatticeQuotient::new(
            4,
            &[vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
        )
        .unwrap();
        assert_eq!(d4.invariants(), vec![2, 2]);
        assert_eq!(d4.elements().len(), 4);
        // A₁³: (ℤ/2)³.
        let a1c = LatticeQuotient::new(3, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(a1c.invariants(), vec![2, 2, 2]);
        // A₃: ℤ/4.
        let a3 = LatticeQuotient::new(3, &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(a3.invariants(), vec![4]);
    }

    #[test]
    fn reduce_is_class_function() {
        let a2 = LatticeQuotient::new(2, &[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.reduce(&[1, 0]), a2.reduce(&[-1, 1]));
        assert_eq!(a2.reduce(&[2, -1]), vec![0, 0]);
        assert_ne!(a2.reduce(&[1, 0]), a2.reduce(&[0, 1]));
    }

    #[test]
    fn degenerate_lattice_rejected() {
        assert!(LatticeQuotient::new(2, &[vec![1, 1]]).is_err());
    }
}
