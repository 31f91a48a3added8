//! Homogeneous polynomials recovered from evaluations, plus two oracle
//! polynomials (Cayley's 2×2×2 hyperdeterminant and the 3×3 symmetric
//! determinant).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_linalg::{solve, Rational, SparseMatrix, SparseVector};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// A polynomial stored as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            let slot = p.terms.entry(m).or_insert_with(Rational::zero);
            *slot += c;
        }
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars, "point arity");
        self.terms.iter().map(|(m, c)| c * &monomial_value(m, x)).sum()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    /// Substitutes `x_i ↦ s_i x_i`.
    pub fn rescale_vars(&self, s: &[Rational]) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, v)| (m.clone(), v * &monomial_value(m, s))))
    }
}

pub fn monomial_value(m: &[u32], x: &[Rational]) -> Rational {
    let mut out = Rational::one();
    for (e, v) in m.iter().zip(x) {
        if *e > 0 {
            out *= v.pow(*e);
        }
    }
    out
}

/// All exponent vectors in `n` variables of total degree `d`, in lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

fn support(m: &[u32]) -> Vec<usize> {
    m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
}

/// Interpolates a homogeneous polynomial of degree `d` in `n` variables from
/// its values on the lattice points `{x ∈ ℕⁿ : |x| = d}`, which are unisolvent.
///
/// Returns the polynomial together with the evaluations it was fitted to.
pub fn interpolate_homogeneous<F>(n: usize, d: u32, mut f: F) -> Result<(Polynomial, Vec<(Monomial, Rational)>)>
where
    F: FnMut(&[Rational]) -> Result<Rational>,
{
    let points = monomials(n, d);
    let mut values = Vec::with_capacity(points.len());
    for p in &points {
        let x: Vec<Rational> = p.iter().map(|&e| Rational::from(e as i64)).collect();
        values.push((p.clone(), f(&x)?));
    }
    // The evaluation matrix is block triangular with respect to supports:
    // a monomial vanishes at every point whose support misses its own.
    let mut by_support: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for (k, p) in points.iter().enumerate() {
        let s = support(p);
        by_support.entry((s.len(), s)).or_default().push(k);
    }
    let mut coeffs: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for ((_, _), block) in &by_support {
        let m = block.len();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for &pi in block {
            let x: Vec<Rational> = points[pi].iter().map(|&e| Rational::from(e as i64)).collect();
            let known: Rational = coeffs.iter().map(|(mono, c)| c * &monomial_value(mono, &x)).sum();
            rhs.push(&values[pi].1 - &known);
            rows.push(SparseVector::from_dense(&block.iter().map(|&mj| monomial_value(&points[mj], &x)).collect::<Vec<_>>()));
        }
        let a = SparseMatrix::from_rows(m, rows);
        let sol = solve(&a, &SparseVector::from_dense(&rhs))?
            .ok_or_else(|| Error::structural("interpolation block is singular"))?;
        for (j, &mj) in block.iter().enumerate() {
            let c = sol.get(j);
            if !c.is_zero() {
                coeffs.insert(points[mj].clone(), c);
            }
        }
    }
    Ok((Polynomial::from_terms(n, coeffs), values))
}

/// Flat index of the entry `a[i][j][k]` of a 2×2×2 tensor.
pub fn cube_index(i: usize, j: usize, k: usize) -> usize {
    4 * i + 2 * j + k
}

/// Cayley's hyperdeterminant of a 2×2×2 tensor, entries indexed by [`cube_index`].
pub fn hyperdeterminant(a: &[Rational]) -> Rational {
    assert_eq!(a.len(), 8);
    let e = |i, j, k| &a[cube_index(i, j, k)];
    let prod = |xs: [&Rational; 4]| -> Rational { xs.into_iter().fold(Rational::one(), |acc, x| &acc * x) };
    let squares = prod([e(0, 0, 0), e(0, 0, 0), e(1, 1, 1), e(1, 1, 1)])
        + prod([e(0, 0, 1), e(0, 0, 1), e(1, 1, 0), e(1, 1, 0)])
        + prod([e(0, 1, 0), e(0, 1, 0), e(1, 0, 1), e(1, 0, 1)])
        + prod([e(1, 0, 0), e(1, 0, 0), e(0, 1, 1), e(0, 1, 1)]);
    let pairs = prod([e(0, 0, 0), e(0, 0, 1), e(1, 1, 0), e(1, 1, 1)])
        + prod([e(0, 0, 0), e(0, 1, 0), e(1, 0, 1), e(1, 1, 1)])
        + prod([e(0, 0, 0), e(1, 0, 0), e(0, 1, 1), e(1, 1, 1)])
        + prod([e(0, 0, 1), e(0, 1, 0), e(1, 0, 1), e(1, 1, 0)])
        + prod([e(0, 0, 1), e(1, 0, 0), e(0, 1, 1), e(1, 1, 0)])
        + prod([e(0, 1, 0), e(1, 0, 0), e(0, 1, 1), e(1, 0, 1)]);
    let quads = prod([e(0, 0, 0), e(0, 1, 1), e(1, 0, 1), e(1, 1, 0)])
        + prod([e(0, 0, 1), e(0, 1, 0), e(1, 0, 0), e(1, 1, 1)]);
    squares - Rational::from(2) * pairs + Rational::from(4) * quads
}

/// Determinant of the symmetric matrix `[[d0, o2, o1], [o2, d1, o0], [o1, o0, d2]]`,
/// so `o_i` sits opposite `d_i`.
pub fn symmetric_det3(d: &[Rational; 3], o: &[Rational; 3]) -> Rational {
    let two = Rational::from(2);
    &d[0] * &d[1] * &d[2] + &two * &o[0] * &o[1] * &o[2]
        - &d[0] * &o[0] * &o[0]
        - &d[1] * &o[1] * &o[1]
        - &d[2] * &o[2] * &o[2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(8, 4).len(), 330);
        assert_eq!(monomials(6, 3).len(), 56);
        assert_eq!(monomials(1, 3), vec![vec![3]]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // x³ - 2xyz + 5/3 z²y
        let p = Polynomial::from_terms(
            3,
            [(vec![3, 0, 0], r(1)), (vec![1, 1, 1], r(-2)), (vec![0, 1, 2], Rational::new(5, 3))],
        );
        let (q, values) = interpolate_homogeneous(3, 3, |x| Ok(p.eval(x))).unwrap();
        assert_eq!(q, p);
        assert_eq!(values.len(), 10);
    }

    #[test]
    fn hyperdeterminant_oracle_values() {
        let mut a = vec![r(0); 8];
        a[cube_index(0, 0, 0)] = r(1);
        a[cube_index(1, 1, 1)] = r(1);
        assert_eq!(hyperdeterminant(&a), r(1));
        // Rank one tensors have vanishing hyperdeterminant.
        let (u, v, w) = ([r(2), r(-3)], [r(5), r(7)], [r(-1), r(4)]);
        let mut t = vec![r(0); 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    t[cube_index(i, j, k)] = &u[i] * &v[j] * &w[k];
                }
            }
        }
        assert!(hyperdeterminant(&t).is_zero());
    }

    #[test]
    fn symmetric_det_matches_expansion() {
        // [[1,2,3],[2,4,5],[3,5,6]] has determinant -1.
        let d = [r(1), r(4), r(6)];
        let o = [r(5), r(3), r(2)];
        assert_eq!(symmetric_det3(&d, &o), r(-1));
    }
}
