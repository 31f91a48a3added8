use std::sync::Arc;

use proptest::prelude::*;

use minuscule::chevalley::{build_chevalley, ChevalleyAlgebra};
use minuscule::exact_linalg::{Rational, SparseMatrix, SparseVector};
use minuscule::root_system::build_root_system;
use minuscule::verify::{verify_properties, VerifyOptions};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::new(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(prop_oneof![3 => Just(Rational::zero()), 2 => rational()], dim)
}

proptest! {
    #[test]
    fn rational_field_laws(a in big_rational(), b in big_rational(), c in big_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn rational_string_round_trip(a in big_rational()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn sparse_matches_dense(x in vector(9), y in vector(9), c in rational()) {
        let (sx, sy) = (SparseVector::from_dense(&x), SparseVector::from_dense(&y));
        let sum: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + &(b * &c)).collect();
        prop_assert_eq!(sx.add_scaled(&c, &sy).to_dense(), sum);
        let dot = x.iter().zip(&y).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        prop_assert_eq!(sx.dot(&sy), dot);
        prop_assert_eq!(sx.sub(&sx).nnz(), 0);
    }

    #[test]
    fn matrix_product_is_associative(a in vector(16), b in vector(16), v in vector(4)) {
        let m = |e: &[Rational]| SparseMatrix::from_rows(4, e.chunks(4).map(SparseVector::from_dense).collect());
        let (ma, mb) = (m(&a), m(&b));
        let v = SparseVector::from_dense(&v);
        let lhs = ma.mul(&mb).unwrap().mul_vec(&v).unwrap();
        let rhs = ma.mul_vec(&mb.mul_vec(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ma.mul(&mb).unwrap().transpose(), mb.transpose().mul(&ma.transpose()).unwrap());
    }
}

fn algebra(t: &str) -> Arc<ChevalleyAlgebra> {
    Arc::new(build_chevalley(&build_root_system(t.parse().unwrap()).unwrap()))
}

fn typed_triple() -> impl Strategy<Value = (&'static str, Vec<Rational>, Vec<Rational>, Vec<Rational>)> {
    prop::sample::select(vec![("A3", 15), ("B3", 21), ("C3", 21), ("G2", 14), ("D4", 28), ("F4", 52)])
        .prop_flat_map(|(t, d)| (Just(t), vector(d), vector(d), vector(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_alternating_and_jacobi((t, x, y, z) in typed_triple()) {
        let alg = algebra(t);
        let el = |v: &[Rational]| alg.element(SparseVector::from_dense(v)).unwrap();
        let (x, y, z) = (el(&x), el(&y), el(&z));
        let b = |u: &_, v: &_| alg.bracket(u, v).unwrap();
        prop_assert!(b(&x, &x).is_zero());
        prop_assert_eq!(b(&x, &y), b(&y, &x).scale(&Rational::from_int(-1)));
        let jac = b(&b(&x, &y), &z).add(&b(&b(&y, &z), &x)).add(&b(&b(&z, &x), &y));
        prop_assert!(jac.is_zero());
    }
}

#[test]
fn structure_constants_are_plus_minus_p_plus_one() {
    for t in ["A4", "B4", "C4", "D5", "G2", "F4", "E6"] {
        let alg = algebra(t);
        let rs = alg.root_system();
        let roots = rs.roots();
        for (a, alpha) in roots.iter().enumerate() {
            for (b, beta) in roots.iter().enumerate() {
                let sum: Vec<i64> = alpha.coords.iter().zip(&beta.coords).map(|(x, y)| x + y).collect();
                if !rs.is_root(&sum) {
                    continue;
                }
                let mut p = 0;
                let mut down: Vec<i64> = beta.coords.iter().zip(&alpha.coords).map(|(y, x)| y - x).collect();
                while rs.is_root(&down) {
                    p += 1;
                    down = down.iter().zip(&alpha.coords).map(|(y, x)| y - x).collect();
                }
                let n = alg.structure_constant(a, b).expect("constant for a root sum");
                assert_eq!(n.abs(), p + 1, "{t} N({:?},{:?})", alpha.coords, beta.coords);
            }
        }
    }
}

#[test]
fn cartan_acts_by_root_pairings() {
    for t in ["B3", "C4", "G2", "E7"] {
        let alg = algebra(t);
        let rs = alg.root_system();
        for r in rs.roots() {
            let e = alg.e(&r.coords).unwrap();
            for i in 0..rs.rank() {
                let k = rs.root_pairing(&r.coords, &rs.simple_root(i).coords);
                assert_eq!(alg.bracket(&alg.h(i), &e).unwrap(), e.scale(&Rational::from_int(k)), "{t}");
            }
            let f = alg.e(&r.neg().coords).unwrap();
            assert_eq!(alg.bracket(&e, &f).unwrap(), alg.coroot(&r.coords).unwrap(), "{t}");
        }
    }
}

#[test]
fn property_suite_passes() {
    let reports = verify_properties(&VerifyOptions::default());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| &r.claim).collect();
    assert!(failed.is_empty(), "{failed:?}");
    let count = |prefix: &str| reports.iter().filter(|r| r.claim.starts_with(prefix)).count();
    assert_eq!(count("props.jacobi."), 25);
    assert!(count("props.minuscule.") >= 40);
}
