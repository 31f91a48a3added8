//! Seeded random sampling. Every sampled check draws from its own ChaCha
//! stream, selected by a label, so results do not depend on evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_linalg::Rational;

pub const DEFAULT_SEED: u64 = 20_240_601;

fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn rng(seed: u64, label: &str) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(fnv1a(label));
    r
}

/// `n` integers drawn uniformly from `[-bound, bound]`.
pub fn small_ints(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| Rational::from(rng.gen_range(-bound..=bound))).collect()
}

/// A nonzero integer from `[-bound, bound]`.
pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return Rational::from(v);
        }
    }
}
