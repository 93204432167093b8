//! Seeded random parameter points for genericity certificates.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cyclotomic::{CyclotomicNumber, Rational};

/// `count` nonzero rationals p/q with |p| <= 1000, 1 <= q <= 97, as elements of Q(v).
pub fn random_point(order: u32, count: usize, seed: u64) -> Vec<CyclotomicNumber> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: i64 = 0;
            while p == 0 {
                p = rng.gen_range(-1000..=1000);
            }
            let q: i64 = rng.gen_range(1..=97);
            CyclotomicNumber::from_rational(order, Rational::new(BigInt::from(p), BigInt::from(q)))
        })
        .collect()
}
