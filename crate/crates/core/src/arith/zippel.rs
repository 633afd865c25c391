use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::poly::MultiPoly;
use super::rational::BigRat;
use super::sampling::{SampleKey, ZIPPEL_DOMAIN};

const BOUND: i64 = 1_000_000;

/// Probabilistic zero test: evaluates `p` at `trials` seeded integer points
/// with coordinates in [-10^6, 10^6].
///
/// `false` is a certificate of nonzeroness. `true` only means "plausibly
/// zero"; callers that need a proof must follow up with
/// [`MultiPoly::is_zero`].
pub fn schwartz_zippel_check(p: &MultiPoly, trials: usize, seed: u64) -> bool {
    assert!(trials >= 1, "at least one trial is required");
    if p.is_zero() {
        return true;
    }
    (0..trials as u64).all(|t| {
        let point: Vec<BigRat> = (0..p.arity() as u64)
            .map(|slot| {
                let mut rng = SampleKey::new(seed, t, 0).rng(ZIPPEL_DOMAIN, slot);
                BigRat::from_integer(BigInt::from(rng.random_range(-BOUND..=BOUND)))
            })
            .collect();
        p.eval(&point)
            .expect("point has the polynomial's arity")
            .is_zero()
    })
}
