use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rational::BigRat;

/// Coordinates of one random draw: which run, which sample, which retry.
///
/// Every value drawn under a key is a pure function of the key and a slot
/// number, so samples can be generated in any order or on any thread and
/// still reproduce the sequential stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SampleKey {
    pub seed: u64,
    pub index: u64,
    pub attempt: u64,
}

impl SampleKey {
    pub fn new(seed: u64, index: u64, attempt: u64) -> Self {
        SampleKey {
            seed,
            index,
            attempt,
        }
    }

    /// Independent generator for one slot under this key.
    pub(crate) fn rng(&self, domain: u64, slot: u64) -> ChaCha8Rng {
        let mut h = splitmix(domain ^ 0x5bd1_e995_6c8e_9cf5);
        for word in [self.seed, self.index, self.attempt, slot] {
            h = splitmix(h ^ word);
        }
        ChaCha8Rng::seed_from_u64(h)
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

const CONFIG_DOMAIN: u64 = 1;
pub(crate) const ZIPPEL_DOMAIN: u64 = 2;

/// Numerator uniform in [-20, 20], denominator uniform in [1, 10].
pub fn sample_rational(key: SampleKey, slot: u64) -> BigRat {
    let mut rng = key.rng(CONFIG_DOMAIN, slot);
    let n: i64 = rng.random_range(-20..=20);
    let d: i64 = rng.random_range(1..=10);
    BigRat::new(BigInt::from(n), BigInt::from(d))
}
