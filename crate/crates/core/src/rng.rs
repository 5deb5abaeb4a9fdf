//! Seed derivation for reproducible, parallel replications.
//!
//! Every run owns a [`RunRng`] (ChaCha8) seeded from a single `u64`.
//! Replication `r` of an experiment with base seed `b` uses
//! `derive_seed(b, r)`, a SplitMix64 finalizer applied to `b` offset by
//! `r` golden-ratio increments. Streams for different `r` are therefore
//! decorrelated and independent of the order in which replications execute.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Per-run random source.
pub type RunRng = ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of stream `stream` under `base`.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    splitmix64(base ^ splitmix64(stream.wrapping_mul(GOLDEN_GAMMA)))
}

pub fn run_rng(seed: u64) -> RunRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn derived_seeds_are_distinct() {
        let seeds: HashSet<u64> = (0..10_000).map(|r| derive_seed(42, r)).collect();
        assert_eq!(seeds.len(), 10_000);
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }

    #[test]
    fn splitmix_reference_value() {
        // First output of the reference SplitMix64 generator seeded with 0.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
    }
}
