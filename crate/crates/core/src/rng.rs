//! Seed derivation for reproducible, schedule-independent randomness.
//!
//! Every random stream is keyed on `(seed, experiment, index)`. The key is
//! folded through the SplitMix64 finaliser:
//!
//! ```text
//! s0 = mix(seed)
//! s1 = mix(s0 ^ experiment)
//! s2 = mix(s1 ^ index)
//! ```
//!
//! where `mix(z)` adds the golden-ratio increment `0x9E3779B97F4A7C15` and
//! applies the SplitMix64 avalanche. `s2` seeds a ChaCha8 generator.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator used for all simulation streams.
pub type StreamRng = ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
pub fn splitmix64(z: u64) -> u64 {
    let mut z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derived 64-bit seed for stream `index` of `experiment`.
pub fn derive_seed(seed: u64, experiment: u64, index: u64) -> u64 {
    let s0 = splitmix64(seed);
    let s1 = splitmix64(s0 ^ experiment);
    splitmix64(s1 ^ index)
}

pub fn stream(seed: u64, experiment: u64, index: u64) -> StreamRng {
    StreamRng::seed_from_u64(derive_seed(seed, experiment, index))
}

/// Experiment identifiers used to separate stream families.
pub mod experiment {
    pub const CODEBOOK: u64 = 0x01;
    pub const DENSITY: u64 = 0x02;
    pub const COVER: u64 = 0x03;
    /// Channel noise of identification trials. Type-I and type-II runs share
    /// this family, so trial `t` under one seed sees the same noise in both.
    pub const TRIALS: u64 = 0x10;
    pub const PAIRS: u64 = 0x12;
    /// Per-estimate sub-seeds of a simulation or sweep.
    pub const ESTIMATES: u64 = 0x20;
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| 0).scan(stream(7, 1, 3), |r, _| Some(r.random())).collect();
        let b: Vec<u64> = (0..4).map(|_| 0).scan(stream(7, 1, 3), |r, _| Some(r.random())).collect();
        assert_eq!(a, b);
        assert_ne!(derive_seed(7, 1, 3), derive_seed(7, 1, 4));
        assert_ne!(derive_seed(7, 1, 3), derive_seed(7, 2, 3));
        assert_ne!(derive_seed(7, 1, 3), derive_seed(8, 1, 3));
    }

    #[test]
    fn splitmix_reference_value() {
        // First output of the reference SplitMix64 generator seeded with 0.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
    }
}
