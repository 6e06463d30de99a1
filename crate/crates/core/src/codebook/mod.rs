//! Sphere-packing DI codebooks.
//!
//! Codewords are centres of radius-`r0` spheres whose centres lie in the
//! cube `(0, A]ⁿ`, `A = min(P_ave, P_max)`. Spheres may protrude from the
//! cube; only centres are constrained. Non-overlap is encoded as centre
//! distance `≥ 2·r0` (touching allowed).

mod build;
mod density;
mod json;
mod params;
mod validate;

use serde::{Deserialize, Serialize};

use crate::channel::Codeword;
use crate::error::{Error, Result};
use crate::math::log2_sphere_volume;

pub use build::{
    construct_balanced_block_lattice, construct_block_lattice, construct_lattice, construct_saturated_random, saturated_random,
    RandomPacking, DEFAULT_L_CAP, DEFAULT_REJECTION_BUDGET,
};
pub use density::{
    doubled_radius_cover_failures, packing_density_estimate, packing_density_estimate_with,
};
pub use json::{format_f64, SCHEMA_VERSION};
pub use params::PackingParams;
pub use validate::{validate, validate_with, ValidationReport, WordCheck, VALIDATION_SLACK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    SaturatedRandom,
    Lattice,
    BlockLattice,
    BalancedBlockLattice,
    Manual,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    params: PackingParams,
    words: Vec<Codeword>,
    construction: Construction,
    seed: u64,
}

impl Codebook {
    /// Assembles a codebook, checking that every word has length `n`.
    pub fn new(
        params: PackingParams,
        words: Vec<Codeword>,
        construction: Construction,
        seed: u64,
    ) -> Result<Self> {
        let n = params.n.as_usize();
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: w.len(),
            });
        }
        Ok(Codebook {
            params,
            words,
            construction,
            seed,
        })
    }

    pub fn params(&self) -> &PackingParams {
        &self.params
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn word(&self, i: usize) -> Result<&Codeword> {
        self.words.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.words.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Squared Euclidean distance.
#[inline]
pub fn distance_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `log2` of the saturated-packing count bound `2^{−n} Aⁿ / Vol(S(n, r0))`.
///
/// Negative values mean the bound is vacuous (at least one word).
pub fn count_lower_bound(params: &PackingParams) -> f64 {
    let n = params.n.as_f64();
    -n + n * params.a.log2() - log2_sphere_volume(params.n, params.r0)
}

/// `max(1, ⌊2^{bound}⌋)`, saturating at `u64::MAX`.
pub fn min_saturated_count(params: &PackingParams) -> u64 {
    let bound = count_lower_bound(params);
    if bound >= 63.0 {
        u64::MAX
    } else {
        (bound.exp2().floor() as u64).max(1)
    }
}

#[cfg(test)]
pub(crate) fn dim(n: u64) -> crate::math::Dimension {
    crate::math::Dimension::new(n).expect("nonzero dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(n: u64, r0: f64) -> PackingParams {
        PackingParams::derive(dim(n), 0.5, 1.0, 1.0).unwrap().with_radius(r0).unwrap()
    }

    #[test]
    fn count_bound_example() {
        // log2(0.25 / (π · 0.01))
        let expected = (0.25 / (std::f64::consts::PI * 0.01)).log2();
        assert_relative_eq!(count_lower_bound(&params(2, 0.1)), expected, max_relative = 1e-13);
        assert_relative_eq!(expected, 2.992_4, epsilon = 1e-4);
        assert_eq!(min_saturated_count(&params(2, 0.1)), 7);
    }

    #[test]
    fn doubling_radius_costs_n_bits() {
        for n in 1..=12 {
            let a = count_lower_bound(&params(n, 0.07));
            let b = count_lower_bound(&params(n, 0.14));
            assert_relative_eq!(a - b, n as f64, max_relative = 1e-12);
        }
    }

    #[test]
    fn vacuous_bound_floors_at_one() {
        let p = PackingParams::derive(dim(2), 0.5, 1.0, 1.0).unwrap();
        assert!(count_lower_bound(&p) < 0.0);
        assert_eq!(min_saturated_count(&p), 1);
    }

    #[test]
    fn codebook_rejects_wrong_length() {
        let p = params(3, 0.1);
        let w = Codeword::new(vec![0.5, 0.5]).unwrap();
        assert!(Codebook::new(p, vec![w], Construction::Manual, 0).is_err());
    }
}
