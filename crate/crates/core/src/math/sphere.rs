//! Volumes of n-dimensional Euclidean balls.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::special::log2_gamma;
use crate::error::{invalid, Result};

/// Block length / ambient dimension, `n ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Dimension(u64);

impl Dimension {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n", 0.0, "dimension must be at least 1"));
        }
        Ok(Dimension(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u64> for Dimension {
    type Error = crate::Error;
    fn try_from(n: u64) -> Result<Self> {
        Dimension::new(n)
    }
}

impl From<Dimension> for u64 {
    fn from(d: Dimension) -> u64 {
        d.0
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `log2 Vol(S(n, r)) = (n/2)·log2 π + n·log2 r − log2 Γ(n/2 + 1)`.
pub fn log2_sphere_volume(n: Dimension, r: f64) -> f64 {
    debug_assert!(r > 0.0);
    let n = n.as_f64();
    0.5 * n * PI.log2() + n * r.log2() - log2_gamma(0.5 * n + 1.0)
}

/// `Vol(S(n, r)) = π^{n/2} rⁿ / Γ(n/2 + 1)`.
///
/// Computed from [`log2_sphere_volume`]; underflows to 0 or overflows to
/// `+∞` where the linear value is not representable.
pub fn sphere_volume(n: Dimension, r: f64) -> f64 {
    debug_assert!(r >= 0.0);
    if r == 0.0 {
        return 0.0;
    }
    log2_sphere_volume(n, r).exp2()
}
