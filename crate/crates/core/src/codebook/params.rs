use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::math::Dimension;

/// Packing parameters of the achievability construction.
///
/// Derived from `(n, b, P_max, P_ave)`:
///
/// ```text
/// A      = min(P_ave, P_max)
/// ε_n    = A / n^{(1−b)/2}
/// r0     = √(n ε_n) = n^{(1+b)/4} √A
/// δ_n    = ε_n / 3
/// ```
///
/// [`PackingParams::with_radius`] replaces `r0` for small-`n` experiments
/// while keeping `r0 = √(n ε_n)` and `δ_n = ε_n / 3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PackingParams {
    pub n: Dimension,
    pub b: f64,
    pub p_max: f64,
    pub p_ave: f64,
    pub a: f64,
    pub eps_n: f64,
    pub r0: f64,
    pub delta_n: f64,
}

impl PackingParams {
    pub fn derive(n: Dimension, b: f64, p_max: f64, p_ave: f64) -> Result<Self> {
        if !(b > 0.0 && b < 1.0) {
            return Err(invalid("b", b, "slack exponent must lie in (0, 1)"));
        }
        if !(p_max > 0.0 && p_max.is_finite()) {
            return Err(invalid("p_max", p_max, "peak power must be positive"));
        }
        if !(p_ave > 0.0 && p_ave.is_finite()) {
            return Err(invalid("p_ave", p_ave, "average power must be positive"));
        }
        let a = p_ave.min(p_max);
        let nf = n.as_f64();
        let eps_n = a / nf.powf(0.5 * (1.0 - b));
        let r0 = (nf * eps_n).sqrt();
        Ok(PackingParams {
            n,
            b,
            p_max,
            p_ave,
            a,
            eps_n,
            r0,
            delta_n: eps_n / 3.0,
        })
    }

    /// Same cube, different sphere radius.
    pub fn with_radius(self, r0: f64) -> Result<Self> {
        if !(r0 > 0.0 && r0.is_finite()) {
            return Err(invalid("r0", r0, "radius must be positive and finite"));
        }
        let eps_n = r0 * r0 / self.n.as_f64();
        Ok(PackingParams {
            r0,
            eps_n,
            delta_n: eps_n / 3.0,
            ..self
        })
    }

    /// Diameter `A √n` of the constraint cube.
    pub fn cube_diameter(&self) -> f64 {
        self.a * self.n.as_f64().sqrt()
    }
}
