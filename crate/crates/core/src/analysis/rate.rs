use serde::Serialize;

use super::converse::{converse_count_upper, ConverseParams};
use crate::codebook::{count_lower_bound, PackingParams};
use crate::error::{invalid, Result};
use crate::math::Dimension;

/// Code size on the super-exponential scale `L = 2^{(n log₂ n) R}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateReport {
    pub n: Dimension,
    pub log2_count: f64,
    /// `log2_count / (n log₂ n)`.
    pub rate: f64,
}

impl RateReport {
    fn new(n: Dimension, log2_count: f64) -> Result<Self> {
        if n.get() < 2 {
            return Err(invalid("n", n.as_f64(), "rate needs n ≥ 2"));
        }
        let nf = n.as_f64();
        Ok(RateReport {
            n,
            log2_count,
            rate: log2_count / (nf * nf.log2()),
        })
    }
}

/// Normalised packing count bound with the radius `n^{(1+b)/4} √A`.
pub fn achievable_rate_curve(n_list: &[Dimension], b: f64, a: f64) -> Result<Vec<RateReport>> {
    n_list
        .iter()
        .map(|&n| {
            let p = PackingParams::derive(n, b, a, a)?;
            RateReport::new(n, count_lower_bound(&p))
        })
        .collect()
}

/// Normalised converse count `P_maxⁿ / Vol(S(n, λ ε′_n))`.
pub fn converse_rate_curve(n_list: &[Dimension], b: f64, lambda: f64, p_max: f64) -> Result<Vec<RateReport>> {
    n_list
        .iter()
        .map(|&n| {
            let cp = ConverseParams::new(n, b, p_max)?;
            RateReport::new(n, converse_count_upper(&cp, lambda)?)
        })
        .collect()
}
