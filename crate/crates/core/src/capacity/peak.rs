use super::{BoundName, BoundValue};
use crate::error::{invalid, Result};

/// Aminian et al. upper bound under average and peak constraints, base 2:
///
/// ```text
/// (P_ave/P_max)(P_max − P_ave)·log₂(P_max/λ + 1)   if P_ave ≤ P_max/2
/// (P_max/4)·log₂(P_max/λ + 1)                       otherwise
/// ```
pub fn aminian_peak_ub(lambda: f64, p_ave: f64, p_max: f64) -> Result<BoundValue> {
    for (name, v) in [("lambda", lambda), ("p_ave", p_ave), ("p_max", p_max)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(invalid(name, v, "must be positive"));
        }
    }
    let log_term = (p_max / lambda).ln_1p() / std::f64::consts::LN_2;
    let value = if p_ave <= 0.5 * p_max {
        p_ave / p_max * (p_max - p_ave) * log_term
    } else {
        0.25 * p_max * log_term
    };
    Ok(BoundValue::new(BoundName::AminianPeakUb, value)
        .param("lambda", lambda)
        .param("p_ave", p_ave)
        .param("p_max", p_max))
}
