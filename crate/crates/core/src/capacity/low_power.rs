//! Low-power (`P_ave → 0`) upper bounds.

use std::f64::consts::LN_2;

use super::optimize::{golden_section_max, log_space};
use super::{BoundName, BoundValue};
use crate::error::{invalid, Result};
use crate::math::upper_incomplete_gamma;

/// Lapidoth–Moser low-power upper bound for zero dark current,
///
/// ```text
/// −P ln p − ln(1−p) + P/β + P·max(0, ½ ln β + ln(Γ̄(½, 1/β)/√π + 1/(2β)))
/// ```
///
/// evaluated in nats and divided by `ln 2` once. The `max(0, ·)` clamp is
/// unaffected by the base.
pub fn lapidoth_low_power_ub(p_ave: f64, p: f64, beta: f64) -> Result<BoundValue> {
    if !(p_ave > 0.0 && p_ave.is_finite()) {
        return Err(invalid("p_ave", p_ave, "must be positive"));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(invalid("p", p, "must lie in (0, 1)"));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(invalid("beta", beta, "must be positive"));
    }
    let gamma_term = upper_incomplete_gamma(0.5, 1.0 / beta) / std::f64::consts::PI.sqrt() + 0.5 / beta;
    let inner = 0.5 * beta.ln() + gamma_term.ln();
    let nats = -p_ave * p.ln() - (-p).ln_1p() + p_ave / beta + p_ave * inner.max(0.0);
    Ok(BoundValue::new(BoundName::LapidothLowUb, nats / LN_2)
        .param("p_ave", p_ave)
        .free("p", p)
        .free("beta", beta)
        .free("max_term_nats", inner)
        .note("evaluated in nats (including P/beta), converted to bits once"))
}

/// The default `(p, β)` grid: `p = k/21` for `k = 1..20` and 20 values of
/// `β` log-spaced over `[10⁻², 10²]`.
pub fn lapidoth_grid() -> Vec<(f64, f64)> {
    let betas = log_space(1e-2, 1e2, 20);
    (1..=20)
        .flat_map(|k| {
            let p = k as f64 / 21.0;
            betas.iter().map(move |&b| (p, b))
        })
        .collect()
}

/// Smallest [`lapidoth_low_power_ub`] over [`lapidoth_grid`].
pub fn lapidoth_grid_min(p_ave: f64) -> Result<BoundValue> {
    let mut best: Option<BoundValue> = None;
    for (p, beta) in lapidoth_grid() {
        let v = lapidoth_low_power_ub(p_ave, p, beta)?;
        if best.as_ref().is_none_or(|b| v.value < b.value) {
            best = Some(v);
        }
    }
    Ok(best.expect("grid is non-empty").note("minimum over the 20×20 (p, beta) grid"))
}

/// `φ_μ(x) = ((1 − e^{−x})/x) · ln(−x / (P ln P))`, nats, for `0 < P < 1`.
///
/// Tends to `−∞` as `x → 0⁺` and to `0` as `x → ∞`.
pub fn wang_phi(p_ave: f64, x: f64) -> f64 {
    let g = if x == 0.0 { 1.0 } else { -(-x).exp_m1() / x };
    g * (-x / (p_ave * p_ave.ln())).ln()
}

/// `(argmax, max)` of [`wang_phi`] over `x > 0`: a 2001-point log grid on
/// `[10⁻⁸, 10⁸]` followed by golden-section refinement to `10⁻⁸`.
pub fn wang_phi_sup(p_ave: f64) -> Result<(f64, f64)> {
    if !(p_ave > 0.0 && p_ave < 1.0) {
        return Err(invalid("p_ave", p_ave, "φ_μ needs 0 < P_ave < 1"));
    }
    let grid = log_space(1e-8, 1e8, 2001);
    let k = (0..grid.len())
        .max_by(|&a, &b| wang_phi(p_ave, grid[a]).total_cmp(&wang_phi(p_ave, grid[b])))
        .expect("non-empty grid");
    let lo = grid[k.saturating_sub(1)];
    let hi = grid[(k + 1).min(grid.len() - 1)];
    Ok(golden_section_max(|x| wang_phi(p_ave, x), lo, hi, 1e-8))
}

/// Refined low-power upper bound,
///
/// ```text
/// P − P·L − ln(1 − P) − P ln(1 − 1/ln P) + P · sup_{x ≥ 0} φ_μ(x),   L = ln(−ln P),
/// ```
///
/// in nats, converted to bits once. The iterated logarithm of `P < 1` is
/// read as `ln(−ln P) = ln ln(1/P)`.
pub fn wang_refined_ub(p_ave: f64) -> Result<BoundValue> {
    if !(p_ave > 0.0 && p_ave < 1.0) {
        return Err(invalid("p_ave", p_ave, "bound is defined for 0 < P_ave < 1"));
    }
    let p = p_ave;
    let ln_p = p.ln();
    let (x_star, sup) = wang_phi_sup(p)?;
    let nats = p - p * (-ln_p).ln() - (-p).ln_1p() - p * (-1.0 / ln_p).ln_1p() + p * sup;
    Ok(BoundValue::new(BoundName::WangUb, nats / LN_2)
        .param("p_ave", p)
        .free("x_star", x_star)
        .free("sup_phi_nats", sup)
        .note("log log P read as ln(-ln P); evaluated in nats, converted to bits once"))
}
