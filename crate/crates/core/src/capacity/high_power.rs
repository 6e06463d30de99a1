//! High-power bounds and the `α`-regime expression.

use std::f64::consts::{E, LN_2, PI};

use serde::Serialize;

use super::optimize::{bisect, log_space, sign_scan};
use super::{BoundName, BoundValue};
use crate::error::{invalid, Error, Result};
use crate::math::erf;

/// Boundary between the two `α` branches.
pub const ALPHA_SPLIT: f64 = 1.0 / 3.0;

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, v, "must be positive"))
    }
}

/// Martinez upper bound with an average constraint only,
///
/// ```text
/// (P + ½) ln(P + ½) − P ln P − ½ + ln(1 + (√(2e) − 1)/√(1 + 2P))
/// ```
///
/// in nats (the `−½` is a nat quantity), converted to bits once.
pub fn martinez_ub(p_ave: f64) -> Result<BoundValue> {
    positive("p_ave", p_ave)?;
    let p = p_ave;
    let nats = (p + 0.5) * (p + 0.5).ln() - p * p.ln() - 0.5
        + ((2.0 * E).sqrt() - 1.0) .mul_add((1.0 + 2.0 * p).sqrt().recip(), 1.0).ln();
    Ok(BoundValue::new(BoundName::MartinezUb, nats / LN_2)
        .param("p_ave", p)
        .note("evaluated in nats, converted to bits once"))
}

/// Brady–Verdú bounds for `P, λ → ∞` at fixed `SNR = P/λ`, base 2:
///
/// ```text
/// lower = ½log₂(P/2π) − ½log₂(1 + 1/SNR) − ε
/// upper = ½log₂(P/2π) + log₂(√SNR (1 + 1/P_ε) + 1/√SNR) + 1 + log₂(3/2) + ε
/// ```
pub fn brady_bounds(p_ave: f64, snr: f64, eps: f64, p_eps: f64) -> Result<(BoundValue, BoundValue)> {
    positive("p_ave", p_ave)?;
    positive("snr", snr)?;
    positive("eps", eps)?;
    positive("p_eps", p_eps)?;
    let common = 0.5 * (p_ave / (2.0 * PI)).log2();
    let lower = common - 0.5 * (1.0 / snr).ln_1p() / LN_2 - eps;
    let root = snr.sqrt();
    let upper = common + (root * (1.0 + 1.0 / p_eps) + 1.0 / root).log2() + 1.0 + 1.5f64.log2() + eps;
    let tag = |v: BoundValue| {
        v.param("p_ave", p_ave)
            .param("snr", snr)
            .param("eps", eps)
            .param("p_eps", p_eps)
            .note("base-2 logarithms throughout")
    };
    Ok((
        tag(BoundValue::new(BoundName::BradyLb, lower)),
        tag(BoundValue::new(BoundName::BradyUb, upper)),
    ))
}

/// `g(u) = √π erf(√u)(½ − αu) − √u e^{−u}`.
pub fn u_equation(alpha: f64, u: f64) -> f64 {
    let s = u.sqrt();
    PI.sqrt() * erf(s) * (0.5 - alpha * u) - s * (-u).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct URoot {
    pub u: f64,
    pub residual: f64,
    /// Sign-change bracket found by the scan.
    pub bracket: (f64, f64),
}

/// Non-zero root of [`u_equation`] in `(0, 1/(2α))`.
///
/// A 10³-point log-spaced scan over `(10⁻⁹, 1/(2α) − 10⁻⁹)` locates the
/// first sign change; bisection then drives `|g(u)|` below `10⁻¹²`.
pub fn solve_u_root(alpha: f64) -> Result<URoot> {
    positive("alpha", alpha)?;
    let hi = 0.5 / alpha - 1e-9;
    if hi <= 1e-9 {
        return Err(Error::NoRoot(format!("empty search range for alpha = {alpha}")));
    }
    let grid = log_space(1e-9, hi, 1000);
    let g = |u: f64| u_equation(alpha, u);
    let bracket = sign_scan(g, &grid)
        .ok_or_else(|| Error::NoRoot(format!("no sign change of the u-equation for alpha = {alpha}")))?;
    let u = bisect(g, bracket.0, bracket.1, 1e-12)?;
    Ok(URoot {
        u,
        residual: g(u).abs(),
        bracket,
    })
}

/// Capacity expression in terms of `α = P_ave/P_max`, `O(1)` dropped:
///
/// ```text
/// α < ⅓:  ½ ln P_max + (α − 1)u − ln(½ − αu) − ½ ln(2πe)
/// α ≥ ⅓:  ½ ln P_max − ½ ln(πe/2)
/// ```
///
/// evaluated in nats (the `(α − 1)u` term included) and converted once.
pub fn alpha_regime_capacity(p_max: f64, alpha: f64) -> Result<BoundValue> {
    positive("p_max", p_max)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 1]"));
    }
    let half_ln_p = 0.5 * p_max.ln();
    let v = if alpha < ALPHA_SPLIT {
        let root = solve_u_root(alpha)?;
        let u = root.u;
        let nats = half_ln_p + (alpha - 1.0) * u - (0.5 - alpha * u).ln() - 0.5 * (2.0 * PI * E).ln();
        BoundValue::new(BoundName::AlphaRegime, nats / LN_2)
            .free("u", u)
            .free("u_residual", root.residual)
            .free("u_term_in_nats", 1.0)
    } else {
        let nats = half_ln_p - 0.5 * (0.5 * PI * E).ln();
        BoundValue::new(BoundName::AlphaRegime, nats / LN_2)
    };
    let mut v = v
        .param("p_max", p_max)
        .param("alpha", alpha)
        .note("O(1) term dropped; evaluated in nats, converted to bits once");
    v.asymptotic = true;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn martinez_at_unit_power() {
        let v = martinez_ub(1.0).unwrap().value;
        let nats = 1.5 * 1.5f64.ln() - 0.5 + (1.0 + ((2.0 * E).sqrt() - 1.0) / 3f64.sqrt()).ln();
        assert!((v - nats / LN_2).abs() < 1e-14);
        assert!((v - 0.9785).abs() < 1e-3 && v > 0.0);
    }

    #[test]
    fn martinez_high_power_ratio() {
        let p = 1e8;
        let ratio = martinez_ub(p).unwrap().value / (0.5 * (1.0 + p).log2());
        assert!((0.99..=1.01).contains(&ratio), "{ratio}");
    }

    #[test]
    fn martinez_finite_near_zero() {
        let mut prev = f64::INFINITY;
        for k in 1..12 {
            let v = martinez_ub(10f64.powi(-k)).unwrap().value;
            assert!(v.is_finite() && v > 0.0 && v < prev);
            prev = v;
        }
        assert!(martinez_ub(0.0).is_err());
    }

    #[test]
    fn brady_example_and_ordering() {
        let (lo, _) = brady_bounds(2.0 * PI, 1.0, 0.1, 1.0).unwrap();
        assert!((lo.value + 0.6).abs() < 1e-14);
        for &p in &[0.1, 10.0, 1e4] {
            for &snr in &[1e-3, 1.0, 1e3] {
                for &pe in &[1e-2, 1.0, 1e2] {
                    let (lo, hi) = brady_bounds(p, snr, 0.05, pe).unwrap();
                    assert!(lo.value <= hi.value);
                }
            }
        }
    }

    #[test]
    fn brady_gap_growth() {
        // with P_ε → ∞, gap − ½log₂SNR → 1 + log₂(3/2) + 2ε as SNR → ∞
        let eps = 0.1;
        for &snr in &[1e6, 1e8, 1e10] {
            let (lo, hi) = brady_bounds(5.0, snr, eps, 1e15).unwrap();
            let gap = hi.value - lo.value - 0.5 * snr.log2();
            assert!((gap - (1.0 + 1.5f64.log2() + 2.0 * eps)).abs() < 1e-5, "{gap}");
        }
    }

    #[test]
    fn alpha_upper_branch_example() {
        let v = alpha_regime_capacity(100.0, 0.5).unwrap();
        assert!((v.value - (0.5 * 100f64.log2() - 0.5 * (PI * E / 2.0).log2())).abs() < 1e-13);
        assert!((v.value - 2.275).abs() < 1e-3);
        assert!(v.asymptotic);
    }

    #[test]
    fn u_root_residuals() {
        for alpha in [0.05, 0.1, 0.2, 0.3] {
            let r = solve_u_root(alpha).unwrap();
            assert!(r.residual < 1e-10, "alpha = {alpha}: {}", r.residual);
            assert!(r.u > 0.0 && r.u < 0.5 / alpha);
            assert!(r.bracket.0 <= r.u && r.u <= r.bracket.1);
        }
    }

    #[test]
    fn no_root_above_split() {
        assert!(matches!(solve_u_root(0.5), Err(Error::NoRoot(_))));
    }

    #[test]
    fn branch_gap_is_reported_not_asserted() {
        let below = alpha_regime_capacity(1e4, ALPHA_SPLIT - 1e-6).unwrap();
        let above = alpha_regime_capacity(1e4, ALPHA_SPLIT + 1e-6).unwrap();
        assert!((below.value - above.value).is_finite());
        assert!(below.free_params.contains_key("u"));
        assert!(!above.free_params.contains_key("u"));
    }
}
