//! Poisson fading channel, receiver CSI, no transmitter CSI.

use std::f64::consts::LN_2;

use serde::Serialize;

use super::optimize::golden_section_max;
use super::{zeta, BoundName, BoundValue};
use crate::error::{invalid, Result};

/// Discrete fading law with peak scale `α` and duty ratio `σ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FadingGain {
    atoms: Vec<(f64, f64)>,
    alpha: f64,
    sigma: f64,
}

impl FadingGain {
    pub fn new(atoms: Vec<(f64, f64)>, alpha: f64, sigma: f64) -> Result<Self> {
        if atoms.is_empty() {
            return Err(invalid("atoms", 0.0, "at least one fading atom is required"));
        }
        for &(s, p) in &atoms {
            if !(s > 0.0 && s.is_finite()) {
                return Err(invalid("s", s, "fading gains must be positive and finite"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid("prob", p, "must be a probability"));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(invalid("prob", total, "atom probabilities must sum to 1"));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(invalid("alpha", alpha, "must be positive"));
        }
        if !(0.0..=1.0).contains(&sigma) {
            return Err(invalid("sigma", sigma, "must lie in [0, 1]"));
        }
        Ok(FadingGain { atoms, alpha, sigma })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `E[μ ζ(Sα, λ) − ζ(μSα, λ)]` in nats.
    pub fn objective(&self, mu: f64, lambda: f64) -> f64 {
        self.atoms
            .iter()
            .map(|&(s, p)| p * (mu * zeta(s * self.alpha, lambda) - zeta(mu * s * self.alpha, lambda)))
            .sum()
    }
}

const CONCAVITY_PROBES: usize = 32;

/// `max_{0 ≤ μ ≤ σ} E[μ ζ(Sα, λ) − ζ(μSα, λ)]`, nats converted to bits once.
///
/// Golden-section search, with endpoint checks. Concavity in `μ` is spot
/// checked at 32 midpoint pairs; the count of violations is reported in
/// `free_params["concavity_violations"]`.
pub fn fading_no_csi_capacity(gain: &FadingGain, lambda: f64) -> Result<BoundValue> {
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", lambda, "dark current must be non-negative"));
    }
    let sigma = gain.sigma;
    let h = |mu: f64| gain.objective(mu, lambda);
    let (mu, nats) = if sigma == 0.0 {
        (0.0, h(0.0))
    } else {
        let candidates = [golden_section_max(h, 0.0, sigma, 1e-12), (0.0, h(0.0)), (sigma, h(sigma))];
        candidates
            .into_iter()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("three candidates")
    };
    let violations = (0..CONCAVITY_PROBES)
        .filter(|&k| {
            let a = sigma * k as f64 / CONCAVITY_PROBES as f64;
            let b = sigma * (1.0 - (k as f64 + 0.5) / (2.0 * CONCAVITY_PROBES as f64));
            let mid = h(0.5 * (a + b));
            let chord = 0.5 * (h(a) + h(b));
            mid < chord - 1e-12 * (1.0 + chord.abs())
        })
        .count();
    let mut v = BoundValue::new(BoundName::FadingNoCsi, nats / LN_2)
        .param("lambda", lambda)
        .param("alpha", gain.alpha)
        .param("sigma", sigma)
        .free("mu", mu)
        .free("concavity_violations", violations as f64)
        .note("zeta in nats, converted to bits once");
    if violations > 0 {
        v = v.note("objective failed a midpoint-concavity spot check");
    }
    Ok(v)
}
