//! The Poisson law: pmf, exact sampling and fourth moments.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::special::ln_gamma;
use crate::error::{invalid, Result};

/// A strictly positive Poisson mean.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PoissonMean(f64);

impl PoissonMean {
    pub fn new(mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(invalid("mu", mu, "Poisson mean must be positive and finite"));
        }
        Ok(PoissonMean(mu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for PoissonMean {
    type Error = crate::Error;
    fn try_from(mu: f64) -> Result<Self> {
        PoissonMean::new(mu)
    }
}

impl From<PoissonMean> for f64 {
    fn from(m: PoissonMean) -> f64 {
        m.0
    }
}

/// `e^{−μ} μ^y / y!`, evaluated as `exp(y ln μ − μ − ln Γ(y+1))`.
pub fn poisson_pmf(y: u64, mu: PoissonMean) -> f64 {
    let mu = mu.get();
    let y = y as f64;
    (y * mu.ln() - mu - ln_gamma(y + 1.0)).exp()
}

/// Below this mean samples are drawn by sequential inversion.
const INVERSION_LIMIT: f64 = 30.0;

/// Draws one exact `Pois(μ)` variate.
///
/// Sequential-search inversion for `μ < 30`; Hörmann's transformed
/// rejection with squeeze (PTRS) above.
pub fn poisson_sample<R: Rng + ?Sized>(mu: PoissonMean, rng: &mut R) -> u64 {
    let mu = mu.get();
    if mu < INVERSION_LIMIT {
        sample_inversion(mu, rng)
    } else {
        sample_ptrs(mu, rng)
    }
}

#[inline]
pub(crate) fn sample_inversion<R: Rng + ?Sized>(mu: f64, rng: &mut R) -> u64 {
    let p0 = (-mu).exp();
    // Tail mass beyond this index is below 1e-30.
    let cutoff = (mu + 40.0 * mu.sqrt() + 60.0) as u64;
    loop {
        let u: f64 = rng.random();
        let mut k = 0u64;
        let mut p = p0;
        let mut cdf = p0;
        while u > cdf {
            k += 1;
            p *= mu / k as f64;
            cdf += p;
            if k > cutoff {
                break;
            }
        }
        // Only reachable when rounding kept the cdf below a u within 1e-16 of 1.
        if k <= cutoff {
            return k;
        }
    }
}

fn sample_ptrs<R: Rng + ?Sized>(mu: f64, rng: &mut R) -> u64 {
    let smu = mu.sqrt();
    let b = 0.931 + 2.53 * smu;
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let vr = 0.9277 - 3.6224 / (b - 2.0);
    let log_mu = mu.ln();
    loop {
        let u: f64 = rng.random::<f64>() - 0.5;
        let v: f64 = rng.random();
        let us = 0.5 - u.abs();
        let k = ((2.0 * a / us + b) * u + mu + 0.43).floor();
        if us >= 0.07 && v <= vr {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let lhs = v.ln() + inv_alpha.ln() - (a / (us * us) + b).ln();
        let rhs = -mu + k * log_mu - ln_gamma(k + 1.0);
        if lhs <= rhs {
            return k as u64;
        }
    }
}

/// `E[Z⁴] = λ⁴ + 6λ³ + 7λ² + λ` for `Z ~ Pois(λ)` (raw fourth moment).
pub fn poisson_raw_moment4(lambda: PoissonMean) -> f64 {
    let l = lambda.get();
    l * (1.0 + l * (7.0 + l * (6.0 + l)))
}

/// `E[(Z − λ)⁴] = 3λ² + λ` for `Z ~ Pois(λ)` (central fourth moment).
pub fn poisson_central_moment4(lambda: PoissonMean) -> f64 {
    let l = lambda.get();
    l * (3.0 * l + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;
    use approx::assert_relative_eq;

    fn mean(mu: f64) -> PoissonMean {
        PoissonMean::new(mu).unwrap()
    }

    /// Truncation point with tail mass below 1e-30.
    fn truncation(mu: f64) -> u64 {
        (mu + 40.0 * mu.sqrt() + 60.0).ceil() as u64
    }

    /// Σ_k g(k)·pmf(k) with the pmf built by the recurrence p_k = p_{k−1}·μ/k.
    fn series_expectation(mu: f64, g: impl Fn(f64) -> f64) -> f64 {
        let mut p = (-mu).exp();
        let mut sum = g(0.0) * p;
        for k in 1..=truncation(mu) {
            p *= mu / k as f64;
            sum += g(k as f64) * p;
        }
        sum
    }

    #[test]
    fn pmf_examples() {
        assert_relative_eq!(poisson_pmf(0, mean(3.3)), (-3.3f64).exp(), max_relative = 1e-15);
        assert_relative_eq!(poisson_pmf(2, mean(1.0)), (-1.0f64).exp() / 2.0, max_relative = 1e-14);
        assert_relative_eq!(poisson_pmf(2, mean(1.0)), 0.183_939_720_585_721_2, max_relative = 1e-14);
    }

    #[test]
    fn pmf_normalises() {
        for &mu in &[0.1f64, 1.0, 2.5, 17.0, 250.0] {
            let upper = (mu + 40.0 * mu.sqrt()).ceil() as u64;
            let total: f64 = (0..=upper).map(|y| poisson_pmf(y, mean(mu))).sum();
            assert!((total - 1.0).abs() < 1e-12, "mu = {mu}: {total}");
        }
    }

    #[test]
    fn moments_match_series_oracle() {
        for &l in &[0.1, 0.5, 1.0, 2.0, 5.0] {
            let raw = series_expectation(l, |k| k.powi(4));
            let central = series_expectation(l, |k| (k - l).powi(4));
            assert_relative_eq!(poisson_raw_moment4(mean(l)), raw, max_relative = 1e-9);
            assert_relative_eq!(poisson_central_moment4(mean(l)), central, max_relative = 1e-9);
        }
        assert_eq!(poisson_raw_moment4(mean(1.0)), 15.0);
        assert_eq!(poisson_raw_moment4(mean(2.0)), 94.0);
        assert_eq!(poisson_central_moment4(mean(1.0)), 4.0);
        assert_eq!(poisson_central_moment4(mean(0.5)), 1.25);
        let tiny = 1e-9;
        assert_relative_eq!(poisson_raw_moment4(mean(tiny)), tiny, max_relative = 1e-8);
    }

    fn sample_stats(mu: f64, draws: usize, seed: u64) -> (f64, f64) {
        let mut rng = stream(seed, 0, 0);
        let xs: Vec<f64> = (0..draws)
            .map(|_| poisson_sample(mean(mu), &mut rng) as f64)
            .collect();
        crate::stats::mean_and_sd(&xs)
    }

    #[test]
    fn inversion_moments() {
        let draws = 1_000_000;
        let (m, sd) = sample_stats(4.0, draws, 11);
        assert!((m - 4.0).abs() <= 3.0 * (4.0 / draws as f64).sqrt(), "mean {m}");
        // Var(s²) ≈ (μ₄ − σ⁴)/N with μ₄ = 3μ² + μ.
        let var_tol = 4.0 * ((3.0 * 16.0 + 4.0 - 16.0) / draws as f64).sqrt();
        assert!((sd * sd - 4.0).abs() <= var_tol, "var {}", sd * sd);
    }

    #[test]
    fn rejection_moments() {
        for &mu in &[30.0, 75.5, 1e4] {
            let draws = 400_000;
            let (m, sd) = sample_stats(mu, draws, 5);
            assert!((m - mu).abs() <= 4.0 * (mu / draws as f64).sqrt(), "mu {mu}: mean {m}");
            let var_tol = 5.0 * ((2.0 * mu * mu + mu) / draws as f64).sqrt();
            assert!((sd * sd - mu).abs() <= var_tol, "mu {mu}: var {}", sd * sd);
        }
    }

    #[test]
    fn rejection_sampler_matches_pmf() {
        // Chi-square goodness of fit on the central 99.99% of Pois(40).
        let mu = 40.0;
        let draws = 200_000u64;
        let mut rng = stream(99, 0, 0);
        let mut counts = vec![0u64; 120];
        for _ in 0..draws {
            let k = poisson_sample(mean(mu), &mut rng) as usize;
            counts[k.min(119)] += 1;
        }
        let mut chi2 = 0.0;
        let mut bins = 0;
        for (k, &c) in counts.iter().enumerate().take(70).skip(18) {
            let e = draws as f64 * poisson_pmf(k as u64, mean(mu));
            chi2 += (c as f64 - e).powi(2) / e;
            bins += 1;
        }
        // 52 bins: the 99.9% quantile of chi2(51) is about 90.
        assert!(chi2 < 90.0, "chi2 = {chi2} over {bins} bins");
    }

    #[test]
    fn sampling_is_deterministic() {
        let run = |seed| {
            let mut rng = stream(seed, 3, 9);
            (0..64).map(|_| poisson_sample(mean(2.2), &mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(run(42), run(42));
        assert_ne!(run(42), run(43));
    }

    #[test]
    fn rejects_non_positive_mean() {
        assert!(PoissonMean::new(0.0).is_err());
        assert!(PoissonMean::new(-1.0).is_err());
        assert!(PoissonMean::new(f64::NAN).is_err());
    }
}
