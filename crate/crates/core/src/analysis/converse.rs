use serde::Serialize;

use crate::codebook::Codebook;
use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::math::{log2_sphere_volume, Dimension};

/// Letter-ratio margin `ε′_n = P_max / n^{1+b}` of the converse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConverseParams {
    pub n: Dimension,
    pub b: f64,
    pub p_max: f64,
    pub eps_prime: f64,
}

impl ConverseParams {
    pub fn new(n: Dimension, b: f64, p_max: f64) -> Result<Self> {
        if !(b > 0.0 && b < 1.0) {
            return Err(invalid("b", b, "slack exponent must lie in (0, 1)"));
        }
        if !(p_max > 0.0 && p_max.is_finite()) {
            return Err(invalid("p_max", p_max, "peak power must be positive"));
        }
        Ok(ConverseParams {
            n,
            b,
            p_max,
            eps_prime: p_max / n.as_f64().powf(1.0 + b),
        })
    }
}

/// Ordered pairs `(i₁, i₂)` whose shifted words `v = λ + u` stay within the
/// ratio margin in every letter, `max_t |1 − v_{i₂,t}/v_{i₁,t}| < ε′_n`.
///
/// An empty result means every pair has at least one letter with ratio gap
/// `≥ ε′_n`, which every good code must have.
pub fn converse_ratio_check(codebook: &Codebook, lambda: f64, cp: &ConverseParams) -> Vec<(usize, usize)> {
    converse_ratio_check_with(codebook, lambda, cp, Exec::default())
}

pub fn converse_ratio_check_with(
    codebook: &Codebook,
    lambda: f64,
    cp: &ConverseParams,
    exec: Exec,
) -> Vec<(usize, usize)> {
    let words = codebook.words();
    let l = words.len();
    let eps = cp.eps_prime;
    exec.map(l as u64, |i1| {
        let i1 = i1 as usize;
        let v1 = words[i1].as_slice();
        (0..l)
            .filter(|&i2| i2 != i1)
            .filter(|&i2| {
                words[i2]
                    .as_slice()
                    .iter()
                    .zip(v1)
                    .all(|(u2, u1)| (1.0 - (lambda + u2) / (lambda + u1)).abs() < eps)
            })
            .map(|i2| (i1, i2))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// `log2` of the converse count `P_maxⁿ / Vol(S(n, λ ε′_n))`.
pub fn converse_count_upper(cp: &ConverseParams, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", lambda, "dark current must be positive and finite"));
    }
    Ok(cp.n.as_f64() * cp.p_max.log2() - log2_sphere_volume(cp.n, lambda * cp.eps_prime))
}

/// Result of checking `f(x) = e^{−cx}(1−x)^c ≥ 1 − 3cx` on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TaylorCheck {
    /// `min_x [f(x) − (1 − 3cx)]` over the grid.
    pub min_margin: f64,
    pub argmin: f64,
    /// Smallest grid point with a negative margin, if any.
    pub first_failure: Option<f64>,
}

impl TaylorCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn taylor_f(c: f64, x: f64) -> f64 {
    (-c * x).exp() * (1.0 - x).powf(c)
}

pub fn f_taylor_bound_check(c: f64, x_grid: &[f64]) -> Result<TaylorCheck> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(invalid("c", c, "must be positive"));
    }
    if let Some(&x) = x_grid.iter().find(|&&x| !(0.0..=1.0).contains(&x)) {
        return Err(invalid("x", x, "grid points must lie in [0, 1]"));
    }
    if x_grid.is_empty() {
        return Err(invalid("x_grid", 0.0, "grid must be non-empty"));
    }
    let mut check = TaylorCheck {
        min_margin: f64::INFINITY,
        argmin: f64::NAN,
        first_failure: None,
    };
    for &x in x_grid {
        let margin = taylor_f(c, x) - (1.0 - 3.0 * c * x);
        if margin < check.min_margin {
            check.min_margin = margin;
            check.argmin = x;
        }
        if margin < 0.0 && check.first_failure.is_none_or(|f| x < f) {
            check.first_failure = Some(x);
        }
    }
    Ok(check)
}
