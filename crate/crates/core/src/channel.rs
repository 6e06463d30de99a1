//! The memoryless discrete-time Poisson channel `Y_t ~ Pois(λ + x_t)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::math::{ln_gamma, poisson_sample, PoissonMean};

/// Channel parameters: the dark current `λ > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    lambda: f64,
}

impl ChannelParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(invalid("lambda", lambda, "dark current must be positive and finite"));
        }
        Ok(ChannelParams { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Output intensity `λ + x` of a single slot.
    pub fn intensity(&self, x: f64) -> PoissonMean {
        PoissonMean::new(self.lambda + x).expect("λ > 0 and x > 0")
    }
}

/// An input word of strictly positive intensities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Codeword(Vec<f64>);

impl Codeword {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = x.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
            return Err(invalid("x_t", bad, "codeword letters must be positive and finite"));
        }
        Ok(Codeword(x))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

/// Observed counts, one per slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OutputWord(pub Vec<u64>);

impl OutputWord {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sends `x` through the channel; each `y_t` is an independent `Pois(λ + x_t)` draw.
pub fn transmit<R: Rng + ?Sized>(x: &Codeword, params: &ChannelParams, rng: &mut R) -> OutputWord {
    let mut y = Vec::with_capacity(x.len());
    transmit_into(x.as_slice(), params.lambda, rng, &mut y);
    OutputWord(y)
}

/// Allocation-free form of [`transmit`] used by the Monte-Carlo loops.
pub(crate) fn transmit_into<R: Rng + ?Sized>(x: &[f64], lambda: f64, rng: &mut R, out: &mut Vec<u64>) {
    out.clear();
    out.extend(
        x.iter()
            .map(|&xt| poisson_sample(PoissonMean::new(lambda + xt).expect("positive intensity"), rng)),
    );
}

/// Natural-log likelihood `ln Wⁿ(y | x) = Σ_t [y_t ln(λ+x_t) − (λ+x_t) − ln Γ(y_t+1)]`.
pub fn sequence_log_likelihood(y: &OutputWord, x: &Codeword, params: &ChannelParams) -> Result<f64> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    Ok(y.as_slice()
        .iter()
        .zip(x.as_slice())
        .map(|(&yt, &xt)| {
            let mu = params.lambda + xt;
            let yt = yt as f64;
            yt * mu.ln() - mu - ln_gamma(yt + 1.0)
        })
        .sum())
}
