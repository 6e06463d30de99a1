//! DI encoder (codeword lookup) and the threshold distance decoder.
//!
//! For candidate message `j` the decoder computes
//!
//! ```text
//! T_j(y) = (1/n) Σ_t [ (y_t − (u_{j,t} + λ))² − (λ + u_{j,t}) ]
//! ```
//!
//! and accepts iff `|T_j(y)| ≤ δ_n`. Under the true message `T` has mean
//! zero. Decoding regions of different messages may overlap; no
//! disambiguation is attempted.

use rand::Rng;
use serde::Serialize;

use crate::channel::{transmit_into, ChannelParams, Codeword, OutputWord};
use crate::codebook::Codebook;
use crate::error::{invalid, Error, Result};

/// Decoder statistic for output `y` against codeword `u`.
pub fn statistic(y: &OutputWord, u: &Codeword, lambda: f64) -> Result<f64> {
    if y.len() != u.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            actual: y.len(),
        });
    }
    Ok(statistic_slice(y.as_slice(), u.as_slice(), lambda))
}

#[inline]
pub(crate) fn statistic_slice(y: &[u64], u: &[f64], lambda: f64) -> f64 {
    let sum: f64 = y
        .iter()
        .zip(u)
        .map(|(&yt, &ut)| {
            let mu = lambda + ut;
            let d = yt as f64 - mu;
            d * d - mu
        })
        .sum();
    sum / u.len() as f64
}

/// Decoder bound to a codebook and channel.
#[derive(Debug, Clone, Copy)]
pub struct DecoderConfig<'a> {
    codebook: &'a Codebook,
    channel: ChannelParams,
    delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub sent: usize,
    pub tested: usize,
    pub accepted: bool,
    pub statistic: f64,
}

impl<'a> DecoderConfig<'a> {
    /// Uses the codebook's own threshold `δ_n = ε_n / 3`.
    pub fn new(codebook: &'a Codebook, channel: ChannelParams) -> Self {
        DecoderConfig {
            codebook,
            channel,
            delta: codebook.params().delta_n,
        }
    }

    /// Diagnostic override of the threshold; `0` and `+∞` are allowed.
    pub fn with_threshold(self, delta: f64) -> Result<Self> {
        if delta.is_nan() || delta < 0.0 {
            return Err(invalid("delta", delta, "threshold must be non-negative"));
        }
        Ok(DecoderConfig { delta, ..self })
    }

    pub fn codebook(&self) -> &'a Codebook {
        self.codebook
    }

    pub fn lambda(&self) -> f64 {
        self.channel.lambda()
    }

    pub fn channel(&self) -> ChannelParams {
        self.channel
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Encoder: the codeword of message `i`.
    pub fn encode(&self, i: usize) -> Result<&'a Codeword> {
        self.codebook.word(i)
    }

    #[inline]
    pub(crate) fn accepts(&self, t: f64) -> bool {
        t.abs() <= self.delta
    }

    /// Is `y` in the decoding region of message `j`?
    pub fn identify(&self, y: &OutputWord, j: usize) -> Result<bool> {
        let t = statistic(y, self.codebook.word(j)?, self.lambda())?;
        Ok(self.accepts(t))
    }

    /// Sends message `i`, tests message `j`.
    pub fn run_trial<R: Rng + ?Sized>(&self, i: usize, j: usize, rng: &mut R) -> Result<TrialOutcome> {
        let (ui, uj) = (self.codebook.word(i)?, self.codebook.word(j)?);
        let mut y = Vec::with_capacity(ui.len());
        let t = self.trial_statistic(ui.as_slice(), uj.as_slice(), rng, &mut y);
        Ok(TrialOutcome {
            sent: i,
            tested: j,
            accepted: self.accepts(t),
            statistic: t,
        })
    }

    pub(crate) fn trial_statistic<R: Rng + ?Sized>(
        &self,
        sent: &[f64],
        tested: &[f64],
        rng: &mut R,
        buf: &mut Vec<u64>,
    ) -> f64 {
        transmit_into(sent, self.lambda(), rng, buf);
        statistic_slice(buf, tested, self.lambda())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::{construct_lattice, Construction, PackingParams};
    use crate::math::Dimension;
    use crate::rng::stream;
    use crate::stats::mean_and_sd;
    use proptest::prelude::*;

    fn cw(v: &[f64]) -> Codeword {
        Codeword::new(v.to_vec()).unwrap()
    }

    fn manual(words: Vec<Vec<f64>>) -> Codebook {
        let n = words[0].len() as u64;
        let p = PackingParams::derive(Dimension::new(n).unwrap(), 0.5, 2.0, 2.0).unwrap();
        let words = words.into_iter().map(|w| Codeword::new(w).unwrap()).collect();
        Codebook::new(p, words, Construction::Manual, 0).unwrap()
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(statistic(&OutputWord(vec![2]), &cw(&[1.0]), 1.0).unwrap(), -2.0);
        assert_eq!(statistic(&OutputWord(vec![1]), &cw(&[0.5]), 0.5).unwrap(), -1.0);
        assert!(statistic(&OutputWord(vec![1, 2]), &cw(&[0.5]), 0.5).is_err());
    }

    #[test]
    fn tuned_residuals_accept() {
        // mean 2 in both slots, squared residuals 4 + 0 = 2 + 2
        let cb = manual(vec![vec![1.0, 1.0]]);
        let dec = DecoderConfig::new(&cb, ChannelParams::new(1.0).unwrap());
        let y = OutputWord(vec![0, 2]);
        assert_eq!(statistic(&y, cb.word(0).unwrap(), 1.0).unwrap(), 0.0);
        assert!(dec.identify(&y, 0).unwrap());
    }

    #[test]
    fn closed_threshold() {
        let cb = manual(vec![vec![1.0]]);
        let ch = ChannelParams::new(1.0).unwrap();
        let y = OutputWord(vec![2]);
        let t = statistic(&y, cb.word(0).unwrap(), 1.0).unwrap().abs();
        assert!(DecoderConfig::new(&cb, ch).with_threshold(t).unwrap().identify(&y, 0).unwrap());
        let dec = DecoderConfig::new(&cb, ch).with_threshold(t - 1e-9).unwrap();
        assert!(!dec.identify(&y, 0).unwrap());
    }

    #[test]
    fn index_checked() {
        let cb = manual(vec![vec![1.0]]);
        let dec = DecoderConfig::new(&cb, ChannelParams::new(1.0).unwrap());
        assert!(matches!(
            dec.identify(&OutputWord(vec![1]), 3),
            Err(Error::IndexOutOfRange { index: 3, len: 1 })
        ));
        assert!(dec.run_trial(0, 1, &mut stream(0, 0, 0)).is_err());
        assert!(dec.with_threshold(-1.0).is_err());
        assert!(dec.with_threshold(f64::NAN).is_err());
    }

    #[test]
    fn trials_are_deterministic() {
        let p = PackingParams::derive(Dimension::new(8).unwrap(), 0.5, 1.0, 1.0)
            .unwrap()
            .with_radius(0.2)
            .unwrap();
        let cb = construct_lattice(&p, 16).unwrap();
        let dec = DecoderConfig::new(&cb, ChannelParams::new(0.5).unwrap());
        let a = dec.run_trial(3, 5, &mut stream(11, 1, 2)).unwrap();
        let b = dec.run_trial(3, 5, &mut stream(11, 1, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.sent, a.tested), (3, 5));
        assert!(a.statistic.is_finite());
    }

    #[test]
    fn statistic_is_unbiased_under_true_message() {
        let u = cw(&[0.2, 0.9, 1.5, 0.05, 3.0, 0.7]);
        let lambda = 0.4;
        let cb = manual(vec![u.as_slice().to_vec()]);
        let dec = DecoderConfig::new(&cb, ChannelParams::new(lambda).unwrap());
        let mut rng = stream(3, 0, 0);
        let trials = 100_000;
        let ts: Vec<f64> = (0..trials)
            .map(|_| dec.run_trial(0, 0, &mut rng).unwrap().statistic)
            .collect();
        let (mean, sd) = mean_and_sd(&ts);
        assert!(mean.abs() <= 3.0 * sd / (trials as f64).sqrt(), "mean {mean}, sd {sd}");
    }

    proptest! {
        #[test]
        fn decision_is_permutation_invariant(
            slots in proptest::collection::vec((0.01f64..3.0, 0u64..8), 1..10),
            lambda in 0.05f64..2.0,
            delta in 0.0f64..3.0,
            rot in 0usize..10,
        ) {
            let u: Vec<f64> = slots.iter().map(|s| s.0).collect();
            let y: Vec<u64> = slots.iter().map(|s| s.1).collect();
            let k = rot % u.len();
            let mut u2 = u.clone();
            let mut y2 = y.clone();
            u2.rotate_left(k);
            y2.rotate_left(k);
            u2.reverse();
            y2.reverse();
            let cb = manual(vec![u, u2]);
            let dec = DecoderConfig::new(&cb, ChannelParams::new(lambda).unwrap())
                .with_threshold(delta)
                .unwrap();
            let t1 = statistic(&OutputWord(y.clone()), cb.word(0).unwrap(), lambda).unwrap();
            let t2 = statistic(&OutputWord(y2.clone()), cb.word(1).unwrap(), lambda).unwrap();
            prop_assert!((t1 - t2).abs() <= 1e-12 * (1.0 + t1.abs()));
            // away from the boundary the decisions must agree exactly
            if (t1.abs() - delta).abs() > 1e-9 {
                prop_assert_eq!(
                    dec.identify(&OutputWord(y), 0).unwrap(),
                    dec.identify(&OutputWord(y2), 1).unwrap()
                );
            }
        }
    }
}
