use rand::Rng;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::identification::DecoderConfig;
use crate::rng::{experiment, stream};
use crate::stats::{mean_and_sd, ErrorEstimate};

pub const MIN_TRIALS: u64 = 100;

/// Error estimate together with the sample moments of the decoder statistic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialReport {
    pub sent: usize,
    pub tested: usize,
    pub estimate: ErrorEstimate,
    pub statistic_mean: f64,
    pub statistic_sd: f64,
}

/// Runs `trials` transmissions of message `i` and evaluates `T_j` on each.
/// Trial `t` draws its channel noise from `stream(seed, TRIALS, t)`.
fn statistics(cfg: &DecoderConfig<'_>, i: usize, j: usize, trials: u64, seed: u64, exec: Exec) -> Result<Vec<f64>> {
    if trials < MIN_TRIALS {
        return Err(invalid("trials", trials as f64, "at least 100 trials are required"));
    }
    let sent = cfg.encode(i)?.as_slice();
    let tested = cfg.encode(j)?.as_slice();
    Ok(exec.map(trials, |t| {
        let mut rng = stream(seed, experiment::TRIALS, t);
        let mut buf = Vec::with_capacity(sent.len());
        cfg.trial_statistic(sent, tested, &mut rng, &mut buf)
    }))
}

fn report(cfg: &DecoderConfig<'_>, i: usize, j: usize, ts: &[f64], count_accepts: bool) -> TrialReport {
    let accepted = ts.iter().filter(|&&t| cfg.accepts(t)).count() as u64;
    let n = ts.len() as u64;
    let errors = if count_accepts { accepted } else { n - accepted };
    let (statistic_mean, statistic_sd) = mean_and_sd(ts);
    TrialReport {
        sent: i,
        tested: j,
        estimate: ErrorEstimate::from_counts(errors, n),
        statistic_mean,
        statistic_sd,
    }
}

/// Missed-identification probability of message `i`: the fraction of
/// trials in which `u_i` is sent and rejected by its own test.
pub fn estimate_type1(i: usize, cfg: &DecoderConfig<'_>, trials: u64, seed: u64) -> Result<TrialReport> {
    estimate_type1_with(i, cfg, trials, seed, Exec::default())
}

pub fn estimate_type1_with(
    i: usize,
    cfg: &DecoderConfig<'_>,
    trials: u64,
    seed: u64,
    exec: Exec,
) -> Result<TrialReport> {
    let ts = statistics(cfg, i, i, trials, seed, exec)?;
    Ok(report(cfg, i, i, &ts, false))
}

/// False-identification probability: `u_i` is sent and message `j ≠ i`
/// is accepted.
pub fn estimate_type2(i: usize, j: usize, cfg: &DecoderConfig<'_>, trials: u64, seed: u64) -> Result<TrialReport> {
    estimate_type2_with(i, j, cfg, trials, seed, Exec::default())
}

pub fn estimate_type2_with(
    i: usize,
    j: usize,
    cfg: &DecoderConfig<'_>,
    trials: u64,
    seed: u64,
    exec: Exec,
) -> Result<TrialReport> {
    if i == j {
        return Err(invalid("j", j as f64, "type-II error needs distinct messages"));
    }
    let ts = statistics(cfg, i, j, trials, seed, exec)?;
    Ok(report(cfg, i, j, &ts, true))
}

/// `count` ordered pairs `(i, j)`, `i ≠ j`, drawn uniformly with replacement
/// from a codebook of size `len`. Empty when `len < 2`.
pub fn sample_ordered_pairs(len: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    if len < 2 {
        return Vec::new();
    }
    let mut rng = stream(seed, experiment::PAIRS, 0);
    (0..count)
        .map(|_| {
            let i = rng.random_range(0..len);
            let j = (i + rng.random_range(1..len)) % len;
            (i, j)
        })
        .collect()
}
