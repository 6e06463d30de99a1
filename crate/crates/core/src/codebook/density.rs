//! Monte-Carlo coverage estimates for packings.

use rand::Rng;

use super::{distance_sq, Codebook};
use crate::exec::Exec;
use crate::rng::{experiment, stream};
use crate::stats::ErrorEstimate;

fn uniform_probe(n: usize, a: f64, seed: u64, family: u64, index: u64) -> Vec<f64> {
    let mut rng = stream(seed, family, index);
    (0..n).map(|_| a * (1.0 - rng.random::<f64>())).collect()
}

fn covered(codebook: &Codebook, probe: &[f64], radius_sq: f64) -> bool {
    codebook
        .words()
        .iter()
        .any(|w| distance_sq(w.as_slice(), probe) <= radius_sq)
}

/// Fraction of the cube `(0, A]ⁿ` covered by the radius-`r0` spheres,
/// estimated from `samples` uniform probes, with a Wilson interval.
pub fn packing_density_estimate(codebook: &Codebook, samples: u64, seed: u64) -> ErrorEstimate {
    packing_density_estimate_with(codebook, samples, seed, Exec::default())
}

pub fn packing_density_estimate_with(
    codebook: &Codebook,
    samples: u64,
    seed: u64,
    exec: Exec,
) -> ErrorEstimate {
    let p = codebook.params();
    let (n, a, r2) = (p.n.as_usize(), p.a, p.r0 * p.r0);
    let hits = if codebook.is_empty() {
        0
    } else {
        exec.count(samples, |i| {
            covered(codebook, &uniform_probe(n, a, seed, experiment::DENSITY, i), r2)
        })
    };
    ErrorEstimate::from_counts(hits, samples)
}

/// Number of uniform probes farther than `2·r0` from every centre.
///
/// Zero for a truly saturated packing.
pub fn doubled_radius_cover_failures(codebook: &Codebook, probes: u64, seed: u64) -> u64 {
    let p = codebook.params();
    let (n, a) = (p.n.as_usize(), p.a);
    let r2 = 4.0 * p.r0 * p.r0;
    Exec::default().count(probes, |i| {
        !covered(codebook, &uniform_probe(n, a, seed, experiment::COVER, i), r2)
    })
}
