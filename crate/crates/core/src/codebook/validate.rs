use serde::Serialize;

use super::{distance_sq, Codebook};
use crate::exec::Exec;

/// Absolute slack on every constraint comparison.
pub const VALIDATION_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WordCheck {
    pub index: usize,
    pub max_letter: f64,
    pub min_letter: f64,
    pub mean_letter: f64,
    /// `0 < u_t ≤ P_max` for every letter.
    pub peak_ok: bool,
    /// `(1/n) Σ u_t ≤ P_ave`.
    pub average_ok: bool,
    /// Every letter in `(0, A]`.
    pub in_cube: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub words: Vec<WordCheck>,
    /// `None` for codebooks with fewer than two words.
    pub min_distance: Option<f64>,
    pub min_distance_pair: Option<(usize, usize)>,
    pub required_distance: f64,
    pub packing_ok: bool,
}

impl ValidationReport {
    pub fn constraints_ok(&self) -> bool {
        self.words.iter().all(|w| w.peak_ok && w.average_ok && w.in_cube)
    }

    pub fn all_ok(&self) -> bool {
        self.constraints_ok() && self.packing_ok
    }

    pub fn peak_violations(&self) -> Vec<usize> {
        self.words.iter().filter(|w| !w.peak_ok).map(|w| w.index).collect()
    }
}

/// Checks power constraints per word and the minimum pairwise distance.
pub fn validate(codebook: &Codebook) -> ValidationReport {
    validate_with(codebook, Exec::default())
}

pub fn validate_with(codebook: &Codebook, exec: Exec) -> ValidationReport {
    let p = codebook.params();
    let words: Vec<WordCheck> = codebook
        .words()
        .iter()
        .enumerate()
        .map(|(index, w)| {
            let x = w.as_slice();
            let max_letter = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let min_letter = x.iter().copied().fold(f64::INFINITY, f64::min);
            let mean_letter = x.iter().sum::<f64>() / x.len() as f64;
            WordCheck {
                index,
                max_letter,
                min_letter,
                mean_letter,
                peak_ok: min_letter > 0.0 && max_letter <= p.p_max + VALIDATION_SLACK,
                average_ok: mean_letter <= p.p_ave + VALIDATION_SLACK,
                in_cube: min_letter > 0.0 && max_letter <= p.a + VALIDATION_SLACK,
            }
        })
        .collect();

    let all = codebook.words();
    let nearest: Vec<Option<(f64, usize, usize)>> = exec.map(all.len() as u64, |i| {
        let i = i as usize;
        let u = all[i].as_slice();
        all[i + 1..]
            .iter()
            .enumerate()
            .map(|(k, v)| (distance_sq(u, v.as_slice()), i, i + 1 + k))
            .min_by(|a, b| a.0.total_cmp(&b.0))
    });
    let closest = nearest
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.total_cmp(&b.0));
    let required = 2.0 * p.r0;
    let (min_distance, pair) = match closest {
        Some((d2, i, j)) => (Some(d2.sqrt()), Some((i, j))),
        None => (None, None),
    };
    ValidationReport {
        words,
        min_distance,
        min_distance_pair: pair,
        required_distance: required,
        packing_ok: min_distance.is_none_or(|d| d >= required - VALIDATION_SLACK),
    }
}
