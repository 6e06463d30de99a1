use serde::{Deserialize, Serialize};

use crate::codebook::{distance_sq, Codebook};
use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::math::Dimension;

/// Which fourth-moment proxy the type-I bound uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Type1Variant {
    /// Quartic evaluated at the dark current `λ`, as in the original display.
    Literal,
    /// Quartic evaluated at `λ + A`, the largest per-letter output mean.
    /// This dominates the true variance proxy for every codeword in the cube.
    Sound,
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, v, "must be positive and finite"))
    }
}

/// `min(1, 63 (μ⁴ + μ³ + μ² + μ) / (A² n^b))` with `μ = λ` or `μ = λ + A`.
pub fn type1_chebyshev_bound(lambda: f64, a: f64, n: Dimension, b: f64, variant: Type1Variant) -> Result<f64> {
    check_positive("lambda", lambda)?;
    check_positive("A", a)?;
    check_positive("b", b)?;
    let mu = match variant {
        Type1Variant::Literal => lambda,
        Type1Variant::Sound => lambda + a,
    };
    let quartic = mu * (1.0 + mu * (1.0 + mu * (1.0 + mu)));
    Ok((63.0 * quartic / (a * a * n.as_f64().powf(b))).min(1.0))
}

/// Chebyshev bound on the cross-term event of the type-II analysis:
/// `min(1, 48 (λ + A) / n^b)`.
pub fn e0_bound(lambda: f64, a: f64, n: Dimension, b: f64) -> Result<f64> {
    check_positive("lambda", lambda)?;
    check_positive("A", a)?;
    check_positive("b", b)?;
    Ok((48.0 * (lambda + a) / n.as_f64().powf(b)).min(1.0))
}

/// Algebraic check that the second type-II event cannot occur: every pair
/// must satisfy `‖u_i − u_j‖² > 2nδ_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct E1Check {
    pub pairs_checked: u64,
    pub threshold: f64,
    pub min_distance_sq: Option<f64>,
    pub violations: Vec<(usize, usize)>,
}

impl E1Check {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-row result: nearest later word's squared distance and violating pairs.
type E1Row = (Option<f64>, Vec<(usize, usize)>);

pub fn e1_structural_check(codebook: &Codebook) -> E1Check {
    let p = codebook.params();
    let threshold = 2.0 * p.n.as_f64() * p.delta_n;
    let words = codebook.words();
    let rows: Vec<E1Row> = Exec::default().map(words.len() as u64, |i| {
        let i = i as usize;
        let mut min: Option<f64> = None;
        let mut bad = Vec::new();
        for (k, v) in words[i + 1..].iter().enumerate() {
            let d2 = distance_sq(words[i].as_slice(), v.as_slice());
            min = Some(min.map_or(d2, |m| m.min(d2)));
            if d2 <= threshold {
                bad.push((i, i + 1 + k));
            }
        }
        (min, bad)
    });
    let l = words.len() as u64;
    let mut min_distance_sq: Option<f64> = None;
    let mut violations = Vec::new();
    for (m, bad) in rows {
        if let Some(m) = m {
            min_distance_sq = Some(min_distance_sq.map_or(m, |x| x.min(m)));
        }
        violations.extend(bad);
    }
    E1Check {
        pairs_checked: l * l.saturating_sub(1) / 2,
        threshold,
        min_distance_sq,
        violations,
    }
}
