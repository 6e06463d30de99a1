//! Shannon-capacity bounds for the discrete-time Poisson channel.
//!
//! Every function returns its value in bits per channel use. Bounds whose
//! published form mixes natural logs (ζ, the `u` equation, the `P/β` term)
//! are evaluated entirely in nats and converted with a single division by
//! `ln 2`; each function documents where that happens.

mod fading;
mod high_power;
mod low_power;
mod optimize;
mod peak;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use fading::{fading_no_csi_capacity, FadingGain};
pub use high_power::{
    alpha_regime_capacity, brady_bounds, martinez_ub, solve_u_root, u_equation, URoot, ALPHA_SPLIT,
};
pub use low_power::{
    lapidoth_grid, lapidoth_grid_min, lapidoth_low_power_ub, wang_phi, wang_phi_sup, wang_refined_ub,
};
pub use optimize::{bisect, golden_section_max, log_space, sign_scan};
pub use peak::aminian_peak_ub;

/// A bound evaluated at concrete parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundValue {
    pub name: BoundName,
    /// Bits per channel use.
    pub value: f64,
    pub params: BTreeMap<String, f64>,
    /// Free or auxiliary quantities (optimiser arguments, roots).
    pub free_params: BTreeMap<String, f64>,
    /// True when unspecified `O(·)` terms were dropped.
    pub asymptotic: bool,
    pub notes: Vec<String>,
}

impl BoundValue {
    fn new(name: BoundName, value: f64) -> Self {
        BoundValue {
            name,
            value,
            params: BTreeMap::new(),
            free_params: BTreeMap::new(),
            asymptotic: false,
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, v: f64) -> Self {
        self.params.insert(key.to_string(), v);
        self
    }

    fn free(mut self, key: &str, v: f64) -> Self {
        self.free_params.insert(key.to_string(), v);
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }
}

/// Names in the bound registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    LapidothLowUb,
    WangUb,
    MartinezUb,
    BradyLb,
    BradyUb,
    AlphaRegime,
    AminianPeakUb,
    FadingNoCsi,
    AminianCovarianceUb,
    FadingPerfectCsi,
}

impl BoundName {
    pub const ALL: [BoundName; 10] = [
        BoundName::LapidothLowUb,
        BoundName::WangUb,
        BoundName::MartinezUb,
        BoundName::BradyLb,
        BoundName::BradyUb,
        BoundName::AlphaRegime,
        BoundName::AminianPeakUb,
        BoundName::FadingNoCsi,
        BoundName::AminianCovarianceUb,
        BoundName::FadingPerfectCsi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::LapidothLowUb => "lapidoth_low_ub",
            BoundName::WangUb => "wang_ub",
            BoundName::MartinezUb => "martinez_ub",
            BoundName::BradyLb => "brady_lb",
            BoundName::BradyUb => "brady_ub",
            BoundName::AlphaRegime => "alpha_regime",
            BoundName::AminianPeakUb => "aminian_peak_ub",
            BoundName::FadingNoCsi => "fading_no_csi",
            BoundName::AminianCovarianceUb => "aminian_covariance_ub",
            BoundName::FadingPerfectCsi => "fading_perfect_csi",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

/// Inputs for [`evaluate`]; each bound reads only the fields it needs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundInputs {
    pub lambda: Option<f64>,
    pub p_ave: Option<f64>,
    pub p_max: Option<f64>,
    pub p: Option<f64>,
    pub beta: Option<f64>,
    pub snr: Option<f64>,
    pub eps: Option<f64>,
    pub p_eps: Option<f64>,
    pub alpha: Option<f64>,
    pub sigma: Option<f64>,
    /// Fading atoms `(s, probability)`.
    pub atoms: Vec<(f64, f64)>,
}

fn need(v: Option<f64>, name: &'static str) -> Result<f64> {
    v.ok_or(Error::MissingParameter(name))
}

/// Evaluates a registry entry.
///
/// `lapidoth_low_ub` without `p`/`β` returns the minimum over the default
/// 20×20 grid. `alpha_regime` without `α` uses `P_ave / P_max`.
pub fn evaluate(name: BoundName, x: &BoundInputs) -> Result<BoundValue> {
    match name {
        BoundName::LapidothLowUb => {
            let p_ave = need(x.p_ave, "p_ave")?;
            match (x.p, x.beta) {
                (Some(p), Some(beta)) => lapidoth_low_power_ub(p_ave, p, beta),
                (None, None) => lapidoth_grid_min(p_ave),
                (None, Some(_)) => Err(Error::MissingParameter("p")),
                (Some(_), None) => Err(Error::MissingParameter("beta")),
            }
        }
        BoundName::WangUb => wang_refined_ub(need(x.p_ave, "p_ave")?),
        BoundName::MartinezUb => martinez_ub(need(x.p_ave, "p_ave")?),
        BoundName::BradyLb | BoundName::BradyUb => {
            let (lo, hi) = brady_bounds(
                need(x.p_ave, "p_ave")?,
                need(x.snr, "snr")?,
                need(x.eps, "eps")?,
                need(x.p_eps, "p_eps")?,
            )?;
            Ok(if name == BoundName::BradyLb { lo } else { hi })
        }
        BoundName::AlphaRegime => {
            let p_max = need(x.p_max, "p_max")?;
            let alpha = match x.alpha {
                Some(a) => a,
                None => need(x.p_ave, "alpha")? / p_max,
            };
            alpha_regime_capacity(p_max, alpha)
        }
        BoundName::AminianPeakUb => aminian_peak_ub(
            need(x.lambda, "lambda")?,
            need(x.p_ave, "p_ave")?,
            need(x.p_max, "p_max")?,
        ),
        BoundName::FadingNoCsi => {
            let gain = FadingGain::new(x.atoms.clone(), need(x.alpha, "alpha")?, need(x.sigma, "sigma")?)?;
            fading_no_csi_capacity(&gain, need(x.lambda, "lambda")?)
        }
        BoundName::AminianCovarianceUb => Err(Error::NotImplemented {
            name: "aminian_covariance_ub",
            reason: "maximisation of Cov(X+λ, log(X+λ)) over input laws is infinite-dimensional",
        }),
        BoundName::FadingPerfectCsi => Err(Error::NotImplemented {
            name: "fading_perfect_csi",
            reason: "maximisation over power-allocation functions μ(S) is infinite-dimensional",
        }),
    }
}

/// `ζ(x, y) = (x + y) ln(x + y) − y ln y` in nats, with `0 ln 0 = 0`.
pub fn zeta(x: f64, y: f64) -> f64 {
    fn xlnx(v: f64) -> f64 {
        if v == 0.0 {
            0.0
        } else {
            v * v.ln()
        }
    }
    xlnx(x + y) - xlnx(y)
}

/// Deterministic table of limiting-behaviour diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoteReport {
    /// `(P, martinez_ub(P) / (−P log₂ P))` for `P = 10⁻³ … 10⁻⁶`.
    pub low_power_ratio: Vec<(f64, f64)>,
    /// `(P, martinez_ub(P) − ½ log₂ P)` for `P = 10³ … 10⁸`.
    pub high_power_gap: Vec<(f64, f64)>,
}

pub fn asymptote_checks() -> Result<AsymptoteReport> {
    let low = [1e-3, 1e-4, 1e-5, 1e-6]
        .into_iter()
        .map(|p: f64| Ok((p, martinez_ub(p)?.value / (-p * p.log2()))))
        .collect::<Result<_>>()?;
    let high = [1e3, 1e4, 1e5, 1e6, 1e7, 1e8]
        .into_iter()
        .map(|p: f64| Ok((p, martinez_ub(p)?.value - 0.5 * p.log2())))
        .collect::<Result<_>>()?;
    Ok(AsymptoteReport {
        low_power_ratio: low,
        high_power_gap: high,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(0.0, 0.0), 0.0);
        assert!((zeta(1.0, 1.0) - 2.0 * LN_2).abs() < 1e-15);
        assert!((zeta(1.0, 1.0) - 1.386_29).abs() < 1e-5);
        for x in [0.1, 1.0, 7.5] {
            assert_eq!(zeta(x, 0.0), x * x.ln());
        }
        for y in [0.0, 0.3, 9.0] {
            assert_eq!(zeta(0.0, y), 0.0);
        }
    }

    #[test]
    fn registry_names_roundtrip() {
        for b in BoundName::ALL {
            assert_eq!(b.as_str().parse::<BoundName>().unwrap(), b);
        }
        assert!(matches!("nope".parse::<BoundName>(), Err(Error::UnknownBound(_))));
    }

    #[test]
    fn registry_dispatch() {
        let x = BoundInputs {
            p_ave: Some(1.0),
            ..Default::default()
        };
        let v = evaluate(BoundName::MartinezUb, &x).unwrap();
        assert_eq!(v, martinez_ub(1.0).unwrap());
        assert!(matches!(
            evaluate(BoundName::AminianPeakUb, &x),
            Err(Error::MissingParameter("lambda"))
        ));
        assert!(matches!(
            evaluate(BoundName::AminianCovarianceUb, &x),
            Err(Error::NotImplemented { .. })
        ));
        assert!(matches!(evaluate(BoundName::FadingPerfectCsi, &x), Err(Error::NotImplemented { .. })));
        let grid = evaluate(BoundName::LapidothLowUb, &x).unwrap();
        assert!(grid.free_params.contains_key("p") && grid.free_params.contains_key("beta"));
        let alpha = evaluate(
            BoundName::AlphaRegime,
            &BoundInputs {
                p_ave: Some(50.0),
                p_max: Some(100.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(alpha, alpha_regime_capacity(100.0, 0.5).unwrap());
    }

    #[test]
    fn evaluations_are_pure() {
        let x = BoundInputs {
            lambda: Some(0.7),
            p_ave: Some(0.05),
            p_max: Some(3.0),
            p: Some(0.4),
            beta: Some(2.0),
            snr: Some(4.0),
            eps: Some(0.1),
            p_eps: Some(5.0),
            alpha: Some(0.2),
            sigma: Some(0.5),
            atoms: vec![(0.5, 0.25), (2.0, 0.75)],
        };
        for name in BoundName::ALL {
            let a = evaluate(name, &x);
            let b = evaluate(name, &x);
            match (a, b) {
                (Ok(a), Ok(b)) => assert_eq!(a.value.to_bits(), b.value.to_bits(), "{name}"),
                (Err(a), Err(b)) => assert_eq!(a, b),
                _ => panic!("{name}: inconsistent"),
            }
        }
    }

    #[test]
    fn asymptote_table() {
        let r = asymptote_checks().unwrap();
        assert_eq!(r.low_power_ratio.len(), 4);
        assert!(r.low_power_ratio.iter().all(|(_, v)| v.is_finite() && *v > 0.0));
        for w in r.high_power_gap.windows(2) {
            assert!(w[1].1.abs() < w[0].1.abs(), "{:?}", r.high_power_gap);
        }
        assert_eq!(r, asymptote_checks().unwrap());
    }
}
