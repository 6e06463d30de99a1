//! Versioned JSON form of a codebook.
//!
//! ```json
//! {"schema_version":1,"params":{...},"construction":"lattice","seed":0,
//!  "words":[[1.0000000000000000e-1, ...], ...]}
//! ```
//!
//! Every double is written with 17 significant digits, which round-trips
//! the binary value exactly.

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use super::{Codebook, Construction, PackingParams};
use crate::channel::Codeword;
use crate::error::{Error, Result};
use crate::math::Dimension;

pub const SCHEMA_VERSION: u32 = 1;

/// Formats a finite double with 17 significant digits.
///
/// Non-finite values become `null` so the output stays valid JSON.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_f64(x)).expect("formatted double is valid JSON")
}

#[derive(Serialize)]
struct ParamsOut {
    n: Dimension,
    b: Box<RawValue>,
    p_max: Box<RawValue>,
    p_ave: Box<RawValue>,
    a: Box<RawValue>,
    eps_n: Box<RawValue>,
    r0: Box<RawValue>,
    delta_n: Box<RawValue>,
}

#[derive(Serialize)]
struct CodebookOut {
    schema_version: u32,
    params: ParamsOut,
    construction: Construction,
    seed: u64,
    words: Vec<Vec<Box<RawValue>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CodebookIn {
    schema_version: u32,
    params: PackingParams,
    construction: Construction,
    seed: u64,
    words: Vec<Vec<f64>>,
}

impl Codebook {
    pub fn to_json(&self) -> String {
        let p = self.params();
        let out = CodebookOut {
            schema_version: SCHEMA_VERSION,
            params: ParamsOut {
                n: p.n,
                b: raw(p.b),
                p_max: raw(p.p_max),
                p_ave: raw(p.p_ave),
                a: raw(p.a),
                eps_n: raw(p.eps_n),
                r0: raw(p.r0),
                delta_n: raw(p.delta_n),
            },
            construction: self.construction(),
            seed: self.seed(),
            words: self
                .words()
                .iter()
                .map(|w| w.as_slice().iter().map(|&x| raw(x)).collect())
                .collect(),
        };
        serde_json::to_string(&out).expect("codebook serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: CodebookIn =
            serde_json::from_str(text).map_err(|e| Error::Codebook(e.to_string()))?;
        if parsed.schema_version != SCHEMA_VERSION {
            return Err(Error::Codebook(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                parsed.schema_version
            )));
        }
        let p = parsed.params;
        if p.a != p.p_ave.min(p.p_max) {
            return Err(Error::Codebook("params.a must equal min(p_ave, p_max)".into()));
        }
        let words = parsed
            .words
            .into_iter()
            .map(Codeword::new)
            .collect::<Result<Vec<_>>>()?;
        Codebook::new(p, words, parsed.construction, parsed.seed)
    }
}
