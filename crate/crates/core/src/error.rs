use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for codebook of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unpackable geometry: radius {r0} in cube of edge {edge} (diameter {diameter}): {reason}")]
    UnpackableGeometry {
        r0: f64,
        edge: f64,
        diameter: f64,
        reason: &'static str,
    },

    #[error("no root found: {0}")]
    NoRoot(String),

    #[error("`{name}` is not implemented: {reason}")]
    NotImplemented {
        name: &'static str,
        reason: &'static str,
    },

    #[error("unknown bound `{0}`")]
    UnknownBound(String),

    #[error("malformed codebook: {0}")]
    Codebook(String),
}

impl Error {
    /// Short machine-readable tag used in structured error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "InvalidParameter",
            Error::MissingParameter(_) => "MissingParameter",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::UnpackableGeometry { .. } => "UnpackableGeometry",
            Error::NoRoot(_) => "NoRoot",
            Error::NotImplemented { .. } => "NotImplemented",
            Error::UnknownBound(_) => "UnknownBound",
            Error::Codebook(_) => "Codebook",
        }
    }
}

pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::InvalidParameter {
        name,
        value,
        reason,
    }
}
