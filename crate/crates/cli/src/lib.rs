//! Command-line front end for `poisson-di`.

pub mod args;
mod commands;
pub mod output;

use std::path::{Path, PathBuf};

pub use args::Cli;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] poisson_di::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "Usage",
            CliError::Io { .. } => "Io",
        }
    }

    /// One-line JSON error record for stderr.
    pub fn record(&self) -> String {
        format!(
            "{{\"schema_version\":{},\"error\":{{\"kind\":{},\"message\":{}}}}}",
            poisson_di::codebook::SCHEMA_VERSION,
            serde_json::Value::from(self.kind()),
            serde_json::Value::from(self.to_string()),
        )
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Executes a parsed command line, writing to `--out` or stdout.
pub fn run(cli: Cli) -> Result<()> {
    commands::dispatch(cli.command)
}
