//! File formats, reports and command dispatch for the `lpdelta` binary.

pub mod job;
pub mod plot;
pub mod report;
pub mod schema;

use std::path::PathBuf;

pub use job::{execute, run_command, Command, JobSpec, RunOutput};
pub use report::SCHEMA_ID;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("{0}")]
    Operator(#[from] lpdelta::OperatorError),
    #[error("{0}")]
    Zero(#[from] lpdelta::ZeroError),
    #[error("{0}")]
    Entire(#[from] lpdelta::entire::EntireError),
    #[error("{0}")]
    Witness(#[from] lpdelta::witness::WitnessError),
}

impl CliError {
    /// Process exit status: 3 for I/O, 4 for bad input, 5 for numeric
    /// failures. Clap uses 2 for usage errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Json(_)
            | CliError::Schema(_)
            | CliError::Operator(_)
            | CliError::Entire(_)
            | CliError::Witness(_) => 4,
            CliError::Zero(_) => 5,
        }
    }
}
