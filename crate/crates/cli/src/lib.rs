//! Batch driver for the `rankforge` binary: curve files, the JSONL catalog,
//! and the `construct` / `verify` / `report` commands.

pub mod catalog;
pub mod commands;
pub mod config;

use thiserror::Error;

pub use catalog::{CatalogLine, Status};
pub use commands::{construct, report, verify, CatalogReport, PrimeSummary, VerifyOutcome};
pub use config::{ConstructArgs, CurveFile, PathChoice, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Representation(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    /// 1 for bad input, 2 when the prime has no representation, 3 when a
    /// check fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Parse { .. } | CliError::Io(_) => 1,
            CliError::Representation(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}
