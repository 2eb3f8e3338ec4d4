//! IO companion to `qfi-core`: tables (CSV/JSON), SVG charts, and a
//! parallel sweep runner. The `qfi` binary is a thin wrapper over this
//! library so that every surface stays testable in-process.

pub mod runner;
pub mod svg;
pub mod table;

use std::fmt;
use std::path::PathBuf;

/// Process-level error classification; the binary maps each variant to its
/// exit code (usage 1, computation/domain 2, IO 3).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Compute(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Compute(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {}
