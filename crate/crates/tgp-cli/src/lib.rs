//! Command-line benchmark harness: seeded experiment batches, front and
//! metric exports, and comparison tables against published SPEA/PAES
//! reference values.
//!
//! The binary exposes three subcommands:
//!
//! * `run` — execute a batch of seeded runs (plain, archive or classic
//!   variant) and write per-run front files, per-run metric series and a
//!   `summary.json`;
//! * `front` — export the 200-point reference front of a ZDT problem;
//! * `compare` — tabulate one or more summaries against the baseline
//!   reference values, flagging where this implementation does better.
//!
//! Identical specs produce byte-identical output files; timing is reported
//! on stderr only.

pub mod baseline;
pub mod commands;
pub mod summary;

use std::fmt;

/// Harness errors, carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad invocation (unknown problem, unknown variant): exit code 2.
    Usage(String),
    /// Failed execution (I/O, malformed files): exit code 1.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Runtime(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tgp::TgpError> for CliError {
    fn from(err: tgp::TgpError) -> Self {
        CliError::Usage(err.to_string())
    }
}

/// Renders a float with 13 significant digits, precise enough to recompute
/// aggregate means from the files to well below 1e-9.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.12e}")
}
