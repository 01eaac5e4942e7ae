//! Baseline reference values for the comparison table.
//!
//! The shipped `data/baseline.csv` holds published SPEA and PAES CM/DM
//! values on the ZDT suite (transcribed reference data, clearly marked as
//! such in the file header). `compare` reads a user-supplied file of the
//! same shape, or falls back to the embedded copy.

use std::collections::BTreeMap;

use crate::CliError;

/// The transcription shipped with the crate.
pub const EMBEDDED_BASELINE: &str = include_str!("../data/baseline.csv");

/// `(method, problem) -> (cm, dm)`, ordered for stable iteration.
pub type BaselineTable = BTreeMap<(String, String), (f64, f64)>;

/// Parses `method,problem,cm,dm` rows; `#` comments and blank lines are
/// skipped. Errors carry the offending line and column.
pub fn parse_baseline(text: &str, source: &str) -> Result<BaselineTable, CliError> {
    let mut table = BaselineTable::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_display = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(CliError::Runtime(format!(
                "{source}:{line_display}: expected 4 columns (method,problem,cm,dm), got {}",
                fields.len()
            )));
        }
        if fields[0].eq_ignore_ascii_case("method") {
            continue; // header row
        }
        let parse = |col: usize| -> Result<f64, CliError> {
            fields[col].parse::<f64>().map_err(|_| {
                CliError::Runtime(format!(
                    "{source}:{line_display}: column {} is not a number: {:?}",
                    col + 1,
                    fields[col]
                ))
            })
        };
        let cm = parse(2)?;
        let dm = parse(3)?;
        table.insert(
            (
                fields[0].to_ascii_lowercase(),
                fields[1].to_ascii_lowercase(),
            ),
            (cm, dm),
        );
    }
    Ok(table)
}

/// Methods present in the table, ordered.
pub fn methods(table: &BaselineTable) -> Vec<String> {
    let mut out: Vec<String> = table.keys().map(|(m, _)| m.clone()).collect();
    out.sort();
    out.dedup();
    out
}
