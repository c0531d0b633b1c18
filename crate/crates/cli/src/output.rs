//! Output plumbing shared by the subcommands.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::Serialize;

/// Simple error carrier; everything maps to exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

pub fn fail<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError(msg.into()))
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Write to the given path, or stdout when absent.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

/// Complex number as the `[re, im]` pair used in all JSON output.
pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Parse "i,j" into a pair of integers.
pub fn parse_point(text: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return fail(format!("expected \"i,j\", got {text:?}"));
    }
    let i = parts[0]
        .parse::<i64>()
        .map_err(|e| CliError(format!("bad coordinate {:?}: {e}", parts[0])))?;
    let j = parts[1]
        .parse::<i64>()
        .map_err(|e| CliError(format!("bad coordinate {:?}: {e}", parts[1])))?;
    Ok((i, j))
}

/// Step sets arrive either in the compact text form or as a JSON array.
pub fn parse_steps(text: &str) -> Result<walks_core::stepset::StepSet, CliError> {
    let trimmed = text.trim();
    let parsed = if trimmed.starts_with('[') {
        walks_core::stepset::StepSet::parse_json(trimmed)
    } else {
        walks_core::stepset::StepSet::parse_text(trimmed)
    };
    parsed.map_err(|e| CliError(format!("--steps: {e}")))
}
