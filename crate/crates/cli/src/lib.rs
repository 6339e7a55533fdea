//! Command-line front end for `exceptia`.
//!
//! Every subcommand yields a [`Report`] holding a human-readable text and a
//! JSON value from [`schema`]; `main` prints one of the two.

pub mod args;
mod commands;
pub mod parse;
pub mod schema;

use serde::Serialize;
use thiserror::Error;

pub use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed operands or flags; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A library error, echoed verbatim; exit code 1.
    #[error("{0}")]
    Domain(exceptia::Error),
    #[error("{0}")]
    Io(String),
}

impl From<exceptia::Error> for CliError {
    fn from(e: exceptia::Error) -> Self {
        match e {
            exceptia::Error::Parse(m) => CliError::Usage(m),
            other => CliError::Domain(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
}

impl Report {
    pub fn new<T: Serialize>(text: impl Into<String>, data: &T) -> Self {
        Self {
            text: text.into(),
            json: serde_json::to_value(data).expect("schema types serialize"),
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("value serializes")
        } else {
            self.text.trim_end().to_string()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    commands::dispatch(&cli.command)
}

/// Size rayon's global pool from `EXCEPTIA_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("EXCEPTIA_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "EXCEPTIA_THREADS must be a positive integer, got `{v}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Io(e.to_string()))
}
