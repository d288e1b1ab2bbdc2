//! Error type shared by every module of the crate.

use std::path::PathBuf;

use thiserror::Error;

/// Failures reported by the library.
///
/// Outcomes that are ordinary results of an algorithm (a factoring method
/// that finds nothing, an equation with no solution) are returned as values,
/// not as errors.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument exceeds the range covered by a precomputed table.
    #[error("range error: {0}")]
    Range(String),
    /// The input is larger than the configured capacity of an algorithm.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// A search or table request is inconsistent with what was supplied.
    #[error("configuration error: {0}")]
    Config(String),
    /// A text table or argument could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A table parsed cleanly but failed its integrity checks.
    #[error("corrupt table: {0}")]
    Corrupt(String),
    /// An operating system I/O failure, with the path involved.
    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn range(msg: impl Into<String>) -> Error {
    Error::Range(msg.into())
}
