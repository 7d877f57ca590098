use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// The variants matter to callers: the command-line front end maps
/// `Capability` to its own exit code because "this input is too large for
/// the exhaustive algorithm" is a different situation from a malformed
/// argument.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is malformed or out of range.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested quantity is mathematically undefined for this input.
    #[error("undefined: {0}")]
    Domain(String),

    /// The input is valid but outside what this implementation can handle
    /// (dimension caps on exhaustive enumeration, sparsity gates, ...).
    #[error("out of capability: {0}")]
    Capability(String),

    /// A randomized constructor exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),

    /// A set or function file failed to parse or is internally inconsistent.
    #[error("bad file: {0}")]
    Format(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
