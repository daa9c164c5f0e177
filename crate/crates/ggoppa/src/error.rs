//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zero has no inverse")]
    ZeroInverse,

    #[error("polynomials are not coprime")]
    NotCoprime,

    #[error("locator {index}: reducible polynomial")]
    ReducibleLocator { index: usize },

    #[error("locator {index}: duplicate of locator {first}")]
    DuplicateLocator { index: usize, first: usize },

    #[error("locator {index}: shares a factor with the Goppa polynomial")]
    LocatorSharesGoppaFactor { index: usize },

    #[error("locator {index}: {reason}")]
    BadLocator { index: usize, reason: String },

    #[error("support ordering not systematic: leading block is singular")]
    NotSystematic,

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Broken internal invariant. Mapped to exit code 2 by the CLI.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code for the CLI: 1 for validation/user errors, 2 for internal ones.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Internal(_) => 2,
            _ => 1,
        }
    }
}
