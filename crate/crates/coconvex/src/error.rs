//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by validation, parsing and capability limits.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a documented precondition (dimension mismatch, bad
    /// truncation level, wrong marked-point count, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A validation rule of a domain type failed (non-pointed cone, base
    /// point outside the cone, unbounded complement, origin inside delta).
    #[error("validation failed: {0}")]
    Validation(String),

    /// The request exceeds a deliberate desk-scale capability bound.
    #[error("capability limit: {0}")]
    Capability(String),

    /// Malformed input file or literal.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant that should be unreachable fired; indicates a
    /// bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// An exactness-first check could not be decided within the precision cap.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
