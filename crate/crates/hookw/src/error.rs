//! Crate-wide error type.

use crate::exact::ExactError;
use thiserror::Error;

/// Errors raised by the Lie-theoretic, curve and catalog layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact-arithmetic failure (pole, zero denominator, parse error, …).
    #[error(transparent)]
    Exact(#[from] ExactError),
    /// A parameter lies outside the range where the operation is defined.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    /// A family parameter is not an integer where one is required.
    #[error("family parameters must be non-negative integers here")]
    NonIntegral,
    /// A family tag other than 1B, 1C, 1D, 1O, 2B, 2C, 2D, 2O.
    #[error("unknown family tag `{0}`")]
    UnknownFamily(String),
    /// A target-algebra kind other than sp, so_even, osp (or so_odd where allowed).
    #[error("unknown target kind `{0}`")]
    UnknownKind(String),
    /// No coincidence table exists for the requested pair.
    #[error("no coincidence table for source {0} and target {1}")]
    UnknownPair(String, String),
    /// No catalogued rationality theorem covers the requested family.
    #[error("no catalogued rationality theorem for {0}")]
    NoTheorem(String),
    /// A curve still depends on symbols other than its parameter.
    #[error("curve depends on residual symbols: {0}")]
    ResidualSymbols(String),
}

/// Shorthand result type.
pub type Result<T> = std::result::Result<T, Error>;
