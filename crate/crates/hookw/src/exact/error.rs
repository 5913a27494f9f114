//! Error type for the exact arithmetic kernel.

use super::var::Var;
use thiserror::Error;

/// Failures of exact operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// A quotient was formed with an identically zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// Evaluation hit a zero of the denominator.
    #[error("pole: denominator vanishes at the given point")]
    Pole,
    /// Evaluation was asked for without a value for a variable that occurs.
    #[error("no value supplied for variable `{0}`")]
    MissingVariable(Var),
    /// A name outside the variable universe was used.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    /// Malformed textual input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse {
        /// Byte offset of the problem.
        pos: usize,
        /// Human readable description.
        msg: String,
    },
    /// A polynomial had degree zero in the elimination variable.
    #[error("polynomial has degree 0 in `{0}`")]
    ZeroDegree(Var),
    /// An operation that needs a nonzero polynomial received zero.
    #[error("zero polynomial")]
    ZeroPolynomial,
}
