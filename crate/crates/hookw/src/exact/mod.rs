//! Exact arithmetic kernel: arbitrary precision rationals, sparse
//! multivariate polynomials over a fixed variable universe, canonical
//! rational functions, substitution, resultants and rational roots.
//!
//! Every value is immutable once built and every operation is a pure
//! function, so values can be shared freely between threads.

mod error;
mod modgcd;
mod parse;
mod poly;
mod ratfunc;
mod resultant;
mod unipoly;
mod var;

pub use error::ExactError;
pub use modgcd::poly_gcd;
pub use parse::{parse_bigrat, parse_ratfunc};
pub use poly::{Exps, Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use unipoly::UniPoly;
pub use var::{Var, NVARS};

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator.
pub type BigRat = num_rational::BigRational;

/// `p/q` as a [`BigRat`] (panics if `q = 0`).
pub fn rat(p: i64, q: i64) -> BigRat {
    BigRat::new(p.into(), q.into())
}

/// An integer as a [`BigRat`].
pub fn int(p: i64) -> BigRat {
    BigRat::from_integer(p.into())
}

/// Canonical form of `num/den`; see [`RatFunc::normalize`].
pub fn normalize(num: MultiPoly, den: MultiPoly) -> Result<RatFunc, ExactError> {
    RatFunc::normalize(num, den)
}

/// Exact composition `f[var := g]`; see [`RatFunc::substitute`].
pub fn substitute(f: &RatFunc, var: Var, g: &RatFunc) -> Result<RatFunc, ExactError> {
    f.substitute(var, g)
}

/// Rational roots of a univariate polynomial; see [`UniPoly::rational_roots`].
pub fn rational_roots(p: &UniPoly) -> Result<Vec<BigRat>, ExactError> {
    p.rational_roots()
}

/// Parses an expression, panicking on malformed input.  Intended for
/// compile-time constant tables and tests.
pub fn rf(text: &str) -> RatFunc {
    parse_ratfunc(text).unwrap_or_else(|e| panic!("bad expression `{text}`: {e}"))
}
