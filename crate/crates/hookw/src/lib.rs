//! Exact computer algebra for the eight hook-type orthosymplectic
//! W-(super)algebra coset families.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] — rationals, sparse polynomials, canonical rational
//!   functions, resultants and rational roots;
//! * [`liedata`] — Lie superalgebra bookkeeping and the family descriptors;
//! * [`curves`] — truncation curves, triality identities and intersections;
//! * [`spectra`] — singular-vector weights and strong generating types;
//! * [`catalog`] — coincidence tables and rationality witnesses.

pub mod catalog;
pub mod curves;
pub mod error;
pub mod exact;
pub mod liedata;
pub mod spectra;

pub use error::{Error, Result};
