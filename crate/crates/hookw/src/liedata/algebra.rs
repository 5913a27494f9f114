//! Descriptors of the simple Lie (super)algebras that occur in the hook-type
//! decompositions, with dual Coxeter numbers and superdimensions.

use crate::exact::{int, rat, BigRat};
use std::fmt;

/// Which of the two dual-Coxeter conventions an orthosymplectic
/// superalgebra carries.
///
/// * `TypeB`: `h^∨(osp(m|2n)) = m − 2n − 2` (the so-like normalization);
/// * `TypeC`: `h^∨(osp(m|2n)) = (2n + 2 − m)/2` (the sp-like normalization).
///
/// The convention belongs to the family in which the algebra appears, not to
/// the algebra itself: `osp(1|2n)` is `TypeB` inside family 1C and `TypeC`
/// inside families 1O and 2O.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OspNorm {
    TypeB,
    TypeC,
}

/// A simple Lie (super)algebra of orthosymplectic type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraDesc {
    /// `so(2n+1)`.
    SoOdd(u32),
    /// `so(2n)`.
    SoEven(u32),
    /// `sp(2n)`.
    Sp(u32),
    /// `osp(m|2n)` with its dual-Coxeter normalization.
    Osp { m: u32, n: u32, norm: OspNorm },
}

impl AlgebraDesc {
    /// Dual Coxeter number in the convention attached to the descriptor.
    pub fn dual_coxeter(&self) -> BigRat {
        match *self {
            AlgebraDesc::SoOdd(n) => int(2 * n as i64 - 1),
            AlgebraDesc::SoEven(n) => int(2 * n as i64 - 2),
            AlgebraDesc::Sp(n) => int(n as i64 + 1),
            AlgebraDesc::Osp { m, n, norm } => {
                let (m, n) = (m as i64, n as i64);
                match norm {
                    OspNorm::TypeB => int(m - 2 * n - 2),
                    OspNorm::TypeC => rat(2 * n + 2 - m, 2),
                }
            }
        }
    }

    /// Superdimension (even dimension minus odd dimension).
    pub fn sdim(&self) -> BigRat {
        let so = |d: i64| d * (d - 1) / 2;
        int(match *self {
            AlgebraDesc::SoOdd(n) => so(2 * n as i64 + 1),
            AlgebraDesc::SoEven(n) => so(2 * n as i64),
            AlgebraDesc::Sp(n) => n as i64 * (2 * n as i64 + 1),
            AlgebraDesc::Osp { m, n, .. } => so(m as i64 - 2 * n as i64),
        })
    }

    /// Total dimension (even plus odd).
    pub fn dim(&self) -> u64 {
        let so = |d: u64| d * d.saturating_sub(1) / 2;
        match *self {
            AlgebraDesc::SoOdd(n) => so(2 * n as u64 + 1),
            AlgebraDesc::SoEven(n) => so(2 * n as u64),
            AlgebraDesc::Sp(n) => n as u64 * (2 * n as u64 + 1),
            AlgebraDesc::Osp { m, n, .. } => {
                let (m, n) = (m as u64, n as u64);
                so(m) + n * (2 * n + 1) + 2 * m * n
            }
        }
    }

    /// Dimension of the standard (defining) representation; for `osp(m|2n)`
    /// this is the total dimension `m + 2n`.
    pub fn standard_dim(&self) -> u32 {
        match *self {
            AlgebraDesc::SoOdd(n) => 2 * n + 1,
            AlgebraDesc::SoEven(n) | AlgebraDesc::Sp(n) => 2 * n,
            AlgebraDesc::Osp { m, n, .. } => m + 2 * n,
        }
    }
}

impl fmt::Display for AlgebraDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlgebraDesc::SoOdd(n) => write!(f, "so({})", 2 * n + 1),
            AlgebraDesc::SoEven(n) => write!(f, "so({})", 2 * n),
            AlgebraDesc::Sp(n) => write!(f, "sp({})", 2 * n),
            AlgebraDesc::Osp { m, n, .. } => write!(f, "osp({}|{})", m, 2 * n),
        }
    }
}

/// `h^∨` of a descriptor; see [`AlgebraDesc::dual_coxeter`].
pub fn dual_coxeter(a: &AlgebraDesc) -> BigRat {
    a.dual_coxeter()
}

/// Superdimension of a descriptor; see [`AlgebraDesc::sdim`].
pub fn sdim(a: &AlgebraDesc) -> BigRat {
    a.sdim()
}
