//! Conformal weights of singular vectors at admissible levels and the
//! minimal strong generating types of the coset families.

mod roots;

pub use roots::{ClassicalType, EpsVector, RootSystemData};

use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat};
use crate::liedata::{Family, HookFamily};
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

/// Which vertex algebra the singular vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingObject {
    /// The universal affine vertex algebra `V^k(g)`.
    Affine,
    /// The principal W-algebra `W^k(g)` (nondegenerate admissible `k`).
    PrincipalW,
}

impl fmt::Display for SingObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingObject::Affine => "affine",
            SingObject::PrincipalW => "principal_w",
        })
    }
}

impl FromStr for SingObject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "affine" | "v" => Ok(SingObject::Affine),
            "principal_w" | "principal" | "w" => Ok(SingObject::PrincipalW),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

fn check_level(n: u32, u: u32, v: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange("rank n must be at least 1".into()));
    }
    if u < 1 || v < 1 {
        return Err(Error::OutOfRange("u and v must be positive".into()));
    }
    if u.gcd(&v) != 1 {
        return Err(Error::OutOfRange(format!("gcd({u}, {v}) must be 1")));
    }
    Ok(())
}

/// The vector `λ̄ = −(v/(v, r^∨))·(u/v)·ᾱ^∨ − (ρ̄, ᾱ^∨)·ᾱ` with
/// `ᾱ = −θ` if `gcd(v, r^∨) = 1` and `ᾱ = −θ_s` otherwise.
pub fn lambda_bar(data: &RootSystemData, u: u32, v: u32) -> EpsVector {
    let g = v.gcd(&data.lacity);
    let alpha = if g == 1 { &data.theta } else { &data.theta_s }.scale(&int(-1));
    let alpha_vee = alpha.coroot();
    let step = int((v / g) as i64);
    let first = alpha_vee.scale(&(-step * rat(u as i64, v as i64)));
    let second = alpha.scale(&-data.rho.dot(&alpha_vee));
    first.add(&second)
}

/// Lowest singular-vector weight from the root-system data:
/// `(v/2u)·λ̄(λ̄ + 2ρ̄)` for the affine algebra, minus `λ̄·ρ̄^∨` for the
/// principal W-algebra, at level `k = −h^∨ + u/v`.
pub fn sing_weight_general(
    kind: ClassicalType,
    object: SingObject,
    n: u32,
    u: u32,
    v: u32,
) -> Result<BigRat> {
    check_level(n, u, v)?;
    sing_weight_general_unchecked(kind, object, n, u, v)
}

/// [`sing_weight_general`] without the coprimality check; the formula
/// itself only needs `n, u, v ≥ 1`.
pub fn sing_weight_general_unchecked(
    kind: ClassicalType,
    object: SingObject,
    n: u32,
    u: u32,
    v: u32,
) -> Result<BigRat> {
    if u < 1 || v < 1 {
        return Err(Error::OutOfRange("u and v must be positive".into()));
    }
    let data = RootSystemData::new(kind, n)?;
    let lam = lambda_bar(&data, u, v);
    let shifted = lam.add(&data.rho.scale(&int(2)));
    let affine = rat(v as i64, 2 * u as i64) * lam.dot(&shifted);
    Ok(match object {
        SingObject::Affine => affine,
        SingObject::PrincipalW => affine - lam.dot(&data.rho_vee),
    })
}

/// The closed forms of the lowest singular-vector weight, split by the
/// parity of `v`.
pub fn sing_weight_closed(
    kind: ClassicalType,
    object: SingObject,
    n: u32,
    u: u32,
    v: u32,
) -> Result<BigRat> {
    check_level(n, u, v)?;
    Ok(sing_weight_closed_unchecked(kind, object, n, u, v))
}

/// [`sing_weight_closed`] evaluated as a polynomial without any checks.
pub fn sing_weight_closed_unchecked(
    kind: ClassicalType,
    object: SingObject,
    n: u32,
    u: u32,
    v: u32,
) -> BigRat {
    let (n, u, v) = (n as i64, u as i64, v as i64);
    let odd = v % 2 == 1;
    match (kind, object, odd) {
        (ClassicalType::Sp, SingObject::Affine, true) => int(v * (u - n)),
        (ClassicalType::Sp, SingObject::Affine, false) => rat(v * (u - 2 * n + 1), 2),
        (ClassicalType::SoOdd, SingObject::Affine, true) => int(v * (u - 2 * n + 2)),
        (ClassicalType::SoOdd, SingObject::Affine, false) => rat(v * (u - 2 * n + 1), 2),
        (ClassicalType::Sp, SingObject::PrincipalW, true) => int((v - 2 * n + 1) * (u - n)),
        (ClassicalType::Sp, SingObject::PrincipalW, false) => {
            int((v / 2 - 2 * n + 2) * (u - 2 * n + 1))
        }
        (ClassicalType::SoOdd, SingObject::PrincipalW, true) => {
            int((v - 2 * n + 1) * (u - 2 * n + 2))
        }
        (ClassicalType::SoOdd, SingObject::PrincipalW, false) => int((v / 2 - n) * (u - 2 * n + 1)),
    }
}

/// The top weight `2N` of the minimal strong generating type
/// `W(2, 4, …, 2N)` of `C^ψ_{iX}(n, m)`, as a polynomial in `n, m` valid for
/// arbitrary integers (shifted parameters occur on triality lines).
pub fn generator_weight_formula(family: Family, n: i64, m: i64) -> i64 {
    match family {
        Family::C1 => 2 * (1 + m) * (1 + n) - 2,
        Family::B2 => 4 * (m + 1) * (n + 1) - 2,
        Family::C2 => 2 * (1 + n) * (1 + m + n) - 2,
        Family::D2 => 2 * (m + 1) * (2 * n + 1) - 2,
        Family::B1 => 2 * (1 + n) * (3 + 2 * m + 2 * n) - 2,
        Family::D1 => 2 * (1 + m + n) * (1 + 2 * n) - 2,
        Family::O1 => 2 * (3 + 2 * m) * (1 + n) - 2,
        Family::O2 => 4 * (1 + n) * (1 + m + n) - 2,
    }
}

/// The largest generator weight of the minimal strong generating type of
/// `C^ψ_{iX}(n, m)` (`n + m ≥ 1`).
pub fn max_generator_weight(fam: &HookFamily) -> Result<u64> {
    let (n, m) = fam.int_params()?;
    if n + m < 1 {
        return Err(Error::OutOfRange(
            "the generating type needs n + m >= 1".into(),
        ));
    }
    Ok(generator_weight_formula(fam.family(), n as i64, m as i64) as u64)
}
