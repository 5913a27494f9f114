//! A tri-state admissibility oracle that only certifies levels covered by a
//! catalogued rationality statement.

use super::witness::WitnessTheorem;
use crate::exact::{int, BigRat};
use crate::liedata::AlgebraDesc;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// Answer of [`is_admissible_nondegenerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// Certified by a catalogued statement at the given parameter value.
    Yes {
        theorem: WitnessTheorem,
        parameter: i64,
    },
    /// Fails a necessary condition (the reason is carried).
    No(String),
    /// Not decided by the catalogue.
    Unknown,
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Yes { theorem, parameter } => {
                write!(f, "yes ({theorem}, parameter {parameter})")
            }
            Admissibility::No(reason) => write!(f, "no ({reason})"),
            Admissibility::Unknown => f.write_str("unknown"),
        }
    }
}

/// A catalogued level family `X(t) = (a·t + b)/(c·t + d)` with `t ≥ min`
/// and a coprimality condition `gcd(g₁(t), g₂(t)) = 1`.
struct LevelForm {
    theorem: WitnessTheorem,
    coeffs: [i64; 4],
    min: i64,
    coprime: fn(i64, i64) -> (i64, i64),
}

impl LevelForm {
    /// The parameter `t` with `X(t) = x`, if it is an admissible integer.
    fn solve(&self, x: &BigRat, rank: i64) -> Option<i64> {
        let [a, b, c, d] = self.coeffs.map(int);
        let den = &c * x - &a;
        if den.is_zero() {
            return None;
        }
        let t = (b - d * x) / den;
        if !t.is_integer() {
            return None;
        }
        let t = i64::try_from(t.to_integer()).ok()?;
        let (g1, g2) = (self.coprime)(t, rank);
        (t >= self.min && g1.gcd(&g2) == 1).then_some(t)
    }
}

fn sp_forms(r: i64) -> Vec<LevelForm> {
    vec![
        // X = (1+2r)/(4t + 4r), t = m.
        LevelForm {
            theorem: WitnessTheorem::OspPrincipalSpA,
            coeffs: [0, 1 + 2 * r, 4, 4 * r],
            min: 1,
            coprime: |t, r| (t + r, 1 + 2 * r),
        },
        // X = (2t + 1 + 2r)/(4r).
        LevelForm {
            theorem: WitnessTheorem::OspPrincipalSpB,
            coeffs: [2, 1 + 2 * r, 0, 4 * r],
            min: 1,
            coprime: |t, r| (r, 1 + 2 * t),
        },
        // X = (2t + 2r + 3)/(2(2r+1)).
        LevelForm {
            theorem: WitnessTheorem::SubregularSp,
            coeffs: [2, 2 * r + 3, 0, 2 * (2 * r + 1)],
            min: 1,
            coprime: |t, r| (t + 1, 2 * r + 1),
        },
        // X = (t + 1 + r)/(2t + 3 + 2r).
        LevelForm {
            theorem: WitnessTheorem::MinimalSp,
            coeffs: [1, 1 + r, 2, 3 + 2 * r],
            min: 0,
            coprime: |t, r| (1 + t + r, 3 + 2 * t + 2 * r),
        },
        // X = (t + 1 + r)/(2t + 1 + 2r).
        LevelForm {
            theorem: WitnessTheorem::CosetSp,
            coeffs: [1, 1 + r, 2, 1 + 2 * r],
            min: 1,
            coprime: |t, r| (1 + t + r, 1 + 2 * t + 2 * r),
        },
    ]
}

fn so_even_forms(r: i64) -> Vec<LevelForm> {
    vec![
        // X = (2r−1)/(2t + 2r − 1).
        LevelForm {
            theorem: WitnessTheorem::OspPrincipalSo,
            coeffs: [0, 2 * r - 1, 2, 2 * r - 1],
            min: 1,
            coprime: |t, r| (2 * r - 1, 2 * t),
        },
        // X = 2r/(2t + 2r + 1).
        LevelForm {
            theorem: WitnessTheorem::SubregularSo,
            coeffs: [0, 2 * r, 2, 2 * r + 1],
            min: 1,
            coprime: |t, r| (r, 2 * t + 1),
        },
    ]
}

/// Whether `W_s(alg)` sits at a nondegenerate admissible level, as far as
/// the catalogue can tell.
///
/// Writing `s + h^∨ = p/q` in lowest terms, the answer is `No` when `p ≤ 0`
/// or `p` is below `h^∨` (for `gcd(q, r^∨) = 1`) resp. `h` (for `r^∨ | q`),
/// since every admissible level satisfies these bounds.  It is `Yes` when
/// `p/q` lies on one of the level families of the catalogued statements for
/// `sp(2r)` and `so(2r)` with the statement's conditions satisfied, and
/// `Unknown` otherwise; odd orthogonal and super algebras are always
/// `Unknown`.
pub fn is_admissible_nondegenerate(alg: &AlgebraDesc, s: &BigRat) -> Admissibility {
    // (rank, lacity r^∨, h^∨, h, level forms)
    let (rank, lacity, hv, h, forms) = match *alg {
        AlgebraDesc::Sp(r) if r >= 1 => {
            let r = r as i64;
            (r, if r == 1 { 1 } else { 2 }, r + 1, 2 * r, sp_forms(r))
        }
        AlgebraDesc::SoEven(r) if r >= 2 => {
            let r = r as i64;
            (r, 1, 2 * r - 2, 2 * r - 2, so_even_forms(r))
        }
        _ => return Admissibility::Unknown,
    };
    let x = s + int(hv);
    let p = x.numer().clone();
    let q = x.denom().clone();
    if !p.is_positive() {
        return Admissibility::No(format!("s + h^v = {x} is not positive"));
    }
    let bound = if q.gcd(&lacity.into()) == 1.into() {
        hv
    } else {
        h
    };
    if p < bound.into() {
        return Admissibility::No(format!("numerator of s + h^v = {x} is below {bound}"));
    }
    for form in forms {
        if let Some(t) = form.solve(&x, rank) {
            return Admissibility::Yes {
                theorem: form.theorem,
                parameter: t,
            };
        }
    }
    Admissibility::Unknown
}
