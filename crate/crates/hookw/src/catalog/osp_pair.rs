//! Coincidences between two principal W-superalgebra orbifolds
//! `W_k(osp(1|2m))^Z2 ≅ W_ℓ(osp(1|2n))^Z2`.

use crate::curves::{phi_general, CurvePoint, DEGENERATE_CHARGES};
use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat, RatFunc};
use crate::liedata::Family;

/// The common central charge `−(1+2m)(1+2n)(2mn−m−n)/(2(m+n))`.
pub fn osp_osp_central_charge(m: &RatFunc, n: &RatFunc) -> Result<RatFunc> {
    let one = RatFunc::one();
    let two = RatFunc::from_int(2);
    let num = &(&(&one + &(&two * m)) * &(&one + &(&two * n))) * &(&(&(&two * m) * n) - &(m + n));
    let den = &two * &(m + n);
    Ok(-&num.checked_div(&den)?)
}

/// One `(k, ℓ)` pair of the coincidence list and its check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspPairCheck {
    /// Level `k` of `W_k(osp(1|2m))`.
    pub k: BigRat,
    /// Level `ℓ` of `W_ℓ(osp(1|2n))`.
    pub l: BigRat,
    pub left: CurvePoint,
    pub right: CurvePoint,
    /// Both sides agree and their central charge is the displayed one.
    pub pass: bool,
}

/// Report of [`verify_osp_osp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspPairReport {
    pub m: u32,
    pub n: u32,
    /// The predicted central charge.
    pub c: BigRat,
    /// Whether `c` is one of the degenerate charges where the truncation
    /// curves do not separate algebras.
    pub degenerate: bool,
    pub checks: Vec<OspPairCheck>,
}

impl OspPairReport {
    /// Whether every pair passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks the four `(k, ℓ)` pairs, with shifted levels
/// `k + m + ½ ∈ {(m+n)/(2m), m/(2(m+n))}` and
/// `ℓ + n + ½ ∈ {(m+n)/(2n), n/(2(m+n))}`, by comparing `Φ_{2B,0,m}` and
/// `Φ_{2B,0,n}` and the predicted central charge.
pub fn verify_osp_osp(m: u32, n: u32) -> Result<OspPairReport> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfRange("m and n must be at least 1".into()));
    }
    let (mi, ni) = (m as i64, n as i64);
    let c = osp_osp_central_charge(&RatFunc::from_int(mi), &RatFunc::from_int(ni))?
        .as_constant()
        .expect("constant");
    let degenerate = DEGENERATE_CHARGES.iter().any(|&(p, q)| c == rat(p, q));
    let left_curve = phi_general(Family::B2, &RatFunc::zero(), &RatFunc::from_int(mi), None)?;
    let right_curve = phi_general(Family::B2, &RatFunc::zero(), &RatFunc::from_int(ni), None)?;
    let half = rat(1, 2);
    let psis_left = [rat(mi + ni, 2 * mi), rat(mi, 2 * (mi + ni))];
    let psis_right = [rat(mi + ni, 2 * ni), rat(ni, 2 * (mi + ni))];
    let expected = RatFunc::constant(c.clone());
    let mut checks = Vec::new();
    for a in &psis_left {
        for b in &psis_right {
            let left = left_curve.at(a)?;
            let right = right_curve.at(b)?;
            let pass = left == right && left.c == expected;
            checks.push(OspPairCheck {
                k: a - int(mi) - &half,
                l: b - int(ni) - &half,
                left,
                right,
                pass,
            });
        }
    }
    Ok(OspPairReport {
        m,
        n,
        c,
        degenerate,
        checks,
    })
}
