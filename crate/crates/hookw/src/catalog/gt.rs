//! Gelfand–Tsetlin-type factorizations: the chains of coset algebras whose
//! extension recovers an affine algebra, with each factor identified with a
//! principal W-algebra of small rank.

use super::target::TargetKind;
use crate::curves::{phi_general, CurvePoint};
use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat, RatFunc, Var};
use crate::liedata::Family;
use std::fmt;
use std::str::FromStr;

/// The affine algebra being factorized: `L_k(so(2n+1))`, `L_k(sp(2n))` or
/// `L_k(so(2n+2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GtSeries {
    B,
    C,
    D,
}

impl fmt::Display for GtSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GtSeries::B => "B",
            GtSeries::C => "C",
            GtSeries::D => "D",
        })
    }
}

impl FromStr for GtSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "B" => Ok(GtSeries::B),
            "C" => Ok(GtSeries::C),
            "D" => Ok(GtSeries::D),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// The shape of one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GtFactorKind {
    /// The rank-one Heisenberg factor.
    Heisenberg,
    /// `D_k(j)`.
    D(u32),
    /// `E_k(j)`.
    E(u32),
    /// `W_{ℓ_i}(sp(2k)) ⊗ W_{s_i}(sp(2k))` (type C, index `i`).
    SpPair(u32),
}

/// One factor of the chain and its identification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtFactor {
    pub kind: GtFactorKind,
    /// The principal W-algebra kind and rank the factor is identified with.
    pub target: Option<(TargetKind, i64)>,
    /// The levels: `[ℓ_i, s_i]` for type C pairs, `[s]` for `D`/`E` factors,
    /// empty for the Heisenberg factor.
    pub levels: Vec<BigRat>,
}

impl fmt::Display for GtFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |t: &Option<(TargetKind, i64)>| match t {
            Some((kind, r)) => kind.algebra_name(*r),
            None => String::new(),
        };
        match self.kind {
            GtFactorKind::Heisenberg => f.write_str("H"),
            GtFactorKind::D(j) | GtFactorKind::E(j) => {
                let letter = if matches!(self.kind, GtFactorKind::D(_)) {
                    'D'
                } else {
                    'E'
                };
                write!(
                    f,
                    "{letter}({j}) = W_{{{}}}({})",
                    self.levels[0],
                    name(&self.target)
                )
            }
            GtFactorKind::SpPair(i) => {
                let alg = name(&self.target);
                write!(
                    f,
                    "[{i}] W_{{{}}}({alg}) (x) W_{{{}}}({alg})",
                    self.levels[0], self.levels[1]
                )
            }
        }
    }
}

/// The factor list of the series at rank `n` and level `k` (both ≥ 1).
///
/// Type C yields the `n` pairs with
/// `ℓ_i = −(k+1) + (2+n−i+k)/(3+2n−2i+2k)` and
/// `s_i = −(k+1) + (1+n−i+k)/(3+2n−2i+2k)`.  Types B and D yield the chain
/// `H, D(1), E(1), …` ending in `D(n)` (type B) or `E(n)` (type D); for
/// `k = 2r` the factors are `W_s(so(2r))^Z2` with
/// `s_D = −(2r−2) + (2m+2r−2)/(2m+2r−1)`, `s_E = −(2r−2) + (2m+2r−1)/(2m+2r)`,
/// and for `k = 2r+1` they are `W_s(osp(1|2r))^Z2` with
/// `s_D = −(r+½) + (m+r)/(2m+2r−1)`, `s_E = −(r+½) + (m+r)/(2m+2r+1)`.
pub fn gelfand_tsetlin_factors(series: GtSeries, n: u32, k: u32) -> Result<Vec<GtFactor>> {
    if n < 1 || k < 1 {
        return Err(Error::OutOfRange("n and k must be at least 1".into()));
    }
    let (n, k) = (n as i64, k as i64);
    if series == GtSeries::C {
        return Ok((1..=n)
            .map(|i| {
                let den = 3 + 2 * n - 2 * i + 2 * k;
                GtFactor {
                    kind: GtFactorKind::SpPair(i as u32),
                    target: Some((TargetKind::Sp, k)),
                    levels: vec![
                        int(-(k + 1)) + rat(2 + n - i + k, den),
                        int(-(k + 1)) + rat(1 + n - i + k, den),
                    ],
                }
            })
            .collect());
    }
    let mut out = vec![GtFactor {
        kind: GtFactorKind::Heisenberg,
        target: None,
        levels: vec![],
    }];
    let e_count = if series == GtSeries::B { n - 1 } else { n };
    for j in 1..=n {
        out.push(chain_factor(GtFactorKind::D(j as u32), k));
        if j <= e_count {
            out.push(chain_factor(GtFactorKind::E(j as u32), k));
        }
    }
    Ok(out)
}

fn chain_factor(kind: GtFactorKind, k: i64) -> GtFactor {
    let (m, is_d) = match kind {
        GtFactorKind::D(j) => (j as i64, true),
        GtFactorKind::E(j) => (j as i64, false),
        _ => unreachable!("only chain factors"),
    };
    let (target, s) = if k % 2 == 0 {
        let r = k / 2;
        let x = if is_d {
            rat(2 * m + 2 * r - 2, 2 * m + 2 * r - 1)
        } else {
            rat(2 * m + 2 * r - 1, 2 * m + 2 * r)
        };
        ((TargetKind::SoEven, r), int(-(2 * r - 2)) + x)
    } else {
        let r = (k - 1) / 2;
        let x = if is_d {
            rat(m + r, 2 * m + 2 * r - 1)
        } else {
            rat(m + r, 2 * m + 2 * r + 1)
        };
        ((TargetKind::Osp, r), -(int(r) + rat(1, 2)) + x)
    };
    GtFactor {
        kind,
        target: Some(target),
        levels: vec![s],
    }
}

/// For a chain factor at level `k`, compares the coset curve it comes from
/// (`D_k(j)` is `1D(j, 0)` at `ψ = k+2j−1`, `E_k(j)` is `1B(j, 0)` at
/// `ψ = k+2j`) with the curve of its identified W-algebra.
///
/// Returns `None` for factors without a curve on one side (the Heisenberg
/// factor, type C pairs, and targets of rank below the curve's range).
pub fn verify_gt_factor(factor: &GtFactor, k: u32) -> Option<Result<bool>> {
    let k = k as i64;
    let (family, j, psi) = match factor.kind {
        GtFactorKind::D(j) => (Family::D1, j as i64, k + 2 * j as i64 - 1),
        GtFactorKind::E(j) => (Family::B1, j as i64, k + 2 * j as i64),
        _ => return None,
    };
    let (kind, rank) = factor.target?;
    if rank < kind.min_rank() {
        return None;
    }
    let check = || -> Result<bool> {
        let source =
            phi_general(family, &RatFunc::from_int(j), &RatFunc::zero(), None)?.at(&int(psi))?;
        let x = &factor.levels[0] + &kind.shift().eval_at(&[(Var::R, int(rank))])?;
        let t = kind.curve_at(&RatFunc::from_int(rank), &RatFunc::constant(x))?;
        Ok(source
            == CurvePoint {
                c: t.c,
                lambda: t.lambda,
            })
    };
    Some(check())
}
