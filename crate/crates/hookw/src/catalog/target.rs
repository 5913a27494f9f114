//! Target algebras `W_s(sp(2r))`, `W_s(so(2r))^Z2`, `W_s(osp(1|2r))^Z2` and
//! `W_s(so(2r+1))` realized as degenerate members of the coset families.

use crate::curves::{phi_general, TruncationCurve};
use crate::error::{Error, Result};
use crate::exact::{rf, RatFunc, Var};
use crate::liedata::Family;
use std::fmt;
use std::str::FromStr;

/// The kind of principal W-algebra on the right-hand side of a coincidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetKind {
    /// `W_s(sp(2r))`.
    Sp,
    /// `W_s(so(2r))^Z2`.
    SoEven,
    /// `W_s(osp(1|2r))^Z2`.
    Osp,
    /// `W_s(so(2r+1))`.
    SoOdd,
}

impl TargetKind {
    /// The three kinds that occur in the coincidence tables.
    pub const TABLE_KINDS: [TargetKind; 3] = [TargetKind::Sp, TargetKind::SoEven, TargetKind::Osp];

    /// Short machine name.
    pub fn tag(&self) -> &'static str {
        match self {
            TargetKind::Sp => "sp",
            TargetKind::SoEven => "so_even",
            TargetKind::Osp => "osp",
            TargetKind::SoOdd => "so_odd",
        }
    }

    /// The algebra at rank `r`, e.g. `sp(4)` or `osp(1|2)`.
    pub fn algebra_name(&self, r: i64) -> String {
        match self {
            TargetKind::Sp => format!("sp({})", 2 * r),
            TargetKind::SoEven => format!("so({})", 2 * r),
            TargetKind::Osp => format!("osp(1|{})", 2 * r),
            TargetKind::SoOdd => format!("so({})", 2 * r + 1),
        }
    }

    /// Smallest admissible rank.
    pub fn min_rank(&self) -> i64 {
        match self {
            TargetKind::SoEven => 2,
            _ => 1,
        }
    }

    /// The level shift: `s = −shift(r) + ψ'`, i.e. `shift = h^∨` of the target.
    pub fn shift(&self) -> RatFunc {
        match self {
            TargetKind::Sp => rf("r + 1"),
            TargetKind::SoEven => rf("2r - 2"),
            TargetKind::Osp => rf("r + 1/2"),
            TargetKind::SoOdd => rf("2r - 1"),
        }
    }

    /// The family specialization `(family, n = 0, m(r))` realizing the target.
    pub fn specialization(&self) -> (Family, RatFunc) {
        match self {
            TargetKind::Sp => (Family::C2, rf("r")),
            TargetKind::SoEven => (Family::O1, rf("r - 1")),
            TargetKind::Osp => (Family::B2, rf("r")),
            TargetKind::SoOdd => (Family::C1, rf("r")),
        }
    }

    /// The dictionary row for this kind.
    pub fn dictionary(&self) -> TargetDictionary {
        let (family, m) = self.specialization();
        TargetDictionary {
            kind: *self,
            family,
            m_of_r: m,
            psi_of_s: &RatFunc::var(Var::S) + &self.shift(),
        }
    }

    /// The target curve `Φ_target(ψ' = x)`, where `x` may depend on `n, m, r`
    /// and `rank` is the value (or symbol) substituted for `r`.
    pub fn curve_at(&self, rank: &RatFunc, x: &RatFunc) -> Result<TruncationCurve> {
        let (family, m) = self.specialization();
        let m = m.substitute(Var::R, rank)?;
        phi_general(family, &RatFunc::zero(), &m, Some(x))
    }
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TargetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(TargetKind::Sp),
            "so" | "so_even" => Ok(TargetKind::SoEven),
            "osp" => Ok(TargetKind::Osp),
            "so_odd" => Ok(TargetKind::SoOdd),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// How a target algebra is realized inside the families:
/// `W_s(target of rank r) = C^{ψ}_{family}(0, m(r))` with `ψ = ψ(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetDictionary {
    pub kind: TargetKind,
    pub family: Family,
    /// `m` as a function of the rank `r`.
    pub m_of_r: RatFunc,
    /// `ψ` as a function of `s` and `r`.
    pub psi_of_s: RatFunc,
}
