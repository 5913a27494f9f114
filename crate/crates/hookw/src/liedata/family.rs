//! The eight hook-type families and their level dictionaries.

use super::algebra::{AlgebraDesc, OspNorm};
use crate::error::{Error, Result};
use crate::exact::{rf, BigRat, RatFunc, Var};
use num_traits::{Signed, ToPrimitive};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// One of the eight family tags `iX`, `i ∈ {1, 2}`, `X ∈ {B, C, D, O}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    B1,
    C1,
    D1,
    O1,
    B2,
    C2,
    D2,
    O2,
}

/// How the level `ℓ` of the `b`-part depends on `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllRule {
    /// `ℓ = k` (1B, 1D, 2C, 2O).
    K,
    /// `ℓ = −k/2` (1C, 1O).
    MinusHalfK,
    /// `ℓ = −2k` (2B, 2D).
    MinusTwoK,
}

impl EllRule {
    /// Applies the rule to a level `k`.
    pub fn apply(&self, k: &RatFunc) -> RatFunc {
        match self {
            EllRule::K => k.clone(),
            EllRule::MinusHalfK => k.scale(&BigRat::new((-1).into(), 2.into())),
            EllRule::MinusTwoK => k.scale(&BigRat::from_integer((-2).into())),
        }
    }
}

impl Family {
    /// All eight families in canonical order.
    pub const ALL: [Family; 8] = [
        Family::B1,
        Family::C1,
        Family::D1,
        Family::O1,
        Family::B2,
        Family::C2,
        Family::D2,
        Family::O2,
    ];

    /// The serialized tag, e.g. `"2B"`.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::B1 => "1B",
            Family::C1 => "1C",
            Family::D1 => "1D",
            Family::O1 => "1O",
            Family::B2 => "2B",
            Family::C2 => "2C",
            Family::D2 => "2D",
            Family::O2 => "2O",
        }
    }

    /// The index `i ∈ {1, 2}`: `b = so(2m+1)` for `i = 1`, `b = sp(2m)` for `i = 2`.
    pub fn index(&self) -> u8 {
        match self {
            Family::B1 | Family::C1 | Family::D1 | Family::O1 => 1,
            _ => 2,
        }
    }

    /// The rule expressing `ℓ` through `k`.
    pub fn ell_rule(&self) -> EllRule {
        match self {
            Family::B1 | Family::D1 | Family::C2 | Family::O2 => EllRule::K,
            Family::C1 | Family::O1 => EllRule::MinusHalfK,
            Family::B2 | Family::D2 => EllRule::MinusTwoK,
        }
    }

    /// Whether `ρ_a ⊗ ρ_b` is even.
    pub fn parity_even(&self) -> bool {
        matches!(self, Family::B1 | Family::D1 | Family::C2 | Family::O2)
    }

    /// Whether the affine subalgebra `a` is orthogonal (`so(2n)` or `so(2n+1)`).
    pub fn a_is_orthogonal(&self) -> bool {
        matches!(self, Family::B1 | Family::D1 | Family::B2 | Family::D2)
    }

    /// Whether `a = osp(1|2n)`.
    pub fn a_is_osp(&self) -> bool {
        matches!(self, Family::O1 | Family::O2)
    }

    /// Whether the coset is always taken with a `Z₂`-orbifold (for the
    /// generic case `n, m ≥ 1`).
    pub(crate) fn generic_orbifold(&self) -> bool {
        !matches!(self, Family::C1 | Family::C2)
    }

    fn idx(&self) -> usize {
        *self as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Per-family symbolic data in the variables `psi, n, m`.
struct SymbolicTable {
    h_dual: [RatFunc; 8],
    t: [RatFunc; 8],
    closed: [RatFunc; 8],
}

fn table() -> &'static SymbolicTable {
    static T: OnceLock<SymbolicTable> = OnceLock::new();
    T.get_or_init(|| SymbolicTable {
        h_dual: [
            rf("2n + 2m"),
            rf("2m - 2n - 1"),
            rf("2n + 2m - 1"),
            rf("2m - 2n"),
            rf("m - n + 1/2"),
            rf("n + m + 1"),
            rf("m - n + 1"),
            rf("m + n + 1/2"),
        ],
        t: [
            rf("psi - 2n"),
            rf("-psi/2 - n - 1/2"),
            rf("psi - 2n + 1"),
            rf("-psi/2 - n"),
            rf("-2psi - 2n + 2"),
            rf("psi - n - 3/2"),
            rf("-2psi - 2n + 3"),
            rf("psi - n - 1"),
        ],
        // The printed closed-form central charges of the eight cosets.
        closed: [
            rf("-((psi + m psi - m - n - 1)(2m psi - 2m - 2n - 1)(psi + 2m psi - 2m - 2n))/((psi - 1) psi)"),
            rf("-((-m + n + m psi)(1 - 2m + 2n + psi + 2m psi)(-1 - 2m + 2n + 2psi + 2m psi))/((psi - 1) psi)"),
            rf("-((-m - n + m psi)(1 - 2m - 2n + psi + 2m psi)(-1 - 2m - 2n + 2psi + 2m psi))/((psi - 1) psi)"),
            rf("-((-1 - m + n + psi + m psi)(-1 - 2m + 2n + 2m psi)(-2m + 2n + psi + 2m psi))/((psi - 1) psi)"),
            rf("-((-m + n - psi + 2m psi)(1 - 2m + 2n + 4m psi)(-1 - 2m + 2n + 2psi + 4m psi))/(2psi(2psi - 1))"),
            rf("-((-m - n + 2m psi)(-1 - m - n + psi + 2m psi)(-1 - 2m - 2n - 2psi + 4m psi))/(psi(2psi - 1))"),
            rf("-((-m + n + 2m psi)(-1 - m + n + psi + 2m psi)(-1 - 2m + 2n - 2psi + 4m psi))/(psi(2psi - 1))"),
            rf("-((-m - n - psi + 2m psi)(1 - 2m - 2n + 4m psi)(-1 - 2m - 2n + 2psi + 4m psi))/(2psi(2psi - 1))"),
        ],
    })
}

impl Family {
    /// `h^∨_g` as a polynomial in `n, m`.
    pub fn h_dual_symbolic(&self) -> &'static RatFunc {
        &table().h_dual[self.idx()]
    }

    /// The affine-subalgebra level `t` as a polynomial in `psi, n`.
    pub fn t_symbolic(&self) -> &'static RatFunc {
        &table().t[self.idx()]
    }

    /// The closed-form coset central charge as a rational function of `psi, n, m`.
    pub fn central_charge_symbolic(&self) -> &'static RatFunc {
        &table().closed[self.idx()]
    }
}

/// A hook-type family `iX` with parameters `n, m`.
///
/// Only non-negative integer parameters can be constructed; the curve layer
/// handles shifted (half-integral or negative) parameters symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookFamily {
    family: Family,
    n: BigRat,
    m: BigRat,
}

impl HookFamily {
    /// A family with integer parameters `n, m ≥ 0`.
    pub fn new(family: Family, n: u32, m: u32) -> HookFamily {
        HookFamily {
            family,
            n: BigRat::from_integer(n.into()),
            m: BigRat::from_integer(m.into()),
        }
    }

    /// The family tag.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The parameter `n`.
    pub fn n(&self) -> &BigRat {
        &self.n
    }

    /// The parameter `m`.
    pub fn m(&self) -> &BigRat {
        &self.m
    }

    /// `(n, m)` as integers, or [`Error::NonIntegral`].
    pub fn int_params(&self) -> Result<(u32, u32)> {
        let conv = |x: &BigRat| {
            if x.is_integer() && !x.is_negative() {
                x.to_integer().to_u32()
            } else {
                None
            }
        };
        match (conv(&self.n), conv(&self.m)) {
            (Some(n), Some(m)) => Ok((n, m)),
            _ => Err(Error::NonIntegral),
        }
    }

    /// The assignment `n ↦ n, m ↦ m` used to specialize symbolic formulas.
    pub(crate) fn assignment(&self) -> [(Var, BigRat); 2] {
        [(Var::N, self.n.clone()), (Var::M, self.m.clone())]
    }

    /// Specializes a formula in `psi, n, m` to this family's parameters.
    pub(crate) fn specialize(&self, f: &RatFunc) -> RatFunc {
        f.specialize(&self.assignment())
            .expect("family formulas have no poles in n, m")
    }

    /// The ambient algebra `g`.
    pub fn g(&self) -> Result<AlgebraDesc> {
        let (n, m) = self.int_params()?;
        use OspNorm::*;
        Ok(match self.family {
            Family::B1 => AlgebraDesc::SoEven(n + m + 1),
            Family::C1 => AlgebraDesc::Osp {
                m: 2 * m + 1,
                n,
                norm: TypeB,
            },
            Family::D1 => AlgebraDesc::SoOdd(n + m),
            Family::O1 => AlgebraDesc::Osp {
                m: 2 * m + 2,
                n,
                norm: TypeB,
            },
            Family::B2 => AlgebraDesc::Osp {
                m: 2 * n + 1,
                n: m,
                norm: TypeC,
            },
            Family::C2 => AlgebraDesc::Sp(n + m),
            Family::D2 => AlgebraDesc::Osp {
                m: 2 * n,
                n: m,
                norm: TypeC,
            },
            Family::O2 => AlgebraDesc::Osp {
                m: 1,
                n: n + m,
                norm: TypeC,
            },
        })
    }

    /// The affine subalgebra `a` (commuting with the principal part of `b`).
    pub fn a(&self) -> Result<AlgebraDesc> {
        let (n, _) = self.int_params()?;
        Ok(match self.family {
            Family::B1 | Family::B2 => AlgebraDesc::SoOdd(n),
            Family::C1 | Family::C2 => AlgebraDesc::Sp(n),
            Family::D1 | Family::D2 => AlgebraDesc::SoEven(n),
            Family::O1 | Family::O2 => AlgebraDesc::Osp {
                m: 1,
                n,
                norm: OspNorm::TypeC,
            },
        })
    }

    /// The algebra `b` in which the nilpotent is principal.
    pub fn b(&self) -> Result<AlgebraDesc> {
        let (_, m) = self.int_params()?;
        Ok(if self.family.index() == 1 {
            AlgebraDesc::SoOdd(m)
        } else {
            AlgebraDesc::Sp(m)
        })
    }

    /// `d_a = dim ρ_a`.
    pub fn d_a(&self) -> Result<u32> {
        Ok(self.a()?.standard_dim())
    }

    /// `d_b = dim ρ_b`.
    pub fn d_b(&self) -> Result<u32> {
        Ok(self.b()?.standard_dim())
    }

    /// The level dictionary of the family.
    pub fn level_dictionary(&self) -> Result<LevelDictionary> {
        Ok(LevelDictionary {
            h_dual_g: self
                .specialize(self.family.h_dual_symbolic())
                .as_constant()
                .expect("h^∨ is constant in psi"),
            ell_rule: self.family.ell_rule(),
            t_of_psi: self.specialize(self.family.t_symbolic()),
            affine_subalgebra: self.a()?,
        })
    }
}

impl fmt::Display for HookFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, m={})", self.family, self.n, self.m)
    }
}

/// The dictionary between the levels attached to a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDictionary {
    /// `h^∨_g`, so that `ψ = k + h^∨_g`.
    pub h_dual_g: BigRat,
    /// `ℓ` as a function of `k`.
    pub ell_rule: EllRule,
    /// The affine-subalgebra level `t` as a function of `ψ`.
    pub t_of_psi: RatFunc,
    /// The affine subalgebra `a`.
    pub affine_subalgebra: AlgebraDesc,
}

impl LevelDictionary {
    /// `k(ψ) = ψ − h^∨_g`.
    pub fn k_of_psi(&self) -> RatFunc {
        &RatFunc::var(Var::Psi) - &RatFunc::constant(self.h_dual_g.clone())
    }

    /// `ℓ(ψ)`.
    pub fn ell_of_psi(&self) -> RatFunc {
        self.ell_rule.apply(&self.k_of_psi())
    }
}

/// `t(ψ)` of the affine subalgebra, from the explicit per-family formula.
pub fn affine_subalgebra_level(fam: &HookFamily) -> RatFunc {
    fam.specialize(fam.family().t_symbolic())
}

/// `ℓ(ψ) ± (d_b − 1)·f` with `f = 1` for orthogonal `a` and `1/2` otherwise,
/// and the sign `+` exactly when `ρ_a ⊗ ρ_b` is even.
pub fn level_rule_t(fam: &HookFamily) -> Result<RatFunc> {
    let dict = fam.level_dictionary()?;
    let db = fam.d_b()? as i64;
    let mut shift = BigRat::from_integer((db - 1).into());
    if !fam.family().a_is_orthogonal() {
        shift /= BigRat::from_integer(2.into());
    }
    if !fam.family().parity_even() {
        shift = -shift;
    }
    Ok(&dict.ell_of_psi() + &RatFunc::constant(shift))
}

/// Whether the explicit `t(ψ)` agrees with the `ℓ ± (d_b − 1)·f` rule.
pub fn t_matches_level_rule(fam: &HookFamily) -> Result<bool> {
    Ok(level_rule_t(fam)? == affine_subalgebra_level(fam))
}
