//! Identification of `W^ψ_{iX}(n, m)` and its affine coset, including all
//! degenerate parameter values.

use super::algebra::AlgebraDesc;
use super::family::{affine_subalgebra_level, Family, HookFamily};
use crate::error::Result;
use crate::exact::{BigRat, RatFunc, Var};
use std::fmt;

/// Which kind of object `W^ψ_{iX}(n, m)` is at the given parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// A genuine hook-type reduction `W^k(g, f_b)`.
    Hook,
    /// `f_b` is principal in `g`.
    Principal,
    /// `f_b` is subregular in `g`.
    Subregular,
    /// `f_b` is minimal in `g`.
    Minimal,
    /// `f_b = 0`: an affine vertex (super)algebra.
    Affine,
    /// An affine algebra tensored with free fields (the `m = 0`, `i = 2` cases).
    AffineTimesFreeField,
    /// A free-field algebra or `C` (`n = m = 0`).
    Trivial,
}

impl AlgebraKind {
    /// Lowercase label used in rendered descriptions.
    pub fn label(&self) -> &'static str {
        match self {
            AlgebraKind::Hook => "hook-type",
            AlgebraKind::Principal => "principal",
            AlgebraKind::Subregular => "subregular",
            AlgebraKind::Minimal => "minimal",
            AlgebraKind::Affine => "affine",
            AlgebraKind::AffineTimesFreeField => "affine with free fields",
            AlgebraKind::Trivial => "free field or trivial",
        }
    }
}

/// A structured description of `W^ψ_{iX}(n, m)` and `C^ψ_{iX}(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Description {
    /// The family and parameters.
    pub family: Family,
    pub n: u32,
    pub m: u32,
    /// The kind of the W-algebra at these parameters.
    pub kind: AlgebraKind,
    /// The W-algebra with its level, e.g. `W^{psi - 3}(sp(4))`.
    pub w_algebra: String,
    /// The affine subalgebra whose commutant is taken, if any
    /// (`H(1)` when it is a Heisenberg algebra).
    pub affine_part: Option<String>,
    /// Whether the coset is further restricted to `Z₂`-invariants.
    pub orbifold: bool,
    /// The coset `C^ψ_{iX}(n, m)`.
    pub coset: String,
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.w_algebra, self.kind.label())?;
        if let Some(a) = &self.affine_part {
            write!(f, "; affine part {a}")?;
        }
        write!(f, "; coset {}", self.coset)
    }
}

fn level(alpha: BigRat, beta: BigRat) -> RatFunc {
    &RatFunc::var(Var::Psi).scale(&alpha) + &RatFunc::constant(beta)
}

fn q(p: i64, d: i64) -> BigRat {
    BigRat::new(p.into(), d.into())
}

/// The algebra identification of `W^ψ_{iX}(n, m)` and of its coset.
pub fn describe(fam: &HookFamily) -> Result<Description> {
    let (n, m) = fam.int_params()?;
    let family = fam.family();
    let dict = fam.level_dictionary()?;
    let g = fam.g()?;
    let a = fam.a()?;
    let b = fam.b()?;
    let k = dict.k_of_psi();
    let t = affine_subalgebra_level(fam);
    let (ni, _mi) = (n as i64, m as i64);

    let trivial_name = match family {
        Family::B1 | Family::O1 => "H(1)",
        Family::B2 | Family::O2 => "F(1)",
        _ => "C",
    };

    let (kind, w_algebra) = if n == 0 && m == 0 {
        (AlgebraKind::Trivial, trivial_name.to_string())
    } else if m == 0 {
        if family.index() == 1 {
            (AlgebraKind::Affine, format!("V^{{{k}}}({g})"))
        } else {
            // The tensor-product definitions used when m = 0.
            let text = match family {
                Family::B2 => format!(
                    "V^{{{}}}({a}) ⊗ F({})",
                    level(q(-2, 1), q(1 - 2 * ni, 1)),
                    2 * n + 1
                ),
                Family::C2 => format!("V^{{{}}}({a}) ⊗ S({n})", level(q(1, 1), q(-ni - 1, 1))),
                Family::D2 => format!(
                    "V^{{{}}}({a}) ⊗ F({})",
                    level(q(-2, 1), q(2 - 2 * ni, 1)),
                    2 * n
                ),
                _ => format!(
                    "V^{{{}}}({a}) ⊗ S({n}) ⊗ F(1)",
                    level(q(1, 1), q(-2 * ni - 1, 2))
                ),
            };
            (AlgebraKind::AffineTimesFreeField, text)
        }
    } else if n == 0 || (family == Family::D2 && n == 1) {
        (AlgebraKind::Principal, format!("W^{{{k}}}({g})"))
    } else if family == Family::D1 && n == 1 {
        (AlgebraKind::Subregular, format!("W^{{{k}}}({g}, f_subreg)"))
    } else if family.index() == 2 && m == 1 {
        (AlgebraKind::Minimal, format!("W^{{{k}}}({g}, f_min)"))
    } else {
        (AlgebraKind::Hook, format!("W^{{{k}}}({g}, f_{{{b}}})"))
    };

    let affine_part = if n == 0 {
        None
    } else if a == AlgebraDesc::SoEven(1) && m >= 1 {
        Some("H(1)".to_string())
    } else {
        Some(format!("V^{{{t}}}({a})"))
    };

    let orbifold = if n == 0 && m == 0 {
        matches!(family, Family::B1 | Family::O1 | Family::B2 | Family::O2)
    } else {
        match family {
            Family::D1 | Family::D2 => n >= 1,
            Family::O1 => !(m == 0 && n >= 1),
            f => f.generic_orbifold(),
        }
    };

    let base = match &affine_part {
        Some(a) => format!("Com({a}, {w_algebra})"),
        None => w_algebra.clone(),
    };
    let coset = if orbifold { format!("{base}^Z2") } else { base };

    Ok(Description {
        family,
        n,
        m,
        kind,
        w_algebra,
        affine_part,
        orbifold,
        coset,
    })
}
