//! Central charges: the closed forms, the block-by-block assembly from the
//! quantum Hamiltonian reduction, ghost contributions and generator profiles.

use super::family::{affine_subalgebra_level, Family, HookFamily};
use crate::error::{Error, Result};
use crate::exact::{int, BigRat, RatFunc, Var};
use num_traits::Zero;
use std::fmt;

/// Central charge `c_d = −(d−1)(d²−2d−1)/2` of the ghosts attached to a
/// `d`-dimensional `sl_2`-module.
pub fn ghost_central_charge(d: u32) -> Result<BigRat> {
    if d < 1 {
        return Err(Error::OutOfRange(
            "ghost dimension must be at least 1".into(),
        ));
    }
    let d = d as i64;
    Ok(BigRat::new(
        (-(d - 1) * (d * d - 2 * d - 1)).into(),
        2.into(),
    ))
}

/// The closed-form central charge of the coset `C^ψ_{iX}(n, m)` as a
/// rational function of `ψ`.  The trivial algebra is given charge 0.
pub fn central_charge(fam: &HookFamily) -> RatFunc {
    fam.specialize(fam.family().central_charge_symbolic())
}

/// Central charge of the coset assembled from the reduction blocks:
///
/// ```text
/// c = c_g + c_dilaton + c_prin + ε·count·c_{d_b} − t·sdim(a)/(t + h^∨_a)
/// ```
///
/// with `c_g = k·sdim g/ψ`, `k = ψ − h^∨_g`, `c_prin = 6m² − 8m⁴` and the
/// dilaton term `−k·2m(m+1)(2m+1)` (for `b = so(2m+1)`) or `−k·2m(4m²−1)`
/// (for `b = sp(2m)`).
///
/// The signed count multiplying the ghost charge `c_{d_b}` was calibrated
/// once against the closed forms:
///
/// | family | ε  | count  |
/// |--------|----|--------|
/// | 1B     | +1 | 2n + 1 |
/// | 1C     | −1 | 2n     |
/// | 1D     | +1 | 2n     |
/// | 1O     | −1 | 2n − 1 |
/// | 2B     | −1 | 2n + 1 |
/// | 2C     | +1 | 2n     |
/// | 2D     | −1 | 2n     |
/// | 2O     | +1 | 2n − 1 |
///
/// i.e. `ε = +1` exactly when `ρ_a ⊗ ρ_b` is even, and `count = d_a` except
/// for `a = osp(1|2n)`, where it is the superdimension `d_a − 2`.
pub fn assemble_central_charge(fam: &HookFamily) -> Result<RatFunc> {
    let (n, m) = fam.int_params()?;
    let family = fam.family();
    if n + m < 1 {
        return Err(Error::OutOfRange(format!(
            "{family}(0,0) is not a reduction; its charge is fixed by convention"
        )));
    }
    if family.index() == 2 && m < 1 {
        return Err(Error::OutOfRange(format!(
            "{family}(n,0) is not defined by a reduction (m must be at least 1)"
        )));
    }
    let dict = fam.level_dictionary()?;
    let g = fam.g()?;
    let a = dict.affine_subalgebra;
    let psi = RatFunc::var(Var::Psi);
    let k = dict.k_of_psi();
    let c_g = (&k * &RatFunc::constant(g.sdim())).checked_div(&psi)?;

    let mi = m as i64;
    let dil = if family.index() == 1 {
        2 * mi * (mi + 1) * (2 * mi + 1)
    } else {
        2 * mi * (4 * mi * mi - 1)
    };
    let c_dil = k.scale(&int(-dil));
    let c_prin = int(6 * mi * mi - 8 * mi.pow(4));

    let count = if family.a_is_osp() {
        2 * n as i64 - 1
    } else {
        fam.d_a()? as i64
    };
    let eps = if family.parity_even() { 1 } else { -1 };
    let c_ghost = c_prin + int(eps * count) * ghost_central_charge(fam.d_b()?)?;

    let mut total = &(&c_g + &c_dil) + &RatFunc::constant(c_ghost);
    if !a.sdim().is_zero() {
        let t = affine_subalgebra_level(fam);
        let sug = (&t * &RatFunc::constant(a.sdim()))
            .checked_div(&(&t + &RatFunc::constant(a.dual_coxeter())))?;
        total = &total - &sug;
    }
    Ok(total)
}

/// A strong generating type `W(w_1^{k_1}, w_2^{k_2}, …)` kept as the raw
/// list of (weight, multiplicity) entries in the order they arise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorProfile {
    /// `(weight, multiplicity)` pairs; zero multiplicities are omitted.
    pub entries: Vec<(BigRat, u64)>,
}

impl GeneratorProfile {
    /// The multiset of weights, each repeated according to its multiplicity.
    pub fn weights(&self) -> Vec<BigRat> {
        self.entries
            .iter()
            .flat_map(|(w, k)| std::iter::repeat_n(w.clone(), *k as usize))
            .collect()
    }
}

impl fmt::Display for GeneratorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(w, k)| {
                let w = if w.is_integer() {
                    w.to_string()
                } else {
                    format!("({w})")
                };
                if *k == 1 {
                    w
                } else {
                    format!("{w}^{k}")
                }
            })
            .collect();
        write!(f, "W({})", parts.join(", "))
    }
}

/// The generating type `W(1^{dim a}, 2, 4, …, 2m, ((d_b+1)/2)^{d_a})` of the
/// hook-type W-algebra.  `dim a` is the total (even plus odd) dimension.
pub fn generator_profile(fam: &HookFamily) -> Result<GeneratorProfile> {
    let (_, m) = fam.int_params()?;
    let a = fam.a()?;
    let (da, db) = (fam.d_a()?, fam.d_b()?);
    let mut entries = Vec::new();
    if a.dim() > 0 {
        entries.push((int(1), a.dim()));
    }
    for j in 1..=m {
        entries.push((int(2 * j as i64), 1));
    }
    if da > 0 {
        entries.push((BigRat::new((db as i64 + 1).into(), 2.into()), da as u64));
    }
    Ok(GeneratorProfile { entries })
}

/// Whether `fam` is one of the parameter points where the assembled block
/// formula applies (`n + m ≥ 1`, and `m ≥ 1` for `i = 2`).
pub fn is_reduction_case(family: Family, n: u32, m: u32) -> bool {
    n + m >= 1 && (family.index() == 1 || m >= 1)
}
