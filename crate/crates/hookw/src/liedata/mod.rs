//! Lie (super)algebra bookkeeping for the eight hook-type families:
//! dual Coxeter numbers, superdimensions, level dictionaries, central
//! charges (closed forms and block assembly), generating types and the
//! identification of degenerate cases.

mod algebra;
mod charge;
mod describe;
mod family;

pub use algebra::{dual_coxeter, sdim, AlgebraDesc, OspNorm};
pub use charge::{
    assemble_central_charge, central_charge, generator_profile, ghost_central_charge,
    is_reduction_case, GeneratorProfile,
};
pub use describe::{describe, AlgebraKind, Description};
pub use family::{
    affine_subalgebra_level, level_rule_t, t_matches_level_rule, EllRule, Family, HookFamily,
    LevelDictionary,
};
