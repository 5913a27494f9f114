//! The closed variable universe shared by every polynomial in the crate.

use std::fmt;

/// Number of variables in the universe.
pub const NVARS: usize = 7;

/// A variable of the fixed universe `{ψ, ψ', ψ'', n, m, r, s}`.
///
/// The declaration order is the variable order used by the graded
/// lexicographic monomial order: `ψ < ψ' < ψ'' < n < m < r < s`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// The critically shifted level ψ.
    Psi = 0,
    /// A second level parameter ψ' (used for the second curve of an intersection).
    Psi1 = 1,
    /// A third level parameter ψ''.
    Psi2 = 2,
    /// The family parameter n.
    N = 3,
    /// The family parameter m.
    M = 4,
    /// The rank parameter r of a target algebra.
    R = 5,
    /// The level s of a target algebra.
    S = 6,
}

impl Var {
    /// All variables, in increasing order.
    pub const ALL: [Var; NVARS] = [
        Var::Psi,
        Var::Psi1,
        Var::Psi2,
        Var::N,
        Var::M,
        Var::R,
        Var::S,
    ];

    /// Position of the variable in exponent vectors.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Inverse of [`Var::index`].
    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    /// Canonical ASCII name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            Var::Psi => "psi",
            Var::Psi1 => "psi1",
            Var::Psi2 => "psi2",
            Var::N => "n",
            Var::M => "m",
            Var::R => "r",
            Var::S => "s",
        }
    }

    /// Parses a variable name; accepts the ASCII names as well as the
    /// Greek spellings `ψ`, `ψ'`, `ψ''` and `psi'`, `psi''`.
    pub fn from_name(name: &str) -> Option<Var> {
        Some(match name {
            "psi" | "ψ" => Var::Psi,
            "psi1" | "psi'" | "ψ'" | "ψ1" => Var::Psi1,
            "psi2" | "psi''" | "ψ''" | "ψ2" => Var::Psi2,
            "n" => Var::N,
            "m" => Var::M,
            "r" => Var::R,
            "s" => Var::S,
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
