//! Root-system data of `so(2n+1)` and `sp(2n)` in ε-coordinates.
//!
//! The symplectic roots carry factors of `√2`, so vectors are stored as a
//! rational coordinate vector times a power of `√2`.  Within one algebra every
//! vector has the same parity of that power, which keeps all pairings
//! rational.

use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat};
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// The two simple Lie algebras with non-trivial lacing that occur here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalType {
    /// `so(2n+1)`.
    SoOdd,
    /// `sp(2n)`.
    Sp,
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalType::SoOdd => "so_odd",
            ClassicalType::Sp => "sp",
        })
    }
}

impl FromStr for ClassicalType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so_odd" | "so" | "b" => Ok(ClassicalType::SoOdd),
            "sp" | "c" => Ok(ClassicalType::Sp),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// A vector `(√2)^e · Σ xᵢ εᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsVector {
    coords: Vec<BigRat>,
    sqrt2: i32,
}

impl EpsVector {
    /// `(√2)^sqrt2 · Σ coords[i] εᵢ₊₁`.
    pub fn new(coords: Vec<BigRat>, sqrt2: i32) -> EpsVector {
        EpsVector { coords, sqrt2 }
    }

    /// `(√2)^sqrt2 · εᵢ` in an ambient space of dimension `dim` (1-based `i`).
    pub fn unit(dim: usize, i: usize, sqrt2: i32) -> EpsVector {
        let mut coords = vec![BigRat::zero(); dim];
        coords[i - 1] = BigRat::one();
        EpsVector { coords, sqrt2 }
    }

    /// Rational coordinates (before the `√2` factor).
    pub fn coords(&self) -> &[BigRat] {
        &self.coords
    }

    /// The power of `√2` multiplying the coordinates.
    pub fn sqrt2_power(&self) -> i32 {
        self.sqrt2
    }

    /// The same vector rewritten with `√2` power `e` (same parity, `e ≤ self`).
    fn with_power(&self, e: i32) -> EpsVector {
        let diff = self.sqrt2 - e;
        assert!(diff >= 0 && diff % 2 == 0, "incompatible √2 powers");
        let factor = BigRat::from_integer(num_bigint::BigInt::from(2).pow((diff / 2) as u32));
        EpsVector {
            coords: self.coords.iter().map(|x| x * &factor).collect(),
            sqrt2: e,
        }
    }

    /// The Euclidean pairing; both vectors must have the same `√2` parity.
    pub fn dot(&self, other: &EpsVector) -> BigRat {
        let e = self.sqrt2 + other.sqrt2;
        assert!(e % 2 == 0, "pairing of vectors with different √2 parity");
        let raw: BigRat = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum();
        let scale = if e >= 0 {
            BigRat::from_integer(num_bigint::BigInt::from(2).pow((e / 2) as u32))
        } else {
            BigRat::new(1.into(), num_bigint::BigInt::from(2).pow((-e / 2) as u32))
        };
        raw * scale
    }

    /// `c · self`.
    pub fn scale(&self, c: &BigRat) -> EpsVector {
        EpsVector {
            coords: self.coords.iter().map(|x| x * c).collect(),
            sqrt2: self.sqrt2,
        }
    }

    /// `self + other` (same `√2` parity).
    pub fn add(&self, other: &EpsVector) -> EpsVector {
        let e = self.sqrt2.min(other.sqrt2);
        let (a, b) = (self.with_power(e), other.with_power(e));
        EpsVector {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
            sqrt2: e,
        }
    }

    /// The coroot `2α/(α, α)`.
    pub fn coroot(&self) -> EpsVector {
        let norm = self.dot(self);
        self.scale(&(int(2) / norm))
    }
}

impl fmt::Display for EpsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.sqrt2 {
            0 => String::new(),
            1 => "sqrt2*".into(),
            -1 => "sqrt2^-1*".into(),
            e => format!("sqrt2^{e}*"),
        };
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "{prefix}({})", parts.join(", "))
    }
}

/// Root-system data of `so(2n+1)` or `sp(2n)` in the ε-coordinates in which
/// the simple roots are `ε₁−ε₂, …, εₙ₋₁−εₙ, εₙ` (orthogonal case) and
/// `(ε₁−ε₂)/√2, …, (εₙ₋₁−εₙ)/√2, √2εₙ` (symplectic case), so that long
/// roots have squared length 2.
///
/// The Weyl vector and covector follow the coordinate patterns
/// `ρ = ½Σ(2n−2i+1)εᵢ`, `ρ^∨ = Σ(n−i+1)εᵢ` (orthogonal) and
/// `ρ = (1/√2)Σ(n−i+1)εᵢ`, `ρ^∨ = (1/√2)Σ(2n−2i+1)εᵢ` (symplectic).  At rank 1
/// the highest root `ε₁+ε₂` (resp. highest short root `(ε₁+ε₂)/√2`) needs a
/// second coordinate, so the ambient space is padded to dimension 2 and the
/// patterns are continued into it; for rank ≥ 2 no padding occurs and the
/// vectors are the genuine half-sums of positive (co)roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub kind: ClassicalType,
    /// The rank `n`.
    pub rank: u32,
    /// Dimension of the ambient ε-space (`max(n, 2)`).
    pub ambient_dim: usize,
    pub simple_roots: Vec<EpsVector>,
    /// Highest root `θ`.
    pub theta: EpsVector,
    /// Highest short root `θ_s`.
    pub theta_s: EpsVector,
    /// Weyl vector `ρ`.
    pub rho: EpsVector,
    /// Weyl covector `ρ^∨`.
    pub rho_vee: EpsVector,
    /// Lacity `r^∨`.
    pub lacity: u32,
    /// Coxeter number `h`.
    pub coxeter: u32,
    /// Dual Coxeter number `h^∨`.
    pub dual_coxeter: u32,
}

impl RootSystemData {
    /// Data for `so(2n+1)` or `sp(2n)`, `n ≥ 1`.
    pub fn new(kind: ClassicalType, n: u32) -> Result<RootSystemData> {
        if n < 1 {
            return Err(Error::OutOfRange("rank must be at least 1".into()));
        }
        let r = n as usize;
        let dim = r.max(2);
        let ni = n as i64;
        // Coordinates of ε-pattern vectors over the padded range i = 1..dim.
        let pattern = |f: &dyn Fn(i64) -> BigRat| (1..=dim as i64).map(f).collect::<Vec<_>>();
        let e = |i: usize, s: i32| EpsVector::unit(dim, i, s);
        match kind {
            ClassicalType::SoOdd => {
                let mut simple: Vec<EpsVector> = (1..r)
                    .map(|i| e(i, 0).add(&e(i + 1, 0).scale(&int(-1))))
                    .collect();
                simple.push(e(r, 0));
                Ok(RootSystemData {
                    kind,
                    rank: n,
                    ambient_dim: dim,
                    simple_roots: simple,
                    theta: e(1, 0).add(&e(2, 0)),
                    theta_s: e(1, 0),
                    rho: EpsVector::new(pattern(&|i| rat(2 * ni - 2 * i + 1, 2)), 0),
                    rho_vee: EpsVector::new(pattern(&|i| int(ni - i + 1)), 0),
                    lacity: 2,
                    coxeter: 2 * n,
                    dual_coxeter: 2 * n - 1,
                })
            }
            ClassicalType::Sp => {
                let mut simple: Vec<EpsVector> = (1..r)
                    .map(|i| e(i, -1).add(&e(i + 1, -1).scale(&int(-1))))
                    .collect();
                simple.push(e(r, 1));
                Ok(RootSystemData {
                    kind,
                    rank: n,
                    ambient_dim: dim,
                    simple_roots: simple,
                    theta: e(1, 1),
                    theta_s: e(1, -1).add(&e(2, -1)),
                    rho: EpsVector::new(pattern(&|i| int(ni - i + 1)), -1),
                    rho_vee: EpsVector::new(pattern(&|i| int(2 * ni - 2 * i + 1)), -1),
                    lacity: 2,
                    coxeter: 2 * n,
                    dual_coxeter: n + 1,
                })
            }
        }
    }

    /// All positive roots (in the unpadded coordinates `ε₁, …, εₙ`).
    pub fn positive_roots(&self) -> Vec<EpsVector> {
        let r = self.rank as usize;
        let dim = self.ambient_dim;
        let (pair, single) = match self.kind {
            ClassicalType::SoOdd => (0, 0),
            ClassicalType::Sp => (-1, 1),
        };
        let e = |i: usize, s: i32| EpsVector::unit(dim, i, s);
        let mut roots = Vec::new();
        for i in 1..=r {
            for j in i + 1..=r {
                roots.push(e(i, pair).add(&e(j, pair).scale(&int(-1))));
                roots.push(e(i, pair).add(&e(j, pair)));
            }
            roots.push(e(i, single));
        }
        roots
    }

    /// `½ Σ α` over the positive roots.
    pub fn half_sum_positive_roots(&self) -> EpsVector {
        self.half_sum(|a| a.clone())
    }

    /// `½ Σ α^∨` over the positive roots.
    pub fn half_sum_positive_coroots(&self) -> EpsVector {
        self.half_sum(EpsVector::coroot)
    }

    fn half_sum(&self, f: impl Fn(&EpsVector) -> EpsVector) -> EpsVector {
        let roots = self.positive_roots();
        let mut acc = f(&roots[0]).scale(&BigRat::zero());
        for a in &roots {
            acc = acc.add(&f(a));
        }
        acc.scale(&rat(1, 2))
    }

    /// The inner products `((ρ, θ^∨), (ρ^∨, θ), (ρ, θ_s^∨), (ρ^∨, θ_s))`.
    pub fn pairing_table(&self) -> [BigRat; 4] {
        [
            self.rho.dot(&self.theta.coroot()),
            self.rho_vee.dot(&self.theta),
            self.rho.dot(&self.theta_s.coroot()),
            self.rho_vee.dot(&self.theta_s),
        ]
    }
}
