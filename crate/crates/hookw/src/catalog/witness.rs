//! Rationality witnesses: family points at which the coset algebra is known
//! (or conjectured) to be lisse and rational, together with the arithmetic
//! conditions that certify them and the partner algebra the proof goes
//! through.

use super::target::TargetKind;
use crate::curves::{phi, CurvePoint};
use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat, ExactError, RatFunc};
use crate::liedata::{Family, HookFamily};
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;
use std::ops::RangeInclusive;

/// The catalogued rationality statements.
///
/// Each variant fixes a family shape, a formula for `ψ` in terms of the
/// family parameters and auxiliary integers, and the certifying conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessTheorem {
    /// `2B(0,m)`, `ψ = (2m−1)/(4(m+r))`, partner `W(sp(2r))`.
    OspPrincipalSpA,
    /// `2B(0,m)`, `ψ = (1+2m)/(2(1+2m+2r))`, partner `W(sp(2r))`.
    OspPrincipalSpB,
    /// `2B(0,m)`, `ψ = m/(2m+2r−1)`, partner `W(so(2r))^Z2`.
    OspPrincipalSo,
    /// `2B(0,1)`, `ψ = p/(2(p+2q))`, partner the `sl(2)`-coset of `osp(1|2)`.
    OspSmallCosetA,
    /// `2B(0,1)`, `ψ = (p+2q)/(2p)`, same partner.
    OspSmallCosetB,
    /// Conjectural: `2B(0,m)`, `ψ = p/(2(p+q))`.
    OspConjecturalA,
    /// Conjectural: `2B(0,m)`, `ψ = (p+q)/(2p)`.
    OspConjecturalB,
    /// `1D(1,m)`, `ψ = (3+2m+2r)/(2m+2)`, partner `W(sp(2r))`.
    SubregularSp,
    /// `1D(1,m)`, `ψ = (2m+2r+1)/(2m+1)`, partner `W(so(2r))^Z2`.
    SubregularSo,
    /// `1D(1,m)`, `ψ = 2(2+m)/(2m+1)`, partner `W(osp(1|2))^Z2`.
    SubregularOspA,
    /// `1D(1,m)`, `ψ = 2m/(2m−1)`, partner `W(osp(1|2))^Z2`.
    SubregularOspB,
    /// Conjectural: `1D(1,m)`, `ψ = 2(m−r+1)/(1+2m−2r)`, partner `W(osp(1|2r))^Z2`.
    SubregularConjectural,
    /// `2D(1,m+1)`, `ψ = (1+m)/(3+2m+2r)`, partner `W(sp(2r))`.
    DualSubregularSp,
    /// `2D(1,m+1)`, `ψ = (2m+1)/(2(2m+2r+1))`, partner `W(so(2r))^Z2`.
    DualSubregularSo,
    /// `2D(1,m+1)`, `ψ = (2m+1)/(4(2+m))`, partner `W(osp(1|2))^Z2`.
    DualSubregularOspA,
    /// `2D(1,m+1)`, `ψ = (2m−1)/(4m)`, partner `W(osp(1|2))^Z2`.
    DualSubregularOspB,
    /// Conjectural: `2D(1,m+1)`, `ψ = (1+2m−2r)/(4(m−r+1))`.
    DualSubregularConjectural,
    /// `2C(n,1)`, `ψ = (3+2n+2r)/2`, partner `W(sp(2r))`.
    MinimalSp,
    /// `1C(n,0)`, `ψ = −2k−2n−1`, partner `W(sp(2n))`.
    AffineOsp,
    /// `2C(n,0)`, `ψ = k+n+1`, partner `W(sp(2k))`.
    CosetSp,
}

use WitnessTheorem as T;

/// Which auxiliary integers a theorem ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AuxShape {
    None,
    R,
    K,
    Pq,
}

impl WitnessTheorem {
    /// Every catalogued statement.
    pub const ALL: [WitnessTheorem; 20] = [
        T::OspPrincipalSpA,
        T::OspPrincipalSpB,
        T::OspPrincipalSo,
        T::OspSmallCosetA,
        T::OspSmallCosetB,
        T::OspConjecturalA,
        T::OspConjecturalB,
        T::SubregularSp,
        T::SubregularSo,
        T::SubregularOspA,
        T::SubregularOspB,
        T::SubregularConjectural,
        T::DualSubregularSp,
        T::DualSubregularSo,
        T::DualSubregularOspA,
        T::DualSubregularOspB,
        T::DualSubregularConjectural,
        T::MinimalSp,
        T::AffineOsp,
        T::CosetSp,
    ];

    /// Stable machine tag.
    pub fn tag(&self) -> &'static str {
        match self {
            T::OspPrincipalSpA => "osp-principal/sp-a",
            T::OspPrincipalSpB => "osp-principal/sp-b",
            T::OspPrincipalSo => "osp-principal/so",
            T::OspSmallCosetA => "osp-principal/osp12-coset-a",
            T::OspSmallCosetB => "osp-principal/osp12-coset-b",
            T::OspConjecturalA => "osp-principal/conjectural-a",
            T::OspConjecturalB => "osp-principal/conjectural-b",
            T::SubregularSp => "subregular-b/sp",
            T::SubregularSo => "subregular-b/so",
            T::SubregularOspA => "subregular-b/osp-a",
            T::SubregularOspB => "subregular-b/osp-b",
            T::SubregularConjectural => "subregular-b/conjectural",
            T::DualSubregularSp => "dual-subregular-b/sp",
            T::DualSubregularSo => "dual-subregular-b/so",
            T::DualSubregularOspA => "dual-subregular-b/osp-a",
            T::DualSubregularOspB => "dual-subregular-b/osp-b",
            T::DualSubregularConjectural => "dual-subregular-b/conjectural",
            T::MinimalSp => "minimal-c/sp",
            T::AffineOsp => "affine-osp/sp",
            T::CosetSp => "coset-c/sp",
        }
    }

    /// Whether the statement is a conjecture rather than a theorem.
    pub fn is_conjectural(&self) -> bool {
        matches!(
            self,
            T::OspConjecturalA
                | T::OspConjecturalB
                | T::SubregularConjectural
                | T::DualSubregularConjectural
        )
    }

    fn aux_shape(&self) -> AuxShape {
        match self {
            T::OspSmallCosetA | T::OspSmallCosetB | T::OspConjecturalA | T::OspConjecturalB => {
                AuxShape::Pq
            }
            T::SubregularOspA
            | T::SubregularOspB
            | T::DualSubregularOspA
            | T::DualSubregularOspB => AuxShape::None,
            T::AffineOsp | T::CosetSp => AuxShape::K,
            _ => AuxShape::R,
        }
    }

    /// The statements attached to a family point, or `NoTheorem`.
    pub fn for_family(fam: &HookFamily) -> Result<Vec<WitnessTheorem>> {
        let (n, m) = fam.int_params()?;
        let list: Vec<WitnessTheorem> = match (fam.family(), n, m) {
            (Family::B2, 0, m) if m >= 1 => {
                let mut v = vec![T::OspPrincipalSpA, T::OspPrincipalSpB, T::OspPrincipalSo];
                if m == 1 {
                    v.extend([T::OspSmallCosetA, T::OspSmallCosetB]);
                }
                v.extend([T::OspConjecturalA, T::OspConjecturalB]);
                v
            }
            (Family::D1, 1, m) if m >= 1 => vec![
                T::SubregularSp,
                T::SubregularSo,
                T::SubregularOspA,
                T::SubregularOspB,
                T::SubregularConjectural,
            ],
            (Family::D2, 1, m) if m >= 2 => vec![
                T::DualSubregularSp,
                T::DualSubregularSo,
                T::DualSubregularOspA,
                T::DualSubregularOspB,
                T::DualSubregularConjectural,
            ],
            (Family::C2, _, 1) => vec![T::MinimalSp],
            (Family::C2, n, 0) if n >= 1 => vec![T::CosetSp],
            (Family::C1, n, 0) if n >= 1 => vec![T::AffineOsp],
            _ => vec![],
        };
        if list.is_empty() {
            return Err(Error::NoTheorem(format!("{}({n}, {m})", fam.family())));
        }
        Ok(list)
    }
}

impl fmt::Display for WitnessTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The auxiliary integers a witness was generated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessAux {
    None,
    /// The target rank `r`.
    R(i64),
    /// The auxiliary level parameter `k`.
    K(i64),
    /// The numerator/denominator pair `(p, q)`.
    Pq(i64, i64),
}

impl fmt::Display for WitnessAux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessAux::None => Ok(()),
            WitnessAux::R(r) => write!(f, "r={r}"),
            WitnessAux::K(k) => write!(f, "k={k}"),
            WitnessAux::Pq(p, q) => write!(f, "p={p}, q={q}"),
        }
    }
}

/// A certifying arithmetic condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `gcd(a, b) = 1`.
    Coprime(i64, i64),
    /// `value ≥ bound`, with a label for the quantity.
    AtLeast {
        what: &'static str,
        value: i64,
        bound: i64,
    },
}

impl Condition {
    /// Evaluates the condition.
    pub fn holds(&self) -> bool {
        match *self {
            Condition::Coprime(a, b) => a.gcd(&b) == 1,
            Condition::AtLeast { value, bound, .. } => value >= bound,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Coprime(a, b) => write!(f, "gcd({a},{b})=1"),
            Condition::AtLeast { what, value, bound } => write!(f, "{what}={value}>={bound}"),
        }
    }
}

/// The algebra a witness is identified with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartnerAlgebra {
    /// A principal W-algebra (or its orbifold) of the given kind and rank.
    W { kind: TargetKind, rank: i64 },
    /// The coset of `osp(1|2)` at level `a` by its `sl(2)` subalgebra.
    OspSl2Coset,
}

/// Partner algebra and its level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partner {
    pub algebra: PartnerAlgebra,
    /// The level `s` of the W-algebra, or `a` for the coset.
    pub s: BigRat,
}

impl Partner {
    /// Human-readable algebra name, e.g. `sp(2)` or `osp(1|2)/sl(2)`.
    pub fn algebra_name(&self) -> String {
        match &self.algebra {
            PartnerAlgebra::W { kind, rank } => kind.algebra_name(*rank),
            PartnerAlgebra::OspSl2Coset => "osp(1|2)/sl(2)".into(),
        }
    }

    /// The partner's point `(c, λ)`, when it is defined by the catalogue.
    ///
    /// Returns `None` for `so(2)` partners, which sit on a degenerate
    /// specialization without a truncation curve.
    pub fn curve_point(&self) -> Option<Result<CurvePoint>> {
        match &self.algebra {
            PartnerAlgebra::W { kind, rank } => {
                if *kind == TargetKind::SoEven && *rank < 2 {
                    return None;
                }
                let r = RatFunc::from_int(*rank);
                let x = &self.s
                    + &kind
                        .shift()
                        .eval_at(&[(crate::exact::Var::R, int(*rank))])
                        .ok()?;
                Some(
                    kind.curve_at(&r, &RatFunc::constant(x))
                        .map(|c| CurvePoint {
                            c: c.c,
                            lambda: c.lambda,
                        }),
                )
            }
            PartnerAlgebra::OspSl2Coset => Some(osp_sl2_coset_point(&self.s)),
        }
    }
}

/// Status of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Certified,
    Conjectural,
}

impl fmt::Display for WitnessStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessStatus::Certified => "certified",
            WitnessStatus::Conjectural => "conjectural",
        })
    }
}

/// A rationality witness: a point `(family, n, m, ψ)` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityWitness {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    pub psi: BigRat,
    pub theorem: WitnessTheorem,
    pub aux: WitnessAux,
    pub conditions: Vec<Condition>,
    pub partner: Option<Partner>,
    pub status: WitnessStatus,
}

impl fmt::Display for RationalityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {}) psi = {} [{}",
            self.family, self.n, self.m, self.psi, self.theorem
        )?;
        if self.aux != WitnessAux::None {
            write!(f, "; {}", self.aux)?;
        }
        write!(f, "; {}]", self.status)?;
        if let Some(p) = &self.partner {
            write!(f, " ~ {} at s = {}", p.algebra_name(), p.s)?;
        }
        Ok(())
    }
}

/// Ranges for the auxiliary integers scanned by [`rational_points`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessBounds {
    /// Range for `r` (target rank) or `k`, whichever the theorem uses.
    pub aux: RangeInclusive<i64>,
    pub p: RangeInclusive<i64>,
    pub q: RangeInclusive<i64>,
    /// Emit conjectural points as well.
    pub include_conjectural: bool,
}

impl Default for WitnessBounds {
    fn default() -> Self {
        WitnessBounds {
            aux: 1..=4,
            p: 1..=8,
            q: 1..=8,
            include_conjectural: false,
        }
    }
}

/// The data a theorem attaches to one choice of auxiliary integers.
struct Candidate {
    psi: BigRat,
    conditions: Vec<Condition>,
    partner: Option<Partner>,
}

fn w_partner(kind: TargetKind, rank: i64, x: BigRat) -> Option<Partner> {
    let shift = kind
        .shift()
        .eval_at(&[(crate::exact::Var::R, int(rank))])
        .expect("shift is a polynomial");
    Some(Partner {
        algebra: PartnerAlgebra::W { kind, rank },
        s: x - shift,
    })
}

fn q(p: i64, d: i64) -> Option<BigRat> {
    (d != 0).then(|| rat(p, d))
}

fn at_least(what: &'static str, value: i64, bound: i64) -> Condition {
    Condition::AtLeast { what, value, bound }
}

/// Evaluates a theorem at the family parameters `(n, m)` and auxiliary
/// integers; `None` when the auxiliary data do not fit the theorem's shape or
/// hit a pole.
fn candidate(th: WitnessTheorem, n: i64, m: i64, aux: WitnessAux) -> Option<Candidate> {
    use TargetKind::{Osp, SoEven, Sp};
    let c = |psi: Option<BigRat>, conditions: Vec<Condition>, partner: Option<Partner>| {
        psi.map(|psi| Candidate {
            psi,
            conditions,
            partner,
        })
    };
    match (th, aux) {
        (T::OspPrincipalSpA, WitnessAux::R(r)) => c(
            q(2 * m - 1, 4 * (m + r)),
            vec![Condition::Coprime(m + r, 1 + 2 * r)],
            w_partner(Sp, r, q(1 + 2 * r, 4 * (m + r))?),
        ),
        (T::OspPrincipalSpB, WitnessAux::R(r)) => c(
            q(1 + 2 * m, 2 * (1 + 2 * m + 2 * r)),
            vec![Condition::Coprime(r, 1 + 2 * m)],
            w_partner(Sp, r, q(1 + 2 * m + 2 * r, 4 * r)?),
        ),
        (T::OspPrincipalSo, WitnessAux::R(r)) => c(
            q(m, 2 * m + 2 * r - 1),
            vec![Condition::Coprime(2 * r - 1, 2 * m)],
            w_partner(SoEven, r, q(2 * r - 1, 2 * m + 2 * r - 1)?),
        ),
        (T::OspSmallCosetA | T::OspSmallCosetB, WitnessAux::Pq(p, qq)) => {
            let psi = if th == T::OspSmallCosetA {
                q(p, 2 * (p + 2 * qq))
            } else {
                q(p + 2 * qq, 2 * p)
            };
            let a = int(-2) + q(p, qq)?;
            c(
                psi,
                vec![Condition::Coprime(p, qq), at_least("p", p, 2)],
                Some(Partner {
                    algebra: PartnerAlgebra::OspSl2Coset,
                    s: a,
                }),
            )
        }
        (T::OspConjecturalA | T::OspConjecturalB, WitnessAux::Pq(p, qq)) => {
            let psi = if th == T::OspConjecturalA {
                q(p, 2 * (p + qq))
            } else {
                q(p + qq, 2 * p)
            };
            let bound = if qq % 2 == 0 { 2 * m } else { 2 * m - 1 };
            c(
                psi,
                vec![Condition::Coprime(p, qq), at_least("p", p, bound)],
                None,
            )
        }
        (T::SubregularSp | T::DualSubregularSp, WitnessAux::R(r)) => {
            let psi = if th == T::SubregularSp {
                q(3 + 2 * m + 2 * r, 2 * m + 2)
            } else {
                q(1 + m, 3 + 2 * m + 2 * r)
            };
            c(
                psi,
                vec![Condition::Coprime(m + 1, 2 * r + 1)],
                w_partner(Sp, r, q(2 * m + 2 * r + 3, 2 * (2 * r + 1))?),
            )
        }
        (T::SubregularSo | T::DualSubregularSo, WitnessAux::R(r)) => {
            let psi = if th == T::SubregularSo {
                q(2 * m + 2 * r + 1, 2 * m + 1)
            } else {
                q(2 * m + 1, 2 * (2 * m + 2 * r + 1))
            };
            c(
                psi,
                vec![Condition::Coprime(r, 2 * m + 1)],
                w_partner(SoEven, r, q(2 * r, 2 * m + 2 * r + 1)?),
            )
        }
        (T::SubregularOspA | T::DualSubregularOspA, WitnessAux::None) => {
            let psi = if th == T::SubregularOspA {
                q(2 * (2 + m), 2 * m + 1)
            } else {
                q(2 * m + 1, 4 * (2 + m))
            };
            c(
                psi,
                vec![at_least("m", m, 1)],
                w_partner(Osp, 1, q(2 + m, 3)?),
            )
        }
        (T::SubregularOspB | T::DualSubregularOspB, WitnessAux::None) => {
            let psi = if th == T::SubregularOspB {
                q(2 * m, 2 * m - 1)
            } else {
                q(2 * m - 1, 4 * m)
            };
            c(
                psi,
                vec![at_least("m", m, 1)],
                w_partner(Osp, 1, q(m, 2 * m - 1)?),
            )
        }
        (T::SubregularConjectural | T::DualSubregularConjectural, WitnessAux::R(r)) => {
            let psi = if th == T::SubregularConjectural {
                q(2 * (m - r + 1), 1 + 2 * m - 2 * r)
            } else {
                q(1 + 2 * m - 2 * r, 4 * (m - r + 1))
            };
            c(
                psi,
                vec![at_least("m", m, 2 * r - 1)],
                w_partner(Osp, r, q(m + 1 - r, 2 * m + 1 - 2 * r)?),
            )
        }
        (T::MinimalSp, WitnessAux::R(r)) => c(
            q(3 + 2 * n + 2 * r, 2),
            vec![Condition::Coprime(1 + n + r, 3 + 2 * n + 2 * r)],
            w_partner(Sp, r, q(1 + n + r, 3 + 2 * n + 2 * r)?),
        ),
        (T::AffineOsp, WitnessAux::K(k)) => c(
            Some(int(-2 * k - 2 * n - 1)),
            vec![Condition::Coprime(1 + k + n, 1 + 2 * k + 2 * n)],
            w_partner(Sp, n, q(1 + k + n, 1 + 2 * k + 2 * n)?),
        ),
        (T::CosetSp, WitnessAux::K(k)) => c(
            Some(int(k + n + 1)),
            vec![Condition::Coprime(1 + n + k, 1 + 2 * n + 2 * k)],
            w_partner(Sp, k, q(1 + n + k, 1 + 2 * n + 2 * k)?),
        ),
        _ => None,
    }
}

/// The family parameters the theorem formulas are written in: for the
/// `2D(1, m+1)` statements the formula variable is `m` = family `m` − 1.
fn formula_params(th: WitnessTheorem, n: u32, m: u32) -> (i64, i64) {
    let shift = matches!(
        th,
        T::DualSubregularSp
            | T::DualSubregularSo
            | T::DualSubregularOspA
            | T::DualSubregularOspB
            | T::DualSubregularConjectural
    );
    (n as i64, m as i64 - shift as i64)
}

fn assemble(fam: &HookFamily, th: WitnessTheorem, aux: WitnessAux) -> Option<RationalityWitness> {
    let (n, m) = fam.int_params().ok()?;
    let (fn_, fm) = formula_params(th, n, m);
    let cand = candidate(th, fn_, fm, aux)?;
    Some(RationalityWitness {
        family: fam.family(),
        n,
        m,
        psi: cand.psi,
        theorem: th,
        aux,
        conditions: cand.conditions,
        partner: cand.partner,
        status: if th.is_conjectural() {
            WitnessStatus::Conjectural
        } else {
            WitnessStatus::Certified
        },
    })
}

/// Enumerates the witnesses on a family point within the given bounds.
///
/// Only points whose conditions all hold are returned; conjectural points
/// appear only when `bounds.include_conjectural` is set.
pub fn rational_points(
    fam: &HookFamily,
    bounds: &WitnessBounds,
) -> Result<Vec<RationalityWitness>> {
    let theorems = WitnessTheorem::for_family(fam)?;
    let mut out = Vec::new();
    for th in theorems {
        if th.is_conjectural() && !bounds.include_conjectural {
            continue;
        }
        let auxes: Vec<WitnessAux> = match th.aux_shape() {
            AuxShape::None => vec![WitnessAux::None],
            AuxShape::R => bounds.aux.clone().map(WitnessAux::R).collect(),
            AuxShape::K => bounds.aux.clone().map(WitnessAux::K).collect(),
            AuxShape::Pq => bounds
                .p
                .clone()
                .flat_map(|p| bounds.q.clone().map(move |q| WitnessAux::Pq(p, q)))
                .collect(),
        };
        for aux in auxes {
            if let WitnessAux::R(x) | WitnessAux::K(x) = aux {
                if x < 1 {
                    continue;
                }
            }
            if let WitnessAux::Pq(p, q) = aux {
                if p < 1 || q < 1 {
                    continue;
                }
            }
            if let Some(w) = assemble(fam, th, aux) {
                if w.conditions.iter().all(Condition::holds) {
                    out.push(w);
                }
            }
        }
    }
    Ok(out)
}

/// Outcome of re-checking a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    /// `ψ`, conditions and partner agree with a fresh evaluation of the theorem.
    pub formula_matches: bool,
    /// Every condition holds.
    pub conditions_hold: bool,
    /// The family curve at `ψ` meets the partner's point; `None` when the
    /// partner has no catalogued curve or either side has a pole there.
    pub curve_matches: Option<bool>,
}

impl WitnessCheck {
    /// Whether every performed check succeeded.
    pub fn ok(&self) -> bool {
        self.formula_matches && self.conditions_hold && self.curve_matches != Some(false)
    }
}

/// Re-derives a witness from its theorem and auxiliary data, rechecks its
/// conditions and compares the family curve with the partner algebra.
pub fn verify_witness(w: &RationalityWitness) -> Result<WitnessCheck> {
    let fam = HookFamily::new(w.family, w.n, w.m);
    let fresh = assemble(&fam, w.theorem, w.aux);
    let formula_matches = match &fresh {
        Some(f) => f == w,
        None => false,
    };
    let conditions_hold = w.conditions.iter().all(Condition::holds);
    let curve_matches = match w.partner.as_ref().and_then(Partner::curve_point) {
        None => None,
        Some(target) => match (phi(&fam)?.at(&w.psi), target) {
            (Ok(source), Ok(target)) => Some(source == target),
            (Err(e), _) | (_, Err(e)) if is_pole(&e) => None,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        },
    };
    Ok(WitnessCheck {
        formula_matches,
        conditions_hold,
        curve_matches,
    })
}

fn is_pole(e: &Error) -> bool {
    matches!(
        e,
        Error::Exact(ExactError::Pole) | Error::Exact(ExactError::ZeroDenominator)
    )
}

/// `(c, λ)` of the `sl(2)`-coset of `osp(1|2)` at level `a`.
pub fn osp_sl2_coset_point(a: &BigRat) -> Result<CurvePoint> {
    let two = int(2);
    let a2 = a * a;
    let a3 = &a2 * a;
    let a4 = &a3 * a;
    let c_den = &two * (a + &two) * (a + int(4));
    let lam_den = int(7)
        * (a - &two)
        * (a + int(8))
        * (int(68) + int(42) * a + int(7) * &a2)
        * (int(352) + int(354) * a + int(59) * &a2);
    if c_den.is_zero() || lam_den.is_zero() {
        return Err(ExactError::ZeroDenominator.into());
    }
    let c = int(3) * a * (int(6) + a) / c_den;
    let lambda = -(&two * (a + &two) * (a + int(4)))
        * (int(-5248) - int(4488) * a - int(352) * &a2 + int(132) * &a3 + int(11) * &a4)
        / lam_den;
    Ok(CurvePoint {
        c: RatFunc::constant(c),
        lambda: RatFunc::constant(lambda),
    })
}
