//! Truncation curves `ψ ↦ (c(ψ), λ(ψ))` of the eight coset families.
//!
//! Everything is derived from the explicit two-parameter curve of family 2B:
//! the other seven families are obtained by one exact substitution each
//! (half-integer shifts of `n, m` combined with a Möbius map of `ψ`).  The
//! module also verifies the triality identities, reproduces the printed
//! intersection point with the type-C principal curves, and discovers rational
//! intersection points of two curves by resultant elimination.

mod appendix;
mod intersect;

pub use intersect::{intersect, Intersection, IntersectionPoint, DEGENERATE_CHARGES};

use crate::error::{Error, Result};
use crate::exact::{rf, BigRat, MultiPoly, RatFunc, Var};
use crate::liedata::{Family, HookFamily};
use std::fmt;
use std::sync::OnceLock;

/// A truncation curve: a pair of rational functions of `ψ`, possibly still
/// depending on residual symbols `n, m, r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationCurve {
    /// The central charge `c(ψ)`.
    pub c: RatFunc,
    /// The self-coupling `λ(ψ)`.
    pub lambda: RatFunc,
    /// Where the curve came from, e.g. `"2B(n=1, m=2)"`.
    pub provenance: String,
}

impl TruncationCurve {
    /// Symbols other than `ψ` that the curve still depends on.
    pub fn residual_symbols(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .c
            .vars()
            .into_iter()
            .chain(self.lambda.vars())
            .filter(|&v| v != Var::Psi)
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// The point of the curve at a rational `ψ` (pole errors are reported).
    pub fn at(&self, psi: &BigRat) -> Result<CurvePoint> {
        let subs = [(Var::Psi, psi.clone())];
        Ok(CurvePoint {
            c: self.c.specialize(&subs)?,
            lambda: self.lambda.specialize(&subs)?,
        })
    }

    /// The reparametrized curve `ψ ↦ (c(g(ψ)), λ(g(ψ)))`.
    pub fn reparametrize(&self, g: &RatFunc) -> Result<TruncationCurve> {
        Ok(TruncationCurve {
            c: self.c.substitute(Var::Psi, g)?,
            lambda: self.lambda.substitute(Var::Psi, g)?,
            provenance: format!("{} at psi -> {}", self.provenance, g),
        })
    }
}

impl fmt::Display for TruncationCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: c = {}, lambda = {}",
            self.provenance, self.c, self.lambda
        )
    }
}

/// A point `(c, λ)`, numeric or depending on residual symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub c: RatFunc,
    pub lambda: RatFunc,
}

/// The 2B curve as a rational function of `psi, n, m`.
struct Template {
    c: RatFunc,
    lambda: RatFunc,
}

fn template() -> &'static Template {
    static T: OnceLock<Template> = OnceLock::new();
    T.get_or_init(|| {
        let f = rf(appendix::CURVE_F);
        let g = rf(appendix::CURVE_G);
        let h = rf(appendix::CURVE_H);
        let num = &rf("-2psi(2psi - 1)") * &f;
        let den =
            &(&rf("7(-m + n + psi + 2m psi)(-1 - 2m + 2n + 4m psi)(1 - 2m + 2n - 2psi + 4m psi)")
                * &g)
                * &h;
        Template {
            c: Family::B2.central_charge_symbolic().clone(),
            lambda: num.checked_div(&den).expect("nonzero denominator"),
        }
    })
}

/// The explicit 2B curve as a trivariate object in `psi, n, m`.
pub fn phi_2b_template() -> TruncationCurve {
    let t = template();
    TruncationCurve {
        c: t.c.clone(),
        lambda: t.lambda.clone(),
        provenance: "2B(n, m)".into(),
    }
}

/// The polynomials `f, g, h` of the 2B curve, in `psi, n, m`.
pub fn phi_2b_factors() -> [MultiPoly; 3] {
    [
        rf(appendix::CURVE_F).num().clone(),
        rf(appendix::CURVE_G).num().clone(),
        rf(appendix::CURVE_H).num().clone(),
    ]
}

/// Substitutes `n := n', m := m', ψ := ψ'` into the 2B curve.
fn from_template(
    n: &RatFunc,
    m: &RatFunc,
    psi: &RatFunc,
    provenance: String,
) -> Result<TruncationCurve> {
    let t = template();
    let subs = [
        (Var::N, n.clone()),
        (Var::M, m.clone()),
        (Var::Psi, psi.clone()),
    ];
    Ok(TruncationCurve {
        c: t.c.substitute_many(&subs)?,
        lambda: t.lambda.substitute_many(&subs)?,
        provenance,
    })
}

/// `Φ_{2B,n,m}(ψ)` for arbitrary (possibly symbolic or half-integral) `n, m`.
pub fn phi_2b(n: &RatFunc, m: &RatFunc) -> Result<TruncationCurve> {
    from_template(n, m, &RatFunc::var(Var::Psi), format!("2B(n={n}, m={m})"))
}

/// The canonical derivation route of a family from the 2B curve: the
/// parameters `(n', m')` and the map `ψ ↦ ψ'` with
/// `Φ_{iX,n,m}(ψ) = Φ_{2B,n',m'}(ψ')`.
///
/// | family | n'      | m'          | ψ'       |
/// |--------|---------|-------------|----------|
/// | 2B     | n       | m           | ψ        |
/// | 1O     | n       | m + 1/2     | ψ/2      |
/// | 2D     | n − 1/2 | m           | ψ        |
/// | 1C     | n + 1/2 | m + 1/2     | ψ/2      |
/// | 1B     | n       | m + n + 1/2 | 1/(2ψ)   |
/// | 1D     | n − 1/2 | m + n       | 1/(2ψ)   |
/// | 2C     | n + 1/2 | m + n + 1/2 | 1/(4ψ)   |
/// | 2O     | n       | m + n       | 1/(4ψ)   |
///
/// The first four rows are the half-integer relations; the last four
/// compose them with the Möbius maps of the triality identities.
pub fn route(family: Family, n: &RatFunc, m: &RatFunc) -> (RatFunc, RatFunc, RatFunc) {
    let half = RatFunc::frac(1, 2);
    let plus_half = |x: &RatFunc| x + &half;
    let minus_half = |x: &RatFunc| x - &half;
    let psi = RatFunc::var(Var::Psi);
    let inv = |k: i64| rf(&format!("1/({k} psi)"));
    let sum = n + m;
    match family {
        Family::B2 => (n.clone(), m.clone(), psi),
        Family::O1 => (
            n.clone(),
            plus_half(m),
            psi.scale(&BigRat::new(1.into(), 2.into())),
        ),
        Family::D2 => (minus_half(n), m.clone(), psi),
        Family::C1 => (
            plus_half(n),
            plus_half(m),
            psi.scale(&BigRat::new(1.into(), 2.into())),
        ),
        Family::B1 => (n.clone(), plus_half(&sum), inv(2)),
        Family::D1 => (minus_half(n), sum, inv(2)),
        Family::C2 => (plus_half(n), plus_half(&sum), inv(4)),
        Family::O2 => (n.clone(), sum, inv(4)),
    }
}

/// `Φ_{iX,n,m}(ψ)` for arbitrary (possibly symbolic) `n, m`, optionally
/// precomposed with a map `ψ ↦ outer(ψ)`; computed as a single substitution
/// into the 2B curve.
pub fn phi_general(
    family: Family,
    n: &RatFunc,
    m: &RatFunc,
    outer: Option<&RatFunc>,
) -> Result<TruncationCurve> {
    let (n2, m2, mut psi2) = route(family, n, m);
    let mut provenance = format!("{family}(n={n}, m={m})");
    if let Some(g) = outer {
        psi2 = psi2.substitute(Var::Psi, g)?;
        provenance = format!("{provenance} at psi -> {g}");
    }
    from_template(&n2, &m2, &psi2, provenance)
}

/// `Φ_{iX,n,m}(ψ)` with `n, m` left as the symbols `n`, `m`.
pub fn phi_symbolic(family: Family) -> Result<TruncationCurve> {
    phi_general(family, &RatFunc::var(Var::N), &RatFunc::var(Var::M), None)
}

/// `Φ_{iX,n,m}(ψ)` for a concrete family.
///
/// For the three degenerate points `2D(1,0)`, `1O(0,0)` and `1B(0,0)` the
/// central charge is identically 1 and `λ` is undefined; these report a
/// zero-denominator error.
pub fn phi(fam: &HookFamily) -> Result<TruncationCurve> {
    let n = RatFunc::constant(fam.n().clone());
    let m = RatFunc::constant(fam.m().clone());
    let mut curve = phi_general(fam.family(), &n, &m, None)?;
    curve.provenance = format!("{}(n={}, m={})", fam.family(), fam.n(), fam.m());
    Ok(curve)
}

// ---------------------------------------------------------------------------
// Triality identities.

/// One member `Φ_{X,n',m'}(σ(ψ))` of a triality line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityMember {
    pub family: Family,
    pub n: RatFunc,
    pub m: RatFunc,
    /// The substitution `σ(ψ)`.
    pub psi: RatFunc,
}

impl fmt::Display for TrialityMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Phi_{}({}, {})({})",
            self.family, self.n, self.m, self.psi
        )
    }
}

/// The four triality lines at `(n, m)`, each a list of three members that
/// must define the same curve.
pub fn triality_lines(n: &RatFunc, m: &RatFunc) -> Vec<[TrialityMember; 3]> {
    let psi = RatFunc::var(Var::Psi);
    let one = RatFunc::one();
    let d = m - n;
    let mem = |family, n: &RatFunc, m: &RatFunc, psi: &str| TrialityMember {
        family,
        n: n.clone(),
        m: m.clone(),
        psi: rf(psi),
    };
    let id = |family, n: &RatFunc, m: &RatFunc| TrialityMember {
        family,
        n: n.clone(),
        m: m.clone(),
        psi: psi.clone(),
    };
    vec![
        [
            id(Family::B2, n, m),
            mem(Family::O2, n, &d, "1/(4psi)"),
            mem(Family::B2, m, n, "psi/(2psi - 1)"),
        ],
        [
            id(Family::C1, n, m),
            mem(Family::C2, n, &d, "1/(2psi)"),
            mem(Family::C1, m, n, "psi/(psi - 1)"),
        ],
        [
            id(Family::D2, n, m),
            mem(Family::D1, n, &d, "1/(2psi)"),
            mem(Family::O1, m, &(n - &one), "2psi/(2psi - 1)"),
        ],
        [
            id(Family::O1, n, m),
            mem(Family::B1, n, &d, "1/psi"),
            mem(Family::D2, &(m + &one), n, "psi/(2(psi - 1))"),
        ],
    ]
}

/// The outcome of one identity `Φ_A = Φ_B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    /// Which triality line (1–4).
    pub line: u8,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    /// `c_lhs − c_rhs` when the identity fails.
    pub c_difference: Option<RatFunc>,
    /// `λ_lhs − λ_rhs` when the identity fails.
    pub lambda_difference: Option<RatFunc>,
}

/// Pass/fail results for all eight identities at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityReport {
    pub n: RatFunc,
    pub m: RatFunc,
    pub checks: Vec<IdentityCheck>,
}

impl TrialityReport {
    /// Whether every identity holds.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates a triality member to a curve (the default evaluator).
pub fn member_curve(mem: &TrialityMember) -> Result<TruncationCurve> {
    phi_general(mem.family, &mem.n, &mem.m, Some(&mem.psi))
}

/// Verifies the triality identities using a caller-supplied curve evaluator
/// (used to run negative controls against perturbed curves).
pub fn verify_trialities_with(
    n: &RatFunc,
    m: &RatFunc,
    curve: &dyn Fn(&TrialityMember) -> Result<TruncationCurve>,
) -> Result<TrialityReport> {
    let mut checks = Vec::new();
    for (i, line) in triality_lines(n, m).iter().enumerate() {
        let a = curve(&line[0])?;
        for other in &line[1..] {
            let b = curve(other)?;
            let dc = &a.c - &b.c;
            let dl = &a.lambda - &b.lambda;
            let holds = dc.is_zero() && dl.is_zero();
            checks.push(IdentityCheck {
                line: i as u8 + 1,
                lhs: line[0].to_string(),
                rhs: other.to_string(),
                holds,
                c_difference: (!holds).then_some(dc),
                lambda_difference: (!holds).then_some(dl),
            });
        }
    }
    Ok(TrialityReport {
        n: n.clone(),
        m: m.clone(),
        checks,
    })
}

/// Verifies the eight triality identities at integers `m ≥ n ≥ 0`, `m + n ≥ 1`.
pub fn verify_trialities(n: u32, m: u32) -> Result<TrialityReport> {
    if m < n || n + m < 1 {
        return Err(Error::OutOfRange(format!(
            "trialities need m >= n >= 0 and m + n >= 1, got n={n}, m={m}"
        )));
    }
    verify_trialities_with(
        &RatFunc::from_int(n as i64),
        &RatFunc::from_int(m as i64),
        &member_curve,
    )
}

/// Verifies the triality identities with `n, m` left symbolic.
pub fn verify_trialities_symbolic() -> Result<TrialityReport> {
    verify_trialities_with(&RatFunc::var(Var::N), &RatFunc::var(Var::M), &member_curve)
}

// ---------------------------------------------------------------------------
// The printed intersection point with the type-C principal curves.

/// The printed point together with the curve evaluated at `ψ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownPoint {
    /// The printed `(c, λ)`.
    pub point: CurvePoint,
    /// `ψ* = (1 + 2m − 2n)/(2(1 + 2m + 2r))`.
    pub psi_star: RatFunc,
    /// `Φ_{2B,n,m}(ψ*)`.
    pub curve_value: CurvePoint,
    /// Whether the two agree exactly.
    pub consistent: bool,
}

struct PointTemplate {
    c: RatFunc,
    lambda: RatFunc,
    psi_star: RatFunc,
}

fn point_template() -> &'static PointTemplate {
    static T: OnceLock<PointTemplate> = OnceLock::new();
    T.get_or_init(|| {
        let f = rf(appendix::POINT_F);
        let g = rf(appendix::POINT_G);
        let h = rf(appendix::POINT_H);
        let num = &rf("-2(n + r)(1 + 2m + 2r)") * &f;
        let den = &(&rf("7(1 + 2r)(2n + r - 2m r + 2n r)(1 + 2m - 4m r + 4n r)") * &g) * &h;
        PointTemplate {
            c: rf("-r(-1 - 2m + 4n - 4m r + 4n r)(1 + 2m + 2n + 2r - 4m r + 4n r)/(2(n + r)(1 + 2m + 2r))"),
            lambda: num.checked_div(&den).expect("nonzero denominator"),
            psi_star: rf("(1 + 2m - 2n)/(2(1 + 2m + 2r))"),
        }
    })
}

/// The printed intersection point of `Φ_{2B,n,m}` with the principal
/// `sp(2r)` curve, checked against `Φ_{2B,n,m}(ψ*)`.  Arguments may be
/// integers or the symbols themselves.
pub fn known_point_2b_sp(n: &RatFunc, m: &RatFunc, r: &RatFunc) -> Result<KnownPoint> {
    let t = point_template();
    let subs = [
        (Var::N, n.clone()),
        (Var::M, m.clone()),
        (Var::R, r.clone()),
    ];
    let point = CurvePoint {
        c: t.c.substitute_many(&subs)?,
        lambda: t.lambda.substitute_many(&subs)?,
    };
    let psi_star = t.psi_star.substitute_many(&subs)?;
    let curve = from_template(n, m, &psi_star, String::new())?;
    let curve_value = CurvePoint {
        c: curve.c,
        lambda: curve.lambda,
    };
    let consistent = curve_value == point;
    Ok(KnownPoint {
        point,
        psi_star,
        curve_value,
        consistent,
    })
}

// ---------------------------------------------------------------------------
// Virasoro consistency.

/// `49·λ²·(c − 25)·(c − 1)`, which is identically 1 on the Virasoro curve.
pub fn virasoro_expression(curve: &TruncationCurve) -> RatFunc {
    let c = &curve.c;
    let l2 = &curve.lambda * &curve.lambda;
    let prod = &(c - &RatFunc::from_int(25)) * &(c - &RatFunc::one());
    (&l2 * &prod).scale(&BigRat::from_integer(49.into()))
}

/// Whether the curve satisfies `49λ²(c − 25)(c − 1) = 1` identically.
pub fn satisfies_virasoro_relation(curve: &TruncationCurve) -> bool {
    virasoro_expression(curve) == RatFunc::one()
}
