//! Coincidence entries and their verification against the truncation curves.

use super::tables::TABLE;
use super::target::TargetKind;
use crate::curves::{phi_general, CurvePoint};
use crate::error::{Error, Result};
use crate::exact::{parse_ratfunc, rf, BigRat, RatFunc, Var};
use crate::liedata::Family;
use std::fmt;

/// An excluded parameter relation `r ≠ rhs(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    /// The right-hand side as a polynomial in `n, m`.
    pub rhs: RatFunc,
}

impl Exclusion {
    /// Whether the exclusion fires at the given integers.
    pub fn fires(&self, n: i64, m: i64, r: i64) -> bool {
        let value = self
            .rhs
            .eval_at(&[
                (Var::N, BigRat::from_integer(n.into())),
                (Var::M, BigRat::from_integer(m.into())),
            ])
            .expect("exclusions are polynomials in n, m");
        value == BigRat::from_integer(r.into())
    }
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r != {}", self.rhs)
    }
}

/// One coincidence `C^ψ_{source}(n, m) ≅ W_s(target of rank r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceEntry {
    pub source: Family,
    pub kind: TargetKind,
    /// Position of the entry in its table (1-based).
    pub item: u8,
    /// `ψ(n, m, r)`.
    pub psi: RatFunc,
    /// `s(n, m, r)`.
    pub s: RatFunc,
    pub exclusions: Vec<Exclusion>,
}

impl CoincidenceEntry {
    /// A short identifier such as `2B/sp#6`.
    pub fn provenance(&self) -> String {
        format!("{}/{}#{}", self.source, self.kind, self.item)
    }

    /// The target parameter `ψ' = s + shift(r)`.
    pub fn target_psi(&self) -> RatFunc {
        &self.s + &self.kind.shift()
    }

    /// The first exclusion that fires at `(n, m, r)`, if any.
    pub fn excluded_by(&self, n: i64, m: i64, r: i64) -> Option<&Exclusion> {
        self.exclusions.iter().find(|e| e.fires(n, m, r))
    }
}

impl fmt::Display for CoincidenceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: psi = {}, s = {}",
            self.provenance(),
            self.psi,
            self.s
        )?;
        for e in &self.exclusions {
            write!(f, ", {e}")?;
        }
        Ok(())
    }
}

fn build(raw: &super::tables::RawEntry) -> CoincidenceEntry {
    let offset = rf(raw.offset);
    CoincidenceEntry {
        source: raw.source,
        kind: raw.kind,
        item: raw.item,
        psi: rf(raw.psi),
        s: &offset - &raw.kind.shift(),
        exclusions: raw
            .exclusions
            .iter()
            .map(|t| Exclusion {
                rhs: parse_ratfunc(t).expect("table exclusion"),
            })
            .collect(),
    }
}

/// All 48 entries, in table order.
pub fn all_coincidences() -> Vec<CoincidenceEntry> {
    TABLE.iter().map(build).collect()
}

/// The entries for one `(source, kind)` pair.
pub fn coincidence_table(source: Family, kind: TargetKind) -> Result<Vec<CoincidenceEntry>> {
    let entries: Vec<CoincidenceEntry> = TABLE
        .iter()
        .filter(|e| e.source == source && e.kind == kind)
        .map(build)
        .collect();
    if entries.is_empty() {
        return Err(Error::UnknownPair(source.to_string(), kind.to_string()));
    }
    Ok(entries)
}

/// The outcome of checking an entry at one integer point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoincidenceOutcome {
    /// Both curves give the same `(c, λ)`.
    Pass,
    /// An exclusion applies (its text is carried).
    Skipped(String),
    /// A parameter or curve value is undefined at this point.
    Undefined(String),
    /// The two sides differ.
    Fail {
        source: CurvePoint,
        target: CurvePoint,
    },
}

impl CoincidenceOutcome {
    /// Whether this outcome is a failure.
    pub fn is_fail(&self) -> bool {
        matches!(self, CoincidenceOutcome::Fail { .. })
    }
}

/// Checks `Φ_source(ψ(n,m,r)) = Φ_target(ψ'(s(n,m,r)))` at integers.
///
/// Exclusions are evaluated first; poles of `ψ`, `ψ'` or of either curve are
/// reported as [`CoincidenceOutcome::Undefined`].
pub fn verify_coincidence(
    entry: &CoincidenceEntry,
    n: i64,
    m: i64,
    r: i64,
) -> Result<CoincidenceOutcome> {
    if n < 0 || m < 0 {
        return Err(Error::OutOfRange("n and m must be non-negative".into()));
    }
    if r < entry.kind.min_rank() {
        return Err(Error::OutOfRange(format!(
            "r must be at least {} for {}",
            entry.kind.min_rank(),
            entry.kind
        )));
    }
    if let Some(e) = entry.excluded_by(n, m, r) {
        return Ok(CoincidenceOutcome::Skipped(e.to_string()));
    }
    let q = |x: i64| BigRat::from_integer(x.into());
    let point = [(Var::N, q(n)), (Var::M, q(m)), (Var::R, q(r))];
    let psi = match entry.psi.eval_at(&point) {
        Ok(v) => v,
        Err(_) => return Ok(CoincidenceOutcome::Undefined("psi has a pole".into())),
    };
    let psi_t = match entry.target_psi().eval_at(&point) {
        Ok(v) => v,
        Err(_) => {
            return Ok(CoincidenceOutcome::Undefined(
                "target psi has a pole".into(),
            ))
        }
    };
    let source = phi_general(
        entry.source,
        &RatFunc::from_int(n),
        &RatFunc::from_int(m),
        Some(&RatFunc::constant(psi)),
    );
    let target = entry
        .kind
        .curve_at(&RatFunc::from_int(r), &RatFunc::constant(psi_t));
    match (source, target) {
        (Ok(a), Ok(b)) => {
            let pa = CurvePoint {
                c: a.c,
                lambda: a.lambda,
            };
            let pb = CurvePoint {
                c: b.c,
                lambda: b.lambda,
            };
            Ok(if pa == pb {
                CoincidenceOutcome::Pass
            } else {
                CoincidenceOutcome::Fail {
                    source: pa,
                    target: pb,
                }
            })
        }
        (Err(e), _) => Ok(CoincidenceOutcome::Undefined(format!("source curve: {e}"))),
        (_, Err(e)) => Ok(CoincidenceOutcome::Undefined(format!("target curve: {e}"))),
    }
}

/// Checks the entry as an identity of rational functions in `n, m, r`.
pub fn verify_coincidence_symbolic(entry: &CoincidenceEntry) -> Result<bool> {
    let source = phi_general(
        entry.source,
        &RatFunc::var(Var::N),
        &RatFunc::var(Var::M),
        Some(&entry.psi),
    )?;
    let target = entry
        .kind
        .curve_at(&RatFunc::var(Var::R), &entry.target_psi())?;
    Ok(source.c == target.c && source.lambda == target.lambda)
}
