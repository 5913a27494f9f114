//! Rediscovering coincidences by intersecting truncation curves: every point
//! predicted by a table entry must appear among the rational intersection
//! points of the source curve and the target curve.

use super::coincidence::{coincidence_table, CoincidenceOutcome};
use super::target::TargetKind;
use crate::curves::{intersect, phi_general, Intersection, DEGENERATE_CHARGES};
use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat, RatFunc, Var};
use crate::liedata::Family;
use num_traits::Zero;

/// A point predicted by one table entry at fixed `(n, m, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedPoint {
    /// Identifier of the entry, e.g. `2B/sp#6`.
    pub provenance: String,
    /// `ψ` on the source curve.
    pub psi: BigRat,
    /// `ψ'` on the target curve.
    pub psi_target: BigRat,
    /// The central charge at the point.
    pub c: BigRat,
    /// `c` is a degenerate charge, where the curves need not separate points.
    pub degenerate: bool,
    /// The pair `(ψ, ψ')` is an isolated intersection point or lies on a
    /// common component of both curves.
    pub found: bool,
}

/// Outcome of [`intersection_oracle`] for one target kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub source: Family,
    pub kind: TargetKind,
    pub n: i64,
    pub m: i64,
    pub r: i64,
    pub intersection: Intersection,
    /// Points predicted by entries that are defined (not excluded, no pole)
    /// at `(n, m, r)`.
    pub predicted: Vec<PredictedPoint>,
}

impl OracleReport {
    /// Predicted non-degenerate points that the intersection missed.
    pub fn missing(&self) -> Vec<&PredictedPoint> {
        self.predicted
            .iter()
            .filter(|p| !p.found && !p.degenerate)
            .collect()
    }
}

/// Intersects `Φ_{source,n,m}` with the target curve of `kind` at rank `r`
/// and matches the result against the table entries for `(source, kind)`.
pub fn intersection_oracle(
    source: Family,
    kind: TargetKind,
    n: i64,
    m: i64,
    r: i64,
) -> Result<OracleReport> {
    if r < kind.min_rank() || n < 0 || m < 0 {
        return Err(Error::OutOfRange(format!(
            "(n, m, r) = ({n}, {m}, {r}) for {kind}"
        )));
    }
    let entries = coincidence_table(source, kind)?;
    let a = phi_general(source, &RatFunc::from_int(n), &RatFunc::from_int(m), None)?;
    let b = kind.curve_at(&RatFunc::from_int(r), &RatFunc::var(Var::Psi))?;
    let intersection = intersect(&a, &b)?;
    let assignment = [(Var::N, int(n)), (Var::M, int(m)), (Var::R, int(r))];
    let mut predicted = Vec::new();
    for e in &entries {
        if super::verify_coincidence(e, n, m, r)? != CoincidenceOutcome::Pass {
            continue;
        }
        let psi = e.psi.eval_at(&assignment)?;
        let psi_target = e.target_psi().eval_at(&assignment)?;
        let c = a.at(&psi)?.c.as_constant().expect("numeric curve");
        let degenerate = DEGENERATE_CHARGES.iter().any(|&(p, q)| c == rat(p, q));
        let isolated = intersection
            .points
            .iter()
            .any(|p| p.psi1 == psi && p.psi2 == psi_target);
        let on_component = intersection.identity_component.as_ref().is_some_and(|g| {
            g.is_zero()
                || g.eval(&|v| match v {
                    Var::Psi1 => Some(psi.clone()),
                    Var::Psi2 => Some(psi_target.clone()),
                    _ => None,
                })
                .is_ok_and(|x| x.is_zero())
        });
        predicted.push(PredictedPoint {
            provenance: e.provenance(),
            psi,
            psi_target,
            c,
            degenerate,
            found: isolated || on_component,
        });
    }
    Ok(OracleReport {
        source,
        kind,
        n,
        m,
        r,
        intersection,
        predicted,
    })
}
