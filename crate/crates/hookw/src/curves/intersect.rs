//! Rational intersection points of two truncation curves.
//!
//! A common point `Φ_A(ψ₁) = Φ_B(ψ₂)` solves the two polynomial equations
//! obtained by clearing denominators in `c_A(ψ₁) = c_B(ψ₂)` and
//! `λ_A(ψ₁) = λ_B(ψ₂)`.  A common factor of the two equations is a
//! one-dimensional identity component (for instance the diagonal when a
//! curve is intersected with itself) and is reported rather than enumerated.
//! The remaining isolated solutions are found by eliminating `ψ₂` with a
//! resultant, taking the rational roots in `ψ₁` and back-solving for `ψ₂`.

use super::{CurvePoint, TruncationCurve};
use crate::error::{Error, Result};
use crate::exact::{
    poly_gcd, rat, resultant, BigRat, ExactError, MultiPoly, RatFunc, UniPoly, Var,
};

/// Central charges at which the coincidence classification degenerates.
pub const DEGENERATE_CHARGES: [(i64, i64); 5] = [(0, 1), (1, 1), (-24, 1), (-22, 5), (1, 2)];

/// One isolated rational intersection point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    /// Parameter on the first curve.
    pub psi1: BigRat,
    /// Parameter on the second curve.
    pub psi2: BigRat,
    pub c: BigRat,
    pub lambda: BigRat,
    /// Whether `c` is one of [`DEGENERATE_CHARGES`].
    pub degenerate: bool,
}

/// The result of intersecting two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    /// Isolated rational points, sorted by `(ψ₁, ψ₂)`.
    pub points: Vec<IntersectionPoint>,
    /// The common factor of both equations in `ψ₁, ψ₂` if it is not
    /// constant: every solution of it is a point of both curves.
    pub identity_component: Option<MultiPoly>,
    /// Whether the identity component contains the diagonal `ψ₁ = ψ₂`.
    pub contains_diagonal: bool,
    /// Number of irrational (or non-verifiable) roots of the eliminant,
    /// counted without multiplicity.
    pub residual_degree: usize,
}

fn is_degenerate(c: &BigRat) -> bool {
    DEGENERATE_CHARGES.iter().any(|&(p, q)| *c == rat(p, q))
}

/// `num_a(ψ₁)·den_b(ψ₂) − num_b(ψ₂)·den_a(ψ₁)`.
fn cross_equation(a: &RatFunc, b: &RatFunc) -> MultiPoly {
    let a = a.rename(&|v| if v == Var::Psi { Var::Psi1 } else { v });
    let b = b.rename(&|v| if v == Var::Psi { Var::Psi2 } else { v });
    &(a.num() * b.den()) - &(b.num() * a.den())
}

fn check_symbols(curve: &TruncationCurve) -> Result<()> {
    let residual = curve.residual_symbols();
    if residual.is_empty() {
        Ok(())
    } else {
        let names: Vec<&str> = residual.iter().map(|v| v.name()).collect();
        Err(Error::ResidualSymbols(format!(
            "{} still depends on {}",
            curve.provenance,
            names.join(", ")
        )))
    }
}

fn specialize_at(p: &MultiPoly, v: Var, x: &BigRat) -> MultiPoly {
    p.specialize(&|w| (w == v).then(|| x.clone()))
}

fn rational_roots_in(p: &MultiPoly, v: Var) -> Result<Vec<BigRat>> {
    if p.is_zero() {
        return Err(Error::Exact(ExactError::ZeroPolynomial));
    }
    match UniPoly::from_multi(p, v) {
        Some(u) => Ok(u.rational_roots()?),
        None => Ok(Vec::new()),
    }
}

/// Degree of the squarefree part of a univariate polynomial in `v`.
fn squarefree_degree(p: &MultiPoly, v: Var) -> usize {
    let d = p.derivative(v);
    if d.is_zero() {
        return 0;
    }
    let g = poly_gcd(p, &d);
    p.degree_in(v) as usize - g.degree_in(v) as usize
}

/// Rational intersection points of two curves that depend on `ψ` only.
pub fn intersect(a: &TruncationCurve, b: &TruncationCurve) -> Result<Intersection> {
    check_symbols(a)?;
    check_symbols(b)?;
    let p = cross_equation(&a.c, &b.c);
    let q = cross_equation(&a.lambda, &b.lambda);
    let diagonal = &MultiPoly::var(Var::Psi1) - &MultiPoly::var(Var::Psi2);

    if p.is_zero() && q.is_zero() {
        // The curves coincide pointwise for all parameter pairs.
        return Ok(Intersection {
            points: Vec::new(),
            identity_component: Some(MultiPoly::zero()),
            contains_diagonal: true,
            residual_degree: 0,
        });
    }
    if p.is_zero() || q.is_zero() {
        // One equation is vacuous: the solution set is a curve, reported whole.
        let comp = if p.is_zero() { q } else { p };
        let contains_diagonal = comp.div_exact(&diagonal).is_some();
        return Ok(Intersection {
            points: Vec::new(),
            identity_component: Some(comp.primitive()),
            contains_diagonal,
            residual_degree: 0,
        });
    }

    let g = poly_gcd(&p, &q);
    let (identity_component, p, q) = if g.is_constant() {
        (None, p, q)
    } else {
        let p2 = p.div_exact(&g).expect("gcd divides");
        let q2 = q.div_exact(&g).expect("gcd divides");
        (Some(g.primitive()), p2, q2)
    };
    let contains_diagonal = identity_component
        .as_ref()
        .is_some_and(|g| g.div_exact(&diagonal).is_some());

    // Eliminate ψ₂.
    let eliminant = match (p.degree_in(Var::Psi2), q.degree_in(Var::Psi2)) {
        (0, _) => p.clone(),
        (_, 0) => q.clone(),
        _ => resultant(&p, &q, Var::Psi2)?,
    };

    let mut points = Vec::new();
    let mut roots_used = 0usize;
    let sqf_degree;
    if eliminant.is_zero() {
        sqf_degree = 0;
    } else {
        sqf_degree = squarefree_degree(&eliminant, Var::Psi1);
        for x in rational_roots_in(&eliminant, Var::Psi1)? {
            let px = specialize_at(&p, Var::Psi1, &x);
            let qx = specialize_at(&q, Var::Psi1, &x);
            let h = if px.is_zero() {
                qx
            } else if qx.is_zero() {
                px
            } else {
                poly_gcd(&px, &qx)
            };
            if h.is_zero() || h.is_constant() {
                continue;
            }
            let mut found = false;
            for y in rational_roots_in(&h, Var::Psi2)? {
                if let Some(pt) = verified_point(a, b, &x, &y) {
                    points.push(pt);
                    found = true;
                }
            }
            if found {
                roots_used += 1;
            }
        }
    }
    points.sort_by(|u, v| (&u.psi1, &u.psi2).cmp(&(&v.psi1, &v.psi2)));
    points.dedup();
    Ok(Intersection {
        points,
        identity_component,
        contains_diagonal,
        residual_degree: sqf_degree.saturating_sub(roots_used),
    })
}

/// Evaluates both curves at `(x, y)`; keeps the point only if neither has a
/// pole there and the values agree exactly.
fn verified_point(
    a: &TruncationCurve,
    b: &TruncationCurve,
    x: &BigRat,
    y: &BigRat,
) -> Option<IntersectionPoint> {
    let pa = point_at(a, x)?;
    let pb = point_at(b, y)?;
    if pa != pb {
        return None;
    }
    let c = pa.c.as_constant()?;
    let lambda = pa.lambda.as_constant()?;
    Some(IntersectionPoint {
        psi1: x.clone(),
        psi2: y.clone(),
        degenerate: is_degenerate(&c),
        c,
        lambda,
    })
}

fn point_at(curve: &TruncationCurve, x: &BigRat) -> Option<CurvePoint> {
    let p = curve.at(x).ok()?;
    // A zero denominator after clearing means λ is infinite there.
    if p.lambda.as_constant().is_none() || p.c.as_constant().is_none() {
        return None;
    }
    Some(p)
}
