//! Python bindings for `hookw`.
//!
//! Exact rationals cross the boundary as `fractions.Fraction` (inputs may
//! also be `int` or strings such as `"3/10"`); rational functions of ψ are
//! returned as strings in the library's canonical text form.

use hookw::catalog::{
    coincidence_table, rational_points as witnesses, verify_coincidence, CoincidenceOutcome,
    RationalityWitness, TargetKind, WitnessAux, WitnessBounds,
};
use hookw::curves::{intersect as intersect_curves, phi, verify_trialities as trialities};
use hookw::exact::{parse_bigrat, parse_ratfunc, BigRat, RatFunc, Var};
use hookw::liedata::{central_charge as charge, describe as describe_family, Family, HookFamily};
use hookw::spectra::{sing_weight_closed, sing_weight_general, ClassicalType, SingObject};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn hook_family(family: &str, n: u32, m: u32) -> PyResult<HookFamily> {
    let family: Family = family.parse().map_err(value_error)?;
    Ok(HookFamily::new(family, n, m))
}

/// Reads an exact rational from an `int`, `Fraction` or string.
fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<BigRat> {
    parse_bigrat(&obj.str()?.to_string()).map_err(value_error)
}

/// Builds a `fractions.Fraction`.
fn fraction<'py>(py: Python<'py>, x: &BigRat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((x.to_string(),))
}

/// Central charge of the coset `iX(n, m)`: a `Fraction` at `psi`, or the
/// rational function of psi as a string.
#[pyfunction]
#[pyo3(signature = (family, n, m, psi=None))]
fn central_charge<'py>(
    py: Python<'py>,
    family: &str,
    n: u32,
    m: u32,
    psi: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let c = charge(&hook_family(family, n, m)?);
    match psi {
        Some(obj) => {
            let x = rational_arg(obj)?;
            let value = c.eval_at(&[(Var::Psi, x)]).map_err(value_error)?;
            fraction(py, &value)
        }
        None => Ok(c.to_string().into_pyobject(py)?.into_any()),
    }
}

/// Truncation curve `(c, lambda)` of `iX(n, m)`, at `psi` or symbolic.
#[pyfunction]
#[pyo3(signature = (family, n, m, psi=None))]
fn curve<'py>(
    py: Python<'py>,
    family: &str,
    n: u32,
    m: u32,
    psi: Option<&Bound<'py, PyAny>>,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let curve = phi(&hook_family(family, n, m)?).map_err(value_error)?;
    match psi {
        Some(obj) => {
            let point = curve.at(&rational_arg(obj)?).map_err(value_error)?;
            let as_rat = |f: &RatFunc| {
                f.as_constant()
                    .ok_or_else(|| value_error("non-constant value"))
            };
            Ok((
                fraction(py, &as_rat(&point.c)?)?,
                fraction(py, &as_rat(&point.lambda)?)?,
            ))
        }
        None => Ok((
            curve.c.to_string().into_pyobject(py)?.into_any(),
            curve.lambda.to_string().into_pyobject(py)?.into_any(),
        )),
    }
}

/// Algebra identification of `iX(n, m)` as a dict.
#[pyfunction]
fn describe<'py>(py: Python<'py>, family: &str, n: u32, m: u32) -> PyResult<Bound<'py, PyDict>> {
    let d = describe_family(&hook_family(family, n, m)?).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("kind", d.kind.label())?;
    out.set_item("w_algebra", d.w_algebra)?;
    out.set_item("affine_part", d.affine_part)?;
    out.set_item("orbifold", d.orbifold)?;
    out.set_item("coset", d.coset)?;
    Ok(out)
}

/// Lowest singular-vector weight at level `-h^v + u/v`; returns the pair
/// (general formula, closed form).
#[pyfunction]
fn sing_weight<'py>(
    py: Python<'py>,
    kind: &str,
    object: &str,
    n: u32,
    u: u32,
    v: u32,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let kind: ClassicalType = kind.parse().map_err(value_error)?;
    let object: SingObject = object.parse().map_err(value_error)?;
    let general = sing_weight_general(kind, object, n, u, v).map_err(value_error)?;
    let closed = sing_weight_closed(kind, object, n, u, v).map_err(value_error)?;
    Ok((fraction(py, &general)?, fraction(py, &closed)?))
}

/// Rational intersection points of the curves of two family points, as a
/// list of dicts with keys `psi1`, `psi2`, `c`, `lambda`, `degenerate`.
#[pyfunction]
fn intersect<'py>(
    py: Python<'py>,
    first: (String, u32, u32),
    second: (String, u32, u32),
) -> PyResult<Bound<'py, PyList>> {
    let a = phi(&hook_family(&first.0, first.1, first.2)?).map_err(value_error)?;
    let b = phi(&hook_family(&second.0, second.1, second.2)?).map_err(value_error)?;
    let res = intersect_curves(&a, &b).map_err(value_error)?;
    let out = PyList::empty(py);
    for p in &res.points {
        let d = PyDict::new(py);
        d.set_item("psi1", fraction(py, &p.psi1)?)?;
        d.set_item("psi2", fraction(py, &p.psi2)?)?;
        d.set_item("c", fraction(py, &p.c)?)?;
        d.set_item("lambda", fraction(py, &p.lambda)?)?;
        d.set_item("degenerate", p.degenerate)?;
        out.append(d)?;
    }
    Ok(out)
}

/// Whether every triality identity holds at `(n, m)` with `m >= n`.
#[pyfunction]
fn verify_trialities(n: u32, m: u32) -> PyResult<bool> {
    Ok(trialities(n, m).map_err(value_error)?.all_pass())
}

/// Checks every coincidence entry for `(source, kind)` at `(n, m, r)`;
/// returns `(entry, outcome)` pairs with outcome `pass`, `skipped`,
/// `undefined` or `fail`.
#[pyfunction]
fn verify_coincidences(
    source: &str,
    kind: &str,
    n: i64,
    m: i64,
    r: i64,
) -> PyResult<Vec<(String, String)>> {
    let source: Family = source.parse().map_err(value_error)?;
    let kind: TargetKind = kind.parse().map_err(value_error)?;
    let entries = coincidence_table(source, kind).map_err(value_error)?;
    entries
        .iter()
        .map(|e| {
            let outcome = verify_coincidence(e, n, m, r).map_err(value_error)?;
            let label = match outcome {
                CoincidenceOutcome::Pass => "pass",
                CoincidenceOutcome::Skipped(_) => "skipped",
                CoincidenceOutcome::Undefined(_) => "undefined",
                CoincidenceOutcome::Fail { .. } => "fail",
            };
            Ok((e.provenance(), label.to_string()))
        })
        .collect()
}

fn witness_dict<'py>(py: Python<'py>, w: &RationalityWitness) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("family", w.family.to_string())?;
    d.set_item("n", w.n)?;
    d.set_item("m", w.m)?;
    d.set_item("psi", fraction(py, &w.psi)?)?;
    d.set_item("theorem", w.theorem.tag())?;
    let aux = PyDict::new(py);
    match w.aux {
        WitnessAux::None => {}
        WitnessAux::R(r) => aux.set_item("r", r)?,
        WitnessAux::K(k) => aux.set_item("k", k)?,
        WitnessAux::Pq(p, q) => {
            aux.set_item("p", p)?;
            aux.set_item("q", q)?;
        }
    }
    d.set_item("aux", aux)?;
    let conditions: Vec<String> = w.conditions.iter().map(|c| c.to_string()).collect();
    d.set_item("conditions", conditions)?;
    match &w.partner {
        Some(p) => {
            let partner = PyDict::new(py);
            partner.set_item("algebra", p.algebra_name())?;
            partner.set_item("s", fraction(py, &p.s)?)?;
            d.set_item("partner", partner)?;
        }
        None => d.set_item("partner", py.None())?,
    }
    d.set_item("status", w.status.to_string())?;
    Ok(d)
}

/// Rationality witnesses on `iX(n, m)`; ranges are inclusive `(lo, hi)`.
#[pyfunction]
#[pyo3(signature = (family, n, m, r=(1, 4), p=(1, 8), q=(1, 8), include_conjectural=false))]
#[allow(clippy::too_many_arguments)]
fn rational_points<'py>(
    py: Python<'py>,
    family: &str,
    n: u32,
    m: u32,
    r: (i64, i64),
    p: (i64, i64),
    q: (i64, i64),
    include_conjectural: bool,
) -> PyResult<Bound<'py, PyList>> {
    let bounds = WitnessBounds {
        aux: r.0..=r.1,
        p: p.0..=p.1,
        q: q.0..=q.1,
        include_conjectural,
    };
    let found = witnesses(&hook_family(family, n, m)?, &bounds).map_err(value_error)?;
    let out = PyList::empty(py);
    for w in &found {
        out.append(witness_dict(py, w)?)?;
    }
    Ok(out)
}

/// Canonical text of a rational function in `psi`, `n`, `m`, `r`.
#[pyfunction]
fn normalize(text: &str) -> PyResult<String> {
    Ok(parse_ratfunc(text).map_err(value_error)?.to_string())
}

#[pymodule]
fn hookw_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(central_charge, m)?)?;
    m.add_function(wrap_pyfunction!(curve, m)?)?;
    m.add_function(wrap_pyfunction!(describe, m)?)?;
    m.add_function(wrap_pyfunction!(sing_weight, m)?)?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add_function(wrap_pyfunction!(verify_trialities, m)?)?;
    m.add_function(wrap_pyfunction!(verify_coincidences, m)?)?;
    m.add_function(wrap_pyfunction!(rational_points, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    Ok(())
}
