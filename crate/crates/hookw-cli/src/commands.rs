//! Implementations of the subcommands.

use crate::{Command, FamilyArgs, Outcome, Suite, SweepArgs, UsageError};
use hookw::catalog::{
    all_coincidences, coincidence_table, gelfand_tsetlin_factors, rational_points,
    verify_coincidence, verify_coincidence_symbolic, verify_gt_factor, CoincidenceEntry,
    CoincidenceOutcome, GtFactorKind, RationalityWitness, TargetKind, WitnessAux, WitnessBounds,
};
use hookw::curves::{
    intersect, phi_general, verify_trialities, verify_trialities_symbolic, TruncationCurve,
};
use hookw::exact::{BigRat, RatFunc, Var};
use hookw::liedata::{
    assemble_central_charge, central_charge, describe, generator_profile, is_reduction_case,
    Family, HookFamily,
};
use hookw::spectra::{
    max_generator_weight, sing_weight_closed, sing_weight_closed_unchecked, sing_weight_general,
    sing_weight_general_unchecked, ClassicalType, RootSystemData, SingObject,
};
use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

type CmdResult = Result<Outcome, UsageError>;

fn ok(value: Value) -> CmdResult {
    Ok(Outcome {
        value,
        failed: false,
    })
}

fn fam(args: &FamilyArgs) -> HookFamily {
    HookFamily::new(args.family, args.n, args.m)
}

fn family_json(args: &FamilyArgs) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("family".into(), json!(args.family.to_string()));
    map.insert("n".into(), json!(args.n));
    map.insert("m".into(), json!(args.m));
    map
}

/// Dispatches a command to its implementation.
pub(crate) fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Charge { family, psi } => charge(family, psi.as_ref()),
        Command::Describe { family } => describe_cmd(family),
        Command::Gentype { family } => gentype(family),
        Command::Curve { family, n, m, psi } => curve(*family, n, m, psi.as_ref()),
        Command::Sing {
            kind,
            object,
            n,
            u,
            v,
            unchecked,
        } => sing(*kind, *object, *n, *u, *v, *unchecked),
        Command::Intersect { first, second } => intersect_cmd(first, second),
        Command::Verify { suite } => match suite {
            Suite::Trialities { sweep, symbolic } => verify_trialities_cmd(sweep, *symbolic),
            Suite::Coincidences {
                sweep,
                source,
                kind,
                symbolic,
            } => verify_coincidences_cmd(sweep, *source, *kind, *symbolic),
            Suite::Charges { sweep } => verify_charges_cmd(sweep),
            Suite::Singular { sweep } => verify_singular_cmd(sweep),
        },
        Command::RationalPoints {
            family,
            r,
            p,
            q,
            include_conjectural,
        } => {
            let bounds = WitnessBounds {
                aux: r.clone(),
                p: p.clone(),
                q: q.clone(),
                include_conjectural: *include_conjectural,
            };
            let witnesses = rational_points(&fam(family), &bounds)?;
            ok(Value::Array(witnesses.iter().map(witness_json).collect()))
        }
        Command::GtFactors { series, n, k } => gt_factors(*series, *n, *k),
    }
}

fn charge(args: &FamilyArgs, psi: Option<&BigRat>) -> CmdResult {
    let c = central_charge(&fam(args));
    let mut map = family_json(args);
    match psi {
        Some(x) => {
            let value = c
                .eval_at(&[(Var::Psi, x.clone())])
                .map_err(hookw::Error::from)?;
            map.insert("psi".into(), json!(x.to_string()));
            map.insert("c".into(), json!(value.to_string()));
        }
        None => {
            map.insert("c".into(), json!(c.to_string()));
        }
    }
    ok(Value::Object(map))
}

fn describe_cmd(args: &FamilyArgs) -> CmdResult {
    let d = describe(&fam(args))?;
    let mut map = family_json(args);
    map.insert("kind".into(), json!(d.kind.label()));
    map.insert("w_algebra".into(), json!(d.w_algebra));
    map.insert("affine_part".into(), json!(d.affine_part));
    map.insert("orbifold".into(), json!(d.orbifold));
    map.insert("coset".into(), json!(d.coset));
    ok(Value::Object(map))
}

fn gentype(args: &FamilyArgs) -> CmdResult {
    let f = fam(args);
    let top = max_generator_weight(&f)?;
    let weights: Vec<String> = (1..=top / 2).map(|j| (2 * j).to_string()).collect();
    let mut map = family_json(args);
    map.insert(
        "w_algebra_type".into(),
        json!(generator_profile(&f)?.to_string()),
    );
    map.insert(
        "coset_type".into(),
        json!(format!("W({})", weights.join(", "))),
    );
    map.insert("max_weight".into(), json!(top));
    ok(Value::Object(map))
}

fn curve(family: Family, n: &RatFunc, m: &RatFunc, psi: Option<&BigRat>) -> CmdResult {
    let curve = phi_general(family, n, m, None)?;
    let mut map = Map::new();
    map.insert("family".into(), json!(family.to_string()));
    map.insert("n".into(), json!(n.to_string()));
    map.insert("m".into(), json!(m.to_string()));
    match psi {
        Some(x) => {
            let p = curve.at(x)?;
            map.insert("psi".into(), json!(x.to_string()));
            map.insert("c".into(), json!(p.c.to_string()));
            map.insert("lambda".into(), json!(p.lambda.to_string()));
        }
        None => {
            map.insert("c".into(), json!(curve.c.to_string()));
            map.insert("lambda".into(), json!(curve.lambda.to_string()));
        }
    }
    ok(Value::Object(map))
}

fn sing(
    kind: ClassicalType,
    object: SingObject,
    n: u32,
    u: u32,
    v: u32,
    unchecked: bool,
) -> CmdResult {
    let (general, closed) = if unchecked {
        if n < 1 {
            return Err(UsageError("rank n must be at least 1".into()));
        }
        (
            sing_weight_general_unchecked(kind, object, n, u, v)?,
            sing_weight_closed_unchecked(kind, object, n, u, v),
        )
    } else {
        (
            sing_weight_general(kind, object, n, u, v)?,
            sing_weight_closed(kind, object, n, u, v)?,
        )
    };
    let data = RootSystemData::new(kind, n)?;
    let agree = general == closed;
    Ok(Outcome {
        value: json!({
            "kind": kind.to_string(),
            "object": object.to_string(),
            "n": n,
            "u": u,
            "v": v,
            "level": format!("-{} + {}/{}", data.dual_coxeter, u, v),
            "general": general.to_string(),
            "closed": closed.to_string(),
            "agree": agree,
        }),
        failed: !agree,
    })
}

/// Parses `2B(0,1)` (a family point) or `sp:1` (a target algebra of rank r).
fn parse_curve_spec(text: &str) -> Result<TruncationCurve, UsageError> {
    let t = text.trim();
    if let Some((tag, rest)) = t.split_once('(') {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| UsageError(format!("missing `)` in `{t}`")))?;
        let (n, m) = inner
            .split_once(',')
            .ok_or_else(|| UsageError(format!("expected `FAMILY(n,m)`, got `{t}`")))?;
        let family: Family = tag.trim().parse()?;
        let n = crate::parse_rational(n)?;
        let m = crate::parse_rational(m)?;
        let mut c = phi_general(family, &RatFunc::constant(n), &RatFunc::constant(m), None)?;
        c.provenance = t.to_string();
        Ok(c)
    } else if let Some((kind, r)) = t.split_once(':') {
        let kind: TargetKind = kind.trim().parse()?;
        let r: i64 = r
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("rank `{r}` is not an integer")))?;
        if r < kind.min_rank() {
            return Err(UsageError(format!(
                "{kind} needs rank at least {}",
                kind.min_rank()
            )));
        }
        let mut c = kind.curve_at(&RatFunc::from_int(r), &RatFunc::var(Var::Psi))?;
        c.provenance = kind.algebra_name(r);
        Ok(c)
    } else {
        Err(UsageError(format!(
            "cannot parse curve `{t}`; use e.g. `2B(0,1)` or `sp:1`"
        )))
    }
}

fn intersect_cmd(first: &str, second: &str) -> CmdResult {
    let a = parse_curve_spec(first)?;
    let b = parse_curve_spec(second)?;
    let res = intersect(&a, &b)?;
    let points: Vec<Value> = res
        .points
        .iter()
        .map(|p| {
            json!({
                "psi1": p.psi1.to_string(),
                "psi2": p.psi2.to_string(),
                "c": p.c.to_string(),
                "lambda": p.lambda.to_string(),
                "degenerate": p.degenerate,
            })
        })
        .collect();
    ok(json!({
        "first": a.provenance,
        "second": b.provenance,
        "points": points,
        "identity_component": res.identity_component.map(|g| g.to_string()),
        "contains_diagonal": res.contains_diagonal,
        "residual_degree": res.residual_degree,
    }))
}

fn resolve(
    args: &SweepArgs,
    defaults: &[(&str, std::ops::RangeInclusive<i64>)],
) -> Result<crate::sweep::SweepSpec, UsageError> {
    let spec = args.sweep.resolve(defaults)?;
    spec.check_cap(args.max_points)?;
    Ok(spec)
}

fn non_negative(spec: &crate::sweep::SweepSpec, vars: &[&str], min: i64) -> Result<(), UsageError> {
    for v in vars {
        if *spec.range(v).start() < min {
            return Err(UsageError(format!(
                "sweep variable {v} must be at least {min}"
            )));
        }
    }
    Ok(())
}

fn verify_trialities_cmd(args: &SweepArgs, symbolic: bool) -> CmdResult {
    let spec = resolve(args, &[("n", 0..=5), ("m", 0..=5)])?;
    non_negative(&spec, &["n", "m"], 0)?;
    let points: Vec<(u32, u32)> = spec
        .range("n")
        .flat_map(|n| spec.range("m").map(move |m| (n as u32, m as u32)))
        .filter(|&(n, m)| n <= m && n + m >= 1)
        .collect();
    let reports = points
        .par_iter()
        .map(|&(n, m)| verify_trialities(n, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut failures = Vec::new();
    let mut total = 0;
    let rows: Vec<Value> = reports
        .iter()
        .zip(&points)
        .map(|(rep, (n, m))| {
            let failed = rep.checks.iter().filter(|c| !c.holds).count();
            total += rep.checks.len();
            for c in rep.checks.iter().filter(|c| !c.holds) {
                failures.push(json!({"n": n, "m": m, "line": c.line, "lhs": c.lhs, "rhs": c.rhs}));
            }
            json!({"n": n, "m": m, "identities": rep.checks.len(), "failed": failed})
        })
        .collect();
    let symbolic_pass = if symbolic {
        Some(verify_trialities_symbolic()?.all_pass())
    } else {
        None
    };
    let failed = !failures.is_empty() || symbolic_pass == Some(false);
    Ok(Outcome {
        value: json!({
            "suite": "trialities",
            "sweep": spec.to_string(),
            "points": points.len(),
            "identities": total,
            "failed": failures.len(),
            "symbolic": symbolic_pass.map(|p| if p { "pass" } else { "fail" }),
            "rows": rows,
            "failures": failures,
        }),
        failed,
    })
}

fn verify_coincidences_cmd(
    args: &SweepArgs,
    source: Option<Family>,
    kind: Option<TargetKind>,
    symbolic: bool,
) -> CmdResult {
    let spec = resolve(args, &[("n", 0..=4), ("m", 0..=4), ("r", 1..=4)])?;
    non_negative(&spec, &["n", "m"], 0)?;
    let entries: Vec<CoincidenceEntry> = match (source, kind) {
        (Some(s), Some(k)) => coincidence_table(s, k)?,
        _ => {
            let all: Vec<CoincidenceEntry> = all_coincidences()
                .into_iter()
                .filter(|e| {
                    source.is_none_or(|s| e.source == s) && kind.is_none_or(|k| e.kind == k)
                })
                .collect();
            if all.is_empty() {
                return Err(UsageError("no coincidence entries match the filter".into()));
            }
            all
        }
    };
    let mut work = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        for n in spec.range("n") {
            for m in spec.range("m") {
                for r in spec.range("r").filter(|&r| r >= e.kind.min_rank()) {
                    work.push((i, n, m, r));
                }
            }
        }
    }
    let outcomes = work
        .par_iter()
        .map(|&(i, n, m, r)| verify_coincidence(&entries[i], n, m, r))
        .collect::<Result<Vec<_>, _>>()?;
    let sym: Vec<Option<bool>> = if symbolic {
        entries
            .par_iter()
            .map(|e| verify_coincidence_symbolic(e).map(Some))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        vec![None; entries.len()]
    };
    let mut counts = vec![[0usize; 4]; entries.len()];
    let mut failures = Vec::new();
    for (&(i, n, m, r), out) in work.iter().zip(&outcomes) {
        let slot = match out {
            CoincidenceOutcome::Pass => 0,
            CoincidenceOutcome::Skipped(_) => 1,
            CoincidenceOutcome::Undefined(_) => 2,
            CoincidenceOutcome::Fail { source, target } => {
                failures.push(json!({
                    "entry": entries[i].provenance(),
                    "n": n, "m": m, "r": r,
                    "source": format!("c={}, lambda={}", source.c, source.lambda),
                    "target": format!("c={}, lambda={}", target.c, target.lambda),
                }));
                3
            }
        };
        counts[i][slot] += 1;
    }
    let rows: Vec<Value> = entries
        .iter()
        .zip(&counts)
        .zip(&sym)
        .map(|((e, c), s)| {
            json!({
                "entry": e.provenance(),
                "pass": c[0],
                "skipped": c[1],
                "undefined": c[2],
                "fail": c[3],
                "symbolic": s.map(|p| if p { "pass" } else { "fail" }),
            })
        })
        .collect();
    let failed = !failures.is_empty() || sym.contains(&Some(false));
    let total = |slot: usize| counts.iter().map(|c| c[slot]).sum::<usize>();
    Ok(Outcome {
        value: json!({
            "suite": "coincidences",
            "sweep": spec.to_string(),
            "entries": entries.len(),
            "points": work.len(),
            "pass": total(0),
            "skipped": total(1),
            "undefined": total(2),
            "failed": total(3),
            "rows": rows,
            "failures": failures,
        }),
        failed,
    })
}

fn verify_charges_cmd(args: &SweepArgs) -> CmdResult {
    let spec = resolve(args, &[("n", 0..=4), ("m", 0..=4)])?;
    non_negative(&spec, &["n", "m"], 0)?;
    let mut work = Vec::new();
    for family in Family::ALL {
        for n in spec.range("n") {
            for m in spec.range("m") {
                if is_reduction_case(family, n as u32, m as u32) {
                    work.push(HookFamily::new(family, n as u32, m as u32));
                }
            }
        }
    }
    let results = work
        .par_iter()
        .map(|f| assemble_central_charge(f).map(|c| c == central_charge(f)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut failures = Vec::new();
    let rows: Vec<Value> = Family::ALL
        .iter()
        .map(|family| {
            let (mut points, mut failed) = (0, 0);
            for (f, ok) in work.iter().zip(&results) {
                if f.family() == *family {
                    points += 1;
                    if !ok {
                        failed += 1;
                        failures.push(json!(f.to_string()));
                    }
                }
            }
            json!({"family": family.to_string(), "points": points, "failed": failed})
        })
        .collect();
    Ok(Outcome {
        failed: !failures.is_empty(),
        value: json!({
            "suite": "charges",
            "sweep": spec.to_string(),
            "points": work.len(),
            "failed": failures.len(),
            "rows": rows,
            "failures": failures,
        }),
    })
}

fn verify_singular_cmd(args: &SweepArgs) -> CmdResult {
    let spec = resolve(args, &[("n", 1..=4), ("u", 1..=12), ("v", 1..=6)])?;
    non_negative(&spec, &["n", "u", "v"], 1)?;
    let kinds = [ClassicalType::SoOdd, ClassicalType::Sp];
    let objects = [SingObject::Affine, SingObject::PrincipalW];
    let mut work = Vec::new();
    for kind in kinds {
        for object in objects {
            for n in spec.range("n") {
                for v in spec.range("v") {
                    for u in spec.range("u").filter(|&u| u > n && u.gcd(&v) == 1) {
                        work.push((kind, object, n as u32, u as u32, v as u32));
                    }
                }
            }
        }
    }
    let results = work
        .par_iter()
        .map(|&(k, o, n, u, v)| -> Result<bool, hookw::Error> {
            Ok(sing_weight_general(k, o, n, u, v)? == sing_weight_closed(k, o, n, u, v)?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for kind in kinds {
        for object in objects {
            let (mut count, mut failed) = (0, 0);
            for (&(k, o, n, u, v), ok) in work.iter().zip(&results) {
                if k == kind && o == object {
                    count += 1;
                    if !ok {
                        failed += 1;
                        failures.push(json!({"kind": k.to_string(), "object": o.to_string(), "n": n, "u": u, "v": v}));
                    }
                }
            }
            rows.push(json!({
                "kind": kind.to_string(),
                "object": object.to_string(),
                "comparisons": count,
                "failed": failed,
            }));
        }
    }
    Ok(Outcome {
        failed: !failures.is_empty(),
        value: json!({
            "suite": "singular",
            "sweep": spec.to_string(),
            "comparisons": work.len(),
            "failed": failures.len(),
            "rows": rows,
            "failures": failures,
        }),
    })
}

/// The JSON form of a witness.
pub fn witness_json(w: &RationalityWitness) -> Value {
    let aux = match w.aux {
        WitnessAux::None => json!({}),
        WitnessAux::R(r) => json!({ "r": r }),
        WitnessAux::K(k) => json!({ "k": k }),
        WitnessAux::Pq(p, q) => json!({ "p": p, "q": q }),
    };
    json!({
        "family": w.family.to_string(),
        "n": w.n,
        "m": w.m,
        "psi": w.psi.to_string(),
        "theorem": w.theorem.tag(),
        "aux": aux,
        "conditions": w.conditions.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "partner": w.partner.as_ref().map(|p| json!({
            "algebra": p.algebra_name(),
            "s": p.s.to_string(),
        })),
        "status": w.status.to_string(),
    })
}

fn gt_factors(series: hookw::catalog::GtSeries, n: u32, k: u32) -> CmdResult {
    let factors = gelfand_tsetlin_factors(series, n, k)?;
    let mut failed = false;
    let rows: Vec<Value> = factors
        .iter()
        .map(|f| {
            let label = match f.kind {
                GtFactorKind::Heisenberg => "H".to_string(),
                GtFactorKind::D(j) => format!("D({j})"),
                GtFactorKind::E(j) => format!("E({j})"),
                GtFactorKind::SpPair(i) => format!("pair {i}"),
            };
            let algebra = f.target.map(|(kind, r)| kind.algebra_name(r));
            let check = match verify_gt_factor(f, k) {
                None => "n/a",
                Some(Ok(true)) => "pass",
                Some(_) => {
                    failed = true;
                    "fail"
                }
            };
            json!({
                "factor": label,
                "algebra": algebra,
                "levels": f.levels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                "curve_check": check,
            })
        })
        .collect();
    Ok(Outcome {
        value: json!({
            "series": series.to_string(),
            "n": n,
            "k": k,
            "factors": rows,
        }),
        failed,
    })
}
