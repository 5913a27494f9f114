//! End-to-end acceptance run: one line per criterion, non-zero exit status if
//! any criterion fails.

use hookw::catalog::*;
use hookw::curves::{
    known_point_2b_sp, phi, satisfies_virasoro_relation, triality_lines, verify_trialities,
    verify_trialities_symbolic,
};
use hookw::exact::{int, rat, RatFunc, Var};
use hookw::liedata::{
    assemble_central_charge, central_charge, is_reduction_case, Family, HookFamily,
};
use hookw::spectra::*;
use num_integer::Integer;
use std::process::ExitCode;
use std::time::Instant;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn trialities() -> Result<String, String> {
    let mut checks = 0;
    for m in 0..=5u32 {
        for n in 0..=m {
            if n + m < 1 {
                continue;
            }
            let report = verify_trialities(n, m).map_err(err)?;
            ensure(report.all_pass(), || {
                format!("identity fails at (n, m) = ({n}, {m})")
            })?;
            checks += report.checks.len();
        }
    }
    let symbolic = verify_trialities_symbolic().map_err(err)?;
    ensure(symbolic.all_pass(), || "symbolic identity fails".into())?;
    Ok(format!(
        "{checks} integer checks, {} symbolic",
        symbolic.checks.len()
    ))
}

fn appendix_point() -> Result<String, String> {
    let p = known_point_2b_sp(&Var::N.into(), &Var::M.into(), &Var::R.into()).map_err(err)?;
    ensure(p.consistent, || {
        "curve value differs from the closed-form point".into()
    })?;
    Ok("trivariate identity".into())
}

fn central_charges() -> Result<String, String> {
    let mut count = 0;
    for family in Family::ALL {
        for n in 0..=4 {
            for m in 0..=4 {
                if !is_reduction_case(family, n, m) {
                    continue;
                }
                let f = HookFamily::new(family, n, m);
                let assembled = assemble_central_charge(&f).map_err(err)?;
                ensure(assembled == central_charge(&f), || format!("{f}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} family points"))
}

fn coincidences() -> Result<String, String> {
    let entries = all_coincidences();
    ensure(entries.len() == 48, || format!("{} entries", entries.len()))?;
    // The symbolic identities are independent; spread them over threads.
    let symbolic: Vec<Result<bool, String>> = std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .chunks(6)
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .iter()
                        .map(|e| verify_coincidence_symbolic(e).map_err(err))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    for (e, ok) in entries.iter().zip(symbolic) {
        ensure(ok?, || format!("{} fails symbolically", e.provenance()))?;
    }
    let (mut pass, mut skipped, mut undefined) = (0, 0, 0);
    for e in &entries {
        for n in 0..=4 {
            for m in 0..=4 {
                for r in e.kind.min_rank()..=4 {
                    match verify_coincidence(e, n, m, r).map_err(err)? {
                        CoincidenceOutcome::Pass => pass += 1,
                        CoincidenceOutcome::Skipped(_) => skipped += 1,
                        CoincidenceOutcome::Undefined(_) => undefined += 1,
                        fail => {
                            return Err(format!("{} at ({n}, {m}, {r}): {fail:?}", e.provenance()))
                        }
                    }
                }
            }
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            let report = verify_osp_osp(m, n).map_err(err)?;
            ensure(report.all_pass(), || format!("osp-osp fails at ({m}, {n})"))?;
        }
    }
    Ok(format!(
        "48 symbolic; sweep {pass} pass, {skipped} excluded, {undefined} undefined; osp-osp 9 pairs"
    ))
}

fn intersections() -> Result<String, String> {
    let (mut found, mut degenerate) = (0, 0);
    for n in 0..=1 {
        for m in 1..=2 {
            for r in 1..=2 {
                for kind in TargetKind::TABLE_KINDS {
                    if r < kind.min_rank() {
                        continue;
                    }
                    let report = intersection_oracle(Family::B2, kind, n, m, r).map_err(err)?;
                    let missing = report.missing();
                    ensure(missing.is_empty(), || {
                        format!("({n}, {m}, {r}) {kind}: missed {}", missing[0].provenance)
                    })?;
                    found += report.predicted.iter().filter(|p| p.found).count();
                    degenerate += report.predicted.iter().filter(|p| !p.found).count();
                }
            }
        }
    }
    Ok(format!(
        "{found} predicted points recovered, {degenerate} degenerate"
    ))
}

fn singular_weights() -> Result<String, String> {
    let mut count = 0;
    for kind in [ClassicalType::SoOdd, ClassicalType::Sp] {
        for object in [SingObject::Affine, SingObject::PrincipalW] {
            for n in 1..=4u32 {
                for v in 1..=6u32 {
                    for u in n + 1..=12 {
                        if u.gcd(&v) != 1 {
                            continue;
                        }
                        let g = sing_weight_general(kind, object, n, u, v).map_err(err)?;
                        let c = sing_weight_closed(kind, object, n, u, v).map_err(err)?;
                        ensure(g == c, || format!("{kind} {object} n={n} u={u} v={v}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} comparisons"))
}

fn virasoro() -> Result<String, String> {
    let curve = phi(&HookFamily::new(Family::C2, 0, 1)).map_err(err)?;
    ensure(satisfies_virasoro_relation(&curve), || {
        "relation fails".into()
    })?;
    Ok("identity in psi".into())
}

fn generator_types() -> Result<String, String> {
    let mut lines = 0;
    for m in 0..=5i64 {
        for n in 0..=m {
            if n + m < 1 {
                continue;
            }
            for line in triality_lines(&RatFunc::from_int(n), &RatFunc::from_int(m)) {
                let weights: Vec<i64> = line
                    .iter()
                    .map(|mem| {
                        let as_int = |x: &RatFunc| {
                            i64::try_from(x.as_constant().unwrap().to_integer()).unwrap()
                        };
                        generator_weight_formula(mem.family, as_int(&mem.n), as_int(&mem.m))
                    })
                    .collect();
                ensure(weights.iter().all(|w| *w == weights[0]), || {
                    format!("({n}, {m}) {}: {weights:?}", line[0])
                })?;
                lines += 1;
            }
        }
    }
    Ok(format!("{lines} lines"))
}

fn witnesses() -> Result<String, String> {
    let find = |fam: HookFamily, r: i64, th: WitnessTheorem| {
        let bounds = WitnessBounds {
            aux: r..=r,
            ..WitnessBounds::default()
        };
        rational_points(&fam, &bounds)
            .map_err(err)?
            .into_iter()
            .find(|w| w.theorem == th)
            .ok_or_else(|| format!("no {th} witness on {fam}"))
    };
    let w = find(
        HookFamily::new(Family::B2, 0, 1),
        1,
        WitnessTheorem::OspPrincipalSpA,
    )?;
    ensure(w.psi == rat(1, 8), || format!("psi = {}", w.psi))?;
    let w = find(
        HookFamily::new(Family::D1, 1, 1),
        1,
        WitnessTheorem::SubregularSp,
    )?;
    ensure(w.psi == rat(7, 4), || format!("psi = {}", w.psi))?;
    let gt = gelfand_tsetlin_factors(GtSeries::C, 1, 1).map_err(err)?;
    ensure(gt[0].levels == vec![rat(-7, 5), rat(-8, 5)], || {
        format!("{}", gt[0])
    })?;
    ensure(gt[0].levels[1] == int(-2) + rat(2, 5), || "s level".into())?;
    Ok("1/8, 7/4, (-7/5, -8/5)".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("triality identities", trialities),
        ("intersection-point identity", appendix_point),
        ("central-charge cross-check", central_charges),
        ("coincidence tables", coincidences),
        ("intersection discovery", intersections),
        ("singular weights", singular_weights),
        ("Virasoro quotient", virasoro),
        ("generating-type invariance", generator_types),
        ("witness spot-checks", witnesses),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
