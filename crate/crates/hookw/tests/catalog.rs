use hookw::catalog::*;
use hookw::curves::phi_general;
use hookw::exact::{int, rat, rf, BigRat, RatFunc, Var};
use hookw::liedata::{AlgebraDesc, Family, HookFamily};
use std::collections::BTreeMap;

fn entry(source: &str, kind: TargetKind, item: u8) -> CoincidenceEntry {
    coincidence_table(source.parse().unwrap(), kind)
        .unwrap()
        .into_iter()
        .find(|e| e.item == item)
        .unwrap()
}

#[test]
fn table_sizes() {
    let all = all_coincidences();
    assert_eq!(all.len(), 48);
    let mut counts: BTreeMap<(String, TargetKind), usize> = BTreeMap::new();
    for e in &all {
        *counts.entry((e.source.to_string(), e.kind)).or_default() += 1;
    }
    assert_eq!(counts.len(), 12);
    for ((_, kind), n) in counts {
        let expected = if kind == TargetKind::Sp { 6 } else { 3 };
        assert_eq!(n, expected);
    }
    assert!(coincidence_table(Family::C1, TargetKind::Sp).is_err());
    assert!(coincidence_table(Family::B2, TargetKind::SoOdd).is_err());
}

#[test]
fn transcribed_entries() {
    let e = entry("2B", TargetKind::Sp, 6);
    assert_eq!(e.psi, rf("(2m-2n-1)/(4(m+r))"));
    assert_eq!(e.s, rf("-(r+1) + (1+2n+2r)/(4(m+r))"));
    let e = entry("1D", TargetKind::SoEven, 2);
    assert_eq!(e.psi, rf("(m+n)/(m+r)"));
    assert_eq!(e.s, rf("-(2r-2) + (r-n)/(m+r)"));
    let e = entry("1D", TargetKind::Osp, 3);
    assert_eq!(e.psi, rf("2(m+n-r)/(1+2m-2r)"));
    assert_eq!(e.s, rf("-(r+1/2) + (r-m-n)/(2r-2m-1)"));
    let e = entry("1B", TargetKind::Sp, 4);
    assert_eq!(e.exclusions.len(), 1);
    assert_eq!(e.exclusions[0].to_string(), "r != n");
}

#[test]
fn dictionary_matches_family_levels() {
    // The specialization's affine level k(ψ) is ψ − shift, i.e. the level s.
    for kind in [
        TargetKind::Sp,
        TargetKind::SoEven,
        TargetKind::Osp,
        TargetKind::SoOdd,
    ] {
        let dict = kind.dictionary();
        for r in 2..=4 {
            let m = dict.m_of_r.eval_at(&[(Var::R, int(r))]).unwrap();
            let fam = HookFamily::new(dict.family, 0, m.to_integer().try_into().unwrap());
            let levels = fam.level_dictionary().unwrap();
            let shift = kind.shift().eval_at(&[(Var::R, int(r))]).unwrap();
            assert_eq!(
                levels.k_of_psi(),
                &RatFunc::var(Var::Psi) - &RatFunc::constant(shift),
                "{kind} r={r}"
            );
            assert_eq!(
                dict.psi_of_s.specialize(&[(Var::R, int(r))]).unwrap(),
                &RatFunc::var(Var::S)
                    + &RatFunc::constant(kind.shift().eval_at(&[(Var::R, int(r))]).unwrap())
            );
        }
    }
}

#[test]
fn coincidence_examples() {
    let e = entry("2B", TargetKind::Sp, 6);
    let point = [(Var::N, int(0)), (Var::M, int(1)), (Var::R, int(1))];
    assert_eq!(e.psi.eval_at(&point).unwrap(), rat(1, 8));
    assert_eq!(e.s.eval_at(&point).unwrap(), rat(-13, 8));
    assert_eq!(e.target_psi().eval_at(&point).unwrap(), rat(3, 8));
    assert_eq!(
        verify_coincidence(&e, 0, 1, 1).unwrap(),
        CoincidenceOutcome::Pass
    );

    let e = entry("1B", TargetKind::Sp, 4);
    assert_eq!(
        verify_coincidence(&e, 1, 0, 1).unwrap(),
        CoincidenceOutcome::Skipped("r != n".into())
    );

    let mut tampered = entry("2B", TargetKind::Sp, 6);
    tampered.s = &tampered.s + &RatFunc::one();
    assert!(verify_coincidence(&tampered, 0, 1, 1).unwrap().is_fail());
    assert!(!verify_coincidence_symbolic(&tampered).unwrap());
}

#[test]
fn coincidence_rejects_bad_ranges() {
    let e = entry("1D", TargetKind::SoEven, 2);
    assert!(verify_coincidence(&e, 0, 0, 1).is_err());
    assert!(verify_coincidence(&e, -1, 0, 2).is_err());
}

#[test]
fn coincidence_sweep() {
    let mut passes = 0;
    for e in all_coincidences() {
        for n in 0..=4 {
            for m in 0..=4 {
                for r in e.kind.min_rank()..=4 {
                    let out = verify_coincidence(&e, n, m, r).unwrap();
                    assert!(!out.is_fail(), "{e} at ({n},{m},{r}): {out:?}");
                    passes += (out == CoincidenceOutcome::Pass) as usize;
                }
            }
        }
    }
    assert!(passes > 3000, "only {passes} passing points");
}

#[test]
fn coincidence_symbolic() {
    for e in all_coincidences() {
        assert!(verify_coincidence_symbolic(&e).unwrap(), "{e}");
    }
}

#[test]
fn osp_osp_pairs() {
    let report = verify_osp_osp(1, 2).unwrap();
    assert_eq!(report.c, rat(-5, 2));
    assert!(!report.degenerate);
    assert!(report.all_pass());
    assert!(report
        .checks
        .iter()
        .any(|c| c.k == rat(-3, 2) + rat(3, 2) && c.l == rat(-5, 2) + rat(3, 4)));

    let report = verify_osp_osp(1, 1).unwrap();
    assert_eq!(report.c, int(0));
    assert!(report.degenerate);

    for m in 1..=3 {
        for n in 1..=3 {
            assert!(verify_osp_osp(m, n).unwrap().all_pass(), "({m},{n})");
        }
    }
    assert!(verify_osp_osp(0, 0).is_err());
}

#[test]
fn osp_osp_charge_symbolic() {
    let n = RatFunc::var(Var::N);
    for m in 1..=3i64 {
        let mm = RatFunc::from_int(m);
        let psi = (&mm + &n).checked_div(&RatFunc::from_int(2 * m)).unwrap();
        let curve = phi_general(Family::B2, &RatFunc::zero(), &mm, Some(&psi)).unwrap();
        assert_eq!(curve.c, osp_osp_central_charge(&mm, &n).unwrap(), "m={m}");
    }
}

fn fam(tag: &str, n: u32, m: u32) -> HookFamily {
    HookFamily::new(tag.parse().unwrap(), n, m)
}

fn bounds(aux: std::ops::RangeInclusive<i64>) -> WitnessBounds {
    WitnessBounds {
        aux,
        ..WitnessBounds::default()
    }
}

#[test]
fn witness_examples() {
    let ws = rational_points(&fam("2B", 0, 1), &bounds(1..=1)).unwrap();
    let w = ws
        .iter()
        .find(|w| w.theorem == WitnessTheorem::OspPrincipalSpA)
        .unwrap();
    assert_eq!(w.psi, rat(1, 8));
    assert_eq!(w.conditions, vec![Condition::Coprime(2, 3)]);
    assert_eq!(w.conditions[0].to_string(), "gcd(2,3)=1");
    let partner = w.partner.as_ref().unwrap();
    assert_eq!(partner.algebra_name(), "sp(2)");
    assert_eq!(partner.s, rat(-13, 8));
    assert_eq!(w.status, WitnessStatus::Certified);

    let ws = rational_points(&fam("1D", 1, 1), &bounds(1..=1)).unwrap();
    let w = ws
        .iter()
        .find(|w| w.theorem == WitnessTheorem::SubregularSp)
        .unwrap();
    assert_eq!(w.psi, rat(7, 4));
    assert_eq!(w.conditions[0].to_string(), "gcd(2,3)=1");

    let ws = rational_points(&fam("2C", 1, 1), &bounds(2..=2)).unwrap();
    let w = ws
        .iter()
        .find(|w| w.theorem == WitnessTheorem::MinimalSp)
        .unwrap();
    assert_eq!(w.psi, rat(9, 2));
    assert_eq!(w.partner.as_ref().unwrap().s, int(-3) + rat(4, 9));
}

#[test]
fn witness_errors_and_gating() {
    assert!(matches!(
        rational_points(&fam("1O", 1, 1), &WitnessBounds::default()),
        Err(hookw::Error::NoTheorem(_))
    ));
    let plain = rational_points(&fam("2B", 0, 2), &WitnessBounds::default()).unwrap();
    assert!(plain.iter().all(|w| w.status == WitnessStatus::Certified));
    let all = rational_points(
        &fam("2B", 0, 2),
        &WitnessBounds {
            include_conjectural: true,
            ..WitnessBounds::default()
        },
    )
    .unwrap();
    assert!(all.len() > plain.len());
    assert!(all
        .iter()
        .filter(|w| w.theorem.is_conjectural())
        .all(|w| w.status == WitnessStatus::Conjectural));
}

#[test]
fn witnesses_recertify() {
    let families = [
        fam("2B", 0, 1),
        fam("2B", 0, 2),
        fam("2B", 0, 3),
        fam("1D", 1, 1),
        fam("1D", 1, 3),
        fam("2D", 1, 2),
        fam("2D", 1, 4),
        fam("2C", 0, 1),
        fam("2C", 2, 1),
        fam("2C", 2, 0),
        fam("1C", 1, 0),
        fam("1C", 2, 0),
    ];
    let b = WitnessBounds {
        aux: 1..=4,
        p: 1..=6,
        q: 1..=6,
        include_conjectural: true,
    };
    let mut curve_checked = 0;
    for f in &families {
        for w in rational_points(f, &b).unwrap() {
            let check = verify_witness(&w).unwrap_or_else(|e| panic!("{w}: {e}"));
            assert!(check.ok(), "{w}: {check:?}");
            curve_checked += check.curve_matches.is_some() as usize;
        }
    }
    assert!(curve_checked > 50);

    // A tampered witness no longer matches its theorem.
    let mut w = rational_points(&fam("2B", 0, 1), &bounds(1..=1))
        .unwrap()
        .remove(0);
    w.psi += BigRat::from_integer(1.into());
    let check = verify_witness(&w).unwrap();
    assert!(!check.formula_matches);
    assert_eq!(check.curve_matches, Some(false));
}

#[test]
fn gelfand_tsetlin_examples() {
    let c = gelfand_tsetlin_factors(GtSeries::C, 1, 1).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].levels, vec![rat(-7, 5), rat(-8, 5)]);

    let d = gelfand_tsetlin_factors(GtSeries::D, 1, 3).unwrap();
    let kinds: Vec<GtFactorKind> = d.iter().map(|f| f.kind).collect();
    assert_eq!(
        kinds,
        vec![
            GtFactorKind::Heisenberg,
            GtFactorKind::D(1),
            GtFactorKind::E(1)
        ]
    );
    assert_eq!(d[1].target, Some((TargetKind::Osp, 1)));
    assert_eq!(d[1].levels, vec![rat(-3, 2) + rat(2, 3)]);

    let b = gelfand_tsetlin_factors(GtSeries::B, 1, 2).unwrap();
    let kinds: Vec<GtFactorKind> = b.iter().map(|f| f.kind).collect();
    assert_eq!(kinds, vec![GtFactorKind::Heisenberg, GtFactorKind::D(1)]);
    assert_eq!(b[1].target, Some((TargetKind::SoEven, 1)));
    assert_eq!(b[1].levels, vec![rat(2, 3)]);

    let b3 = gelfand_tsetlin_factors(GtSeries::B, 3, 4).unwrap();
    assert_eq!(b3.len(), 1 + 3 + 2);
    assert!(gelfand_tsetlin_factors(GtSeries::C, 0, 1).is_err());
}

#[test]
fn gelfand_tsetlin_c_matches_coset_level() {
    // The outermost factor reproduces the coset level −(k+1) + (1+n+k)/(1+2n+2k).
    for n in 1..=5 {
        for k in 1..=5 {
            let f = gelfand_tsetlin_factors(GtSeries::C, n, k).unwrap();
            let (n, k) = (n as i64, k as i64);
            assert_eq!(
                f[0].levels[0],
                int(-(k + 1)) + rat(1 + n + k, 1 + 2 * n + 2 * k)
            );
        }
    }
}

#[test]
fn gelfand_tsetlin_chain_curves() {
    let mut checked = 0;
    for series in [GtSeries::B, GtSeries::D] {
        for n in 1..=3 {
            for k in 1..=7 {
                for f in gelfand_tsetlin_factors(series, n, k).unwrap() {
                    if let Some(res) = verify_gt_factor(&f, k) {
                        assert!(res.unwrap(), "{series} n={n} k={k}: {f}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 30);
}

#[test]
fn admissibility_examples() {
    let sp2 = AlgebraDesc::Sp(1);
    assert!(matches!(
        is_admissible_nondegenerate(&sp2, &(int(-2) + rat(3, 8))),
        Admissibility::Yes {
            theorem: WitnessTheorem::OspPrincipalSpA,
            parameter: 1
        }
    ));
    assert!(matches!(
        is_admissible_nondegenerate(&sp2, &(int(-2) + rat(3, 6))),
        Admissibility::No(_)
    ));
    assert_eq!(
        is_admissible_nondegenerate(&AlgebraDesc::SoEven(2), &(int(-2) + rat(7, 11))),
        Admissibility::Unknown
    );
    assert_eq!(
        is_admissible_nondegenerate(&AlgebraDesc::SoOdd(2), &(int(-3) + rat(7, 2))),
        Admissibility::Unknown
    );
}

#[test]
fn admissibility_agrees_with_witnesses() {
    // Every certified witness with a sp/so partner yields a "yes" for its partner level.
    for f in [
        fam("2B", 0, 1),
        fam("2B", 0, 2),
        fam("1D", 1, 2),
        fam("2C", 1, 1),
        fam("2C", 2, 0),
    ] {
        for w in rational_points(&f, &WitnessBounds::default()).unwrap() {
            let Some(p) = &w.partner else { continue };
            let alg = match p.algebra {
                PartnerAlgebra::W {
                    kind: TargetKind::Sp,
                    rank,
                } => AlgebraDesc::Sp(rank as u32),
                PartnerAlgebra::W {
                    kind: TargetKind::SoEven,
                    rank,
                } if rank >= 2 => AlgebraDesc::SoEven(rank as u32),
                _ => continue,
            };
            assert!(
                matches!(
                    is_admissible_nondegenerate(&alg, &p.s),
                    Admissibility::Yes { .. }
                ),
                "{w}"
            );
        }
    }
}

#[test]
fn intersection_rediscovers_entries() {
    let mut found = 0;
    for n in 0..=1 {
        for m in 1..=2 {
            for r in 1..=2 {
                for kind in TargetKind::TABLE_KINDS {
                    if r < kind.min_rank() {
                        continue;
                    }
                    let report = intersection_oracle(Family::B2, kind, n, m, r).unwrap();
                    assert!(
                        report.missing().is_empty(),
                        "{n} {m} {r} {kind}: {:?}",
                        report.missing()
                    );
                    found += report.predicted.iter().filter(|p| p.found).count();
                }
            }
        }
    }
    assert!(found > 20, "{found}");
}
