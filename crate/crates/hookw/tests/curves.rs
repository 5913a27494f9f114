use hookw::curves::*;
use hookw::exact::{int, rat, rf, BigRat, RatFunc, Var};
use hookw::liedata::{central_charge, Family, HookFamily};

fn fam(tag: &str, n: u32, m: u32) -> HookFamily {
    HookFamily::new(tag.parse().unwrap(), n, m)
}

fn at(f: &RatFunc, psi: BigRat) -> BigRat {
    f.eval_at(&[(Var::Psi, psi)]).unwrap()
}

#[test]
fn factor_checksums_at_origin() {
    let [f, g, h] = phi_2b_factors();
    let ev = |p: &hookw::exact::MultiPoly| {
        p.eval(&|v| match v {
            Var::Psi => Some(int(1)),
            Var::N | Var::M => Some(int(0)),
            _ => None,
        })
        .unwrap()
    };
    assert_eq!(ev(&f), int(-147));
    assert_eq!(ev(&g), int(-21));
    assert_eq!(ev(&h), int(-49));
    let c = phi_2b(&RatFunc::zero(), &RatFunc::zero()).unwrap();
    assert_eq!(at(&c.lambda, int(1)), rat(2, 49));
    assert_eq!(c.c, rf("1/2"));
}

#[test]
fn central_charge_spot_value() {
    let c = phi_2b(&RatFunc::one(), &RatFunc::one()).unwrap();
    assert_eq!(at(&c.c, int(1)), rat(-25, 2));
}

#[test]
fn curve_charges_match_closed_forms() {
    for family in Family::ALL {
        for n in 0..=3 {
            for m in 0..=3 {
                let f = HookFamily::new(family, n, m);
                match phi(&f) {
                    Ok(curve) => assert_eq!(curve.c, central_charge(&f), "{f}"),
                    Err(_) => {
                        // Only the three c ≡ 1 points lack a λ.
                        let degenerate = matches!(
                            (family, n, m),
                            (Family::D2, 1, 0) | (Family::O1, 0, 0) | (Family::B1, 0, 0)
                        );
                        assert!(degenerate, "{f}");
                        assert_eq!(central_charge(&f), RatFunc::one());
                    }
                }
            }
        }
    }
}

#[test]
fn special_points() {
    assert_eq!(phi(&fam("1C", 0, 0)).unwrap().c, RatFunc::zero());
    let b = phi(&fam("2B", 0, 0)).unwrap();
    assert_eq!(b.c, rf("1/2"));
    assert_eq!(b.lambda, rf("2/49"));
}

#[test]
fn virasoro_curve_relation() {
    assert!(satisfies_virasoro_relation(&phi(&fam("2C", 0, 1)).unwrap()));
    assert!(!satisfies_virasoro_relation(
        &phi(&fam("2C", 0, 2)).unwrap()
    ));
}

#[test]
fn trialities_integer_sweep() {
    for m in 1..=5 {
        for n in 0..=m {
            let report = verify_trialities(n, m).unwrap();
            assert_eq!(report.checks.len(), 8);
            for check in &report.checks {
                assert!(check.holds, "n={n} m={m}: {} vs {}", check.lhs, check.rhs);
            }
        }
    }
}

#[test]
fn trialities_symbolic() {
    let report = verify_trialities_symbolic().unwrap();
    assert!(
        report.all_pass(),
        "{:?}",
        report
            .checks
            .iter()
            .filter(|c| !c.holds)
            .collect::<Vec<_>>()
    );
}

#[test]
fn triality_out_of_range() {
    assert!(verify_trialities(2, 1).is_err());
    assert!(verify_trialities(0, 0).is_err());
}

#[test]
fn perturbed_curve_fails_line_one() {
    let perturbed = |mem: &TrialityMember| {
        let mut curve = member_curve(mem)?;
        if mem.family == Family::B2 {
            curve.lambda = &curve.lambda + &RatFunc::one();
        }
        Ok(curve)
    };
    let report = verify_trialities_with(&int(1).into(), &int(2).into(), &perturbed).unwrap();
    let line1: Vec<_> = report.checks.iter().filter(|c| c.line == 1).collect();
    assert!(line1.iter().any(|c| !c.holds));
    let failing = line1.iter().find(|c| !c.holds).unwrap();
    assert_eq!(failing.lambda_difference, Some(RatFunc::one()));
    assert!(report.checks.iter().filter(|c| c.line > 1).all(|c| c.holds));
}

#[test]
fn known_point_numeric() {
    let p = known_point_2b_sp(&1.into(), &1.into(), &1.into()).unwrap();
    assert_eq!(p.point.c, rf("-7/20"));
    assert!(p.consistent);
    let p = known_point_2b_sp(&0.into(), &0.into(), &1.into()).unwrap();
    assert_eq!(p.point.c, rf("1/2"));
    assert_eq!(p.psi_star, rf("1/6"));
    assert!(p.consistent);
}

#[test]
fn known_point_symbolic() {
    let p = known_point_2b_sp(&Var::N.into(), &Var::M.into(), &Var::R.into()).unwrap();
    assert!(p.consistent);
}

#[test]
fn intersect_rejects_symbolic_curves() {
    let sym = phi_symbolic(Family::B2).unwrap();
    let b = phi(&fam("2C", 0, 1)).unwrap();
    assert!(intersect(&sym, &b).is_err());
}

#[test]
fn intersect_example_point() {
    let a = phi(&fam("2B", 0, 1)).unwrap();
    let b = phi(&fam("2C", 0, 1)).unwrap();
    let r = intersect(&a, &b).unwrap();
    assert!(
        r.points
            .iter()
            .any(|p| p.psi1 == rat(1, 8) && p.psi2 == rat(3, 8)),
        "{:?}",
        r.points
    );
    for p in &r.points {
        assert_eq!(a.at(&p.psi1).unwrap(), b.at(&p.psi2).unwrap());
    }
}

#[test]
fn intersect_self_reports_diagonal() {
    let a = phi(&fam("2C", 0, 2)).unwrap();
    let r = intersect(&a, &a).unwrap();
    assert!(r.identity_component.is_some());
    assert!(r.contains_diagonal);
}

#[test]
fn intersect_is_symmetric() {
    let a = phi(&fam("2B", 0, 1)).unwrap();
    let b = phi(&fam("2C", 0, 1)).unwrap();
    let ab = intersect(&a, &b).unwrap();
    let ba = intersect(&b, &a).unwrap();
    let mut swapped: Vec<_> = ba
        .points
        .iter()
        .map(|p| (p.psi2.clone(), p.psi1.clone()))
        .collect();
    swapped.sort();
    let direct: Vec<_> = ab
        .points
        .iter()
        .map(|p| (p.psi1.clone(), p.psi2.clone()))
        .collect();
    assert_eq!(direct, swapped);
}

#[test]
fn reparametrize_matches_member() {
    let base = phi(&fam("2B", 2, 3)).unwrap();
    let moved = base.reparametrize(&rf("psi/(2psi - 1)")).unwrap();
    let mem = TrialityMember {
        family: Family::B2,
        n: 2.into(),
        m: 3.into(),
        psi: rf("psi/(2psi - 1)"),
    };
    assert_eq!(moved.c, member_curve(&mem).unwrap().c);
    assert_eq!(moved.lambda, member_curve(&mem).unwrap().lambda);
}
