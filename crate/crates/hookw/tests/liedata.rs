use hookw::exact::{int, rat, rf, Var};
use hookw::liedata::*;

fn fam(tag: &str, n: u32, m: u32) -> HookFamily {
    HookFamily::new(tag.parse().unwrap(), n, m)
}

#[test]
fn dual_coxeter_examples() {
    let osp12 = AlgebraDesc::Osp {
        m: 1,
        n: 1,
        norm: OspNorm::TypeC,
    };
    assert_eq!(dual_coxeter(&osp12), rat(3, 2));
    assert_eq!(dual_coxeter(&AlgebraDesc::Sp(2)), int(3));
    let osp30 = AlgebraDesc::Osp {
        m: 3,
        n: 0,
        norm: OspNorm::TypeB,
    };
    assert_eq!(dual_coxeter(&osp30), int(1));
}

#[test]
fn sdim_examples() {
    let osp = |m, n| AlgebraDesc::Osp {
        m,
        n,
        norm: OspNorm::TypeC,
    };
    assert_eq!(sdim(&osp(1, 1)), int(1));
    assert_eq!(sdim(&AlgebraDesc::Sp(1)), int(3));
    assert_eq!(sdim(&osp(3, 1)), int(0));
    assert_eq!(sdim(&AlgebraDesc::SoOdd(3)), int(21));
}

#[test]
fn descriptor_text() {
    assert_eq!(AlgebraDesc::SoOdd(3).to_string(), "so(7)");
    assert_eq!(AlgebraDesc::Sp(2).to_string(), "sp(4)");
    let o = AlgebraDesc::Osp {
        m: 1,
        n: 2,
        norm: OspNorm::TypeC,
    };
    assert_eq!(o.to_string(), "osp(1|4)");
}

#[test]
fn ghost_charges() {
    assert_eq!(ghost_central_charge(1).unwrap(), int(0));
    assert_eq!(ghost_central_charge(2).unwrap(), rat(1, 2));
    assert_eq!(ghost_central_charge(3).unwrap(), int(-2));
    assert!(ghost_central_charge(0).is_err());
}

#[test]
fn closed_form_examples() {
    let c = central_charge(&fam("2B", 1, 1));
    assert_eq!(c.eval_at(&[(Var::Psi, int(1))]).unwrap(), rat(-25, 2));
    assert_eq!(central_charge(&fam("1C", 0, 0)), rf("0"));
    assert_eq!(central_charge(&fam("2B", 0, 0)), rf("1/2"));
}

#[test]
fn assembled_equals_closed_form() {
    for family in Family::ALL {
        for n in 0..=4 {
            for m in 0..=4 {
                if !is_reduction_case(family, n, m) {
                    continue;
                }
                let f = HookFamily::new(family, n, m);
                assert_eq!(
                    assemble_central_charge(&f).unwrap(),
                    central_charge(&f),
                    "{f}"
                );
            }
        }
    }
}

#[test]
fn assemble_rejects_non_reduction_cases() {
    assert!(assemble_central_charge(&fam("2C", 1, 0)).is_err());
    assert!(assemble_central_charge(&fam("1B", 0, 0)).is_err());
}

#[test]
fn affine_levels() {
    assert_eq!(affine_subalgebra_level(&fam("2B", 2, 3)), rf("-2psi - 2"));
    assert_eq!(
        affine_subalgebra_level(&fam("1C", 1, 1)),
        rf("-psi/2 - 3/2")
    );
    assert_eq!(affine_subalgebra_level(&fam("2C", 1, 4)), rf("psi - 5/2"));
    for family in Family::ALL {
        for n in 0..=4 {
            for m in 0..=4 {
                assert!(t_matches_level_rule(&HookFamily::new(family, n, m)).unwrap());
            }
        }
    }
}

#[test]
fn principal_charges_agree() {
    for m in 1..=6 {
        assert_eq!(
            central_charge(&fam("1C", 0, m)),
            central_charge(&fam("1D", 0, m))
        );
        assert_eq!(
            central_charge(&fam("2C", 0, m)),
            central_charge(&fam("2D", 0, m))
        );
    }
}

#[test]
fn level_dictionary_h_dual() {
    let expect = [
        ("1B", int(2 * 2 + 2 * 3)),
        ("1C", int(2 * 3 - 2 * 2 - 1)),
        ("1D", int(2 * 2 + 2 * 3 - 1)),
        ("1O", int(2 * 3 - 2 * 2)),
        ("2B", rat(3, 2)),
        ("2C", int(6)),
        ("2D", int(2)),
        ("2O", rat(11, 2)),
    ];
    for (tag, h) in expect {
        let f = fam(tag, 2, 3);
        let d = f.level_dictionary().unwrap();
        assert_eq!(d.h_dual_g, h, "{tag}");
        assert_eq!(d.h_dual_g, f.g().unwrap().dual_coxeter(), "{tag}");
    }
}

#[test]
fn describe_examples() {
    let d = describe(&fam("2C", 0, 2)).unwrap();
    assert_eq!(d.kind, AlgebraKind::Principal);
    assert_eq!(d.w_algebra, "W^{psi - 3}(sp(4))");
    let d = describe(&fam("1D", 1, 2)).unwrap();
    assert_eq!(d.kind, AlgebraKind::Subregular);
    assert_eq!(d.w_algebra, "W^{psi - 5}(so(7), f_subreg)");
    assert_eq!(d.affine_part.as_deref(), Some("H(1)"));
    assert!(d.orbifold);
    let d = describe(&fam("2B", 0, 0)).unwrap();
    assert_eq!(d.w_algebra, "F(1)");
    assert_eq!(d.coset, "F(1)^Z2");
    let d = describe(&fam("1C", 0, 0)).unwrap();
    assert_eq!(d.coset, "C");
    let d = describe(&fam("2B", 2, 0)).unwrap();
    assert_eq!(d.kind, AlgebraKind::AffineTimesFreeField);
    assert_eq!(d.w_algebra, "V^{-2*psi - 3}(so(5)) ⊗ F(5)");
    let d = describe(&fam("1O", 2, 0)).unwrap();
    assert!(!d.orbifold);
    let d = describe(&fam("2C", 2, 1)).unwrap();
    assert_eq!(d.kind, AlgebraKind::Minimal);
    assert!(!d.orbifold);
}

#[test]
fn generator_profiles() {
    assert_eq!(
        generator_profile(&fam("2C", 1, 1)).unwrap().to_string(),
        "W(1^3, 2, (3/2)^2)"
    );
    let p = generator_profile(&fam("1B", 0, 1)).unwrap();
    assert_eq!(p.weights(), vec![int(2), int(2)]);
    assert_eq!(
        generator_profile(&fam("1C", 1, 0)).unwrap().to_string(),
        "W(1^3, 1^2)"
    );
}
