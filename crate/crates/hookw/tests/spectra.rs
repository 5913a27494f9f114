use hookw::curves::triality_lines;
use hookw::exact::{int, rat, RatFunc};
use hookw::liedata::HookFamily;
use hookw::spectra::*;
use num_integer::Integer;

const KINDS: [ClassicalType; 2] = [ClassicalType::SoOdd, ClassicalType::Sp];
const OBJECTS: [SingObject; 2] = [SingObject::Affine, SingObject::PrincipalW];

#[test]
fn general_formula_examples() {
    let g = |k, o, n, u, v| sing_weight_general(k, o, n, u, v).unwrap();
    assert_eq!(g(ClassicalType::Sp, SingObject::Affine, 1, 3, 1), int(2));
    // (u, v) = (4, 2) is not coprime: rejected, but the formula still evaluates.
    assert!(sing_weight_general(ClassicalType::SoOdd, SingObject::Affine, 2, 4, 2).is_err());
    let value = sing_weight_general_unchecked(ClassicalType::SoOdd, SingObject::Affine, 2, 4, 2);
    assert_eq!(value.unwrap(), int(1));
    assert_eq!(
        g(ClassicalType::Sp, SingObject::PrincipalW, 2, 5, 3),
        int(0)
    );
}

#[test]
fn closed_form_examples() {
    let c = |k, o, n, u, v| sing_weight_closed(k, o, n, u, v).unwrap();
    assert_eq!(c(ClassicalType::Sp, SingObject::Affine, 2, 5, 3), int(9));
    assert_eq!(c(ClassicalType::SoOdd, SingObject::Affine, 2, 5, 2), int(2));
    assert_eq!(
        sing_weight_closed_unchecked(ClassicalType::SoOdd, SingObject::PrincipalW, 1, 3, 3),
        int(6)
    );
    assert!(sing_weight_closed(ClassicalType::SoOdd, SingObject::PrincipalW, 1, 3, 3).is_err());
}

#[test]
fn general_equals_closed_on_sweep() {
    for kind in KINDS {
        for object in OBJECTS {
            for n in 1..=4u32 {
                for v in 1..=6u32 {
                    for u in n + 1..=12 {
                        if u.gcd(&v) != 1 {
                            continue;
                        }
                        assert_eq!(
                            sing_weight_general(kind, object, n, u, v).unwrap(),
                            sing_weight_closed(kind, object, n, u, v).unwrap(),
                            "{kind} {object} n={n} u={u} v={v}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn rejects_bad_levels() {
    assert!(sing_weight_general(ClassicalType::Sp, SingObject::Affine, 2, 4, 2).is_err());
    assert!(sing_weight_closed(ClassicalType::Sp, SingObject::Affine, 0, 3, 1).is_err());
}

#[test]
fn pairing_table_matches_coordinates() {
    for n in 1..=6u32 {
        let ni = n as i64;
        let so = RootSystemData::new(ClassicalType::SoOdd, n).unwrap();
        assert_eq!(
            so.pairing_table(),
            [int(2 * ni - 2), int(2 * ni - 1), int(2 * ni - 1), int(ni)]
        );
        let sp = RootSystemData::new(ClassicalType::Sp, n).unwrap();
        assert_eq!(
            sp.pairing_table(),
            [int(ni), int(2 * ni - 1), int(2 * ni - 1), int(2 * ni - 2)]
        );
    }
}

#[test]
fn weyl_vectors_are_half_sums_from_rank_two() {
    for kind in KINDS {
        for n in 2..=6 {
            let d = RootSystemData::new(kind, n).unwrap();
            assert_eq!(d.half_sum_positive_roots(), d.rho, "{kind} {n}");
            assert_eq!(d.half_sum_positive_coroots(), d.rho_vee, "{kind} {n}");
            // θ is long, θ_s short, with the standard normalisation.
            assert_eq!(d.theta.dot(&d.theta), int(2));
            assert_eq!(d.theta_s.dot(&d.theta_s), int(1));
            assert_eq!(d.positive_roots().len(), (n * n) as usize);
        }
    }
}

#[test]
fn dual_coxeter_from_weyl_vector() {
    // h^∨ = 1 + (ρ, θ^∨) for θ the highest root.
    for kind in KINDS {
        for n in 2..=5 {
            let d = RootSystemData::new(kind, n).unwrap();
            let h = int(1) + d.rho.dot(&d.theta.coroot());
            assert_eq!(h, int(d.dual_coxeter as i64));
        }
    }
}

#[test]
fn lambda_bar_is_multiple_of_highest_root() {
    let d = RootSystemData::new(ClassicalType::SoOdd, 3).unwrap();
    assert_eq!(lambda_bar(&d, 7, 3), d.theta.scale(&int(7 - 4)));
    let d = RootSystemData::new(ClassicalType::Sp, 3).unwrap();
    assert_eq!(lambda_bar(&d, 7, 2), d.theta_s.scale(&int(7 - 5)));
    assert_eq!(d.rho.dot(&d.theta_s), rat(5, 2));
}

fn fam(tag: &str, n: u32, m: u32) -> HookFamily {
    HookFamily::new(tag.parse().unwrap(), n, m)
}

#[test]
fn max_generator_weight_examples() {
    assert_eq!(max_generator_weight(&fam("2B", 1, 1)).unwrap(), 14);
    assert_eq!(max_generator_weight(&fam("1B", 1, 0)).unwrap(), 18);
    assert_eq!(max_generator_weight(&fam("1O", 0, 1)).unwrap(), 8);
    assert!(max_generator_weight(&fam("2B", 0, 0)).is_err());
}

fn as_int(x: &RatFunc) -> i64 {
    let c = x.as_constant().unwrap();
    assert!(c.is_integer());
    i64::try_from(c.to_integer()).unwrap()
}

#[test]
fn generator_weight_triality_invariance() {
    for m in 1..=5i64 {
        for n in 0..=m {
            for line in triality_lines(&n.into(), &m.into()) {
                let w: Vec<i64> = line
                    .iter()
                    .map(|mem| generator_weight_formula(mem.family, as_int(&mem.n), as_int(&mem.m)))
                    .collect();
                assert!(
                    w.iter().all(|&x| x == w[0]),
                    "n={n} m={m} {:?}",
                    line[0].family
                );
            }
        }
    }
}
