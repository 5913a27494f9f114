//! Property-based invariants of the exact arithmetic kernel.

use hookw::exact::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// A polynomial in `psi` and `n` with small integer coefficients.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 0..5).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (a, b, c) in terms {
            let t = &MultiPoly::var(Var::Psi).pow(a) * &MultiPoly::var(Var::N).pow(b);
            p = &p + &t.scale(&int(c));
        }
        p
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| normalize(n, d).unwrap())
}

/// Integer coefficients (constant term first) of a polynomial in `psi` of
/// degree at least one.
fn unipoly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 2..6)
        .prop_filter("nonzero leading", |c| *c.last().unwrap() != 0)
}

/// Sylvester-matrix determinant by plain Gaussian elimination.
fn sylvester_resultant(p: &[i64], q: &[i64]) -> BigRat {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    if size == 0 {
        return BigRat::one();
    }
    let mut a = vec![vec![BigRat::zero(); size]; size];
    // Rows hold coefficients from the leading one down.
    for i in 0..n {
        for (j, c) in p.iter().rev().enumerate() {
            a[i][i + j] = int(*c);
        }
    }
    for i in 0..m {
        for (j, c) in q.iter().rev().enumerate() {
            a[n + i][i + j] = int(*c);
        }
    }
    let mut det = BigRat::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return BigRat::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            let f = &a[r][col] / &pv;
            if f.is_zero() {
                continue;
            }
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * y;
            }
        }
    }
    det
}

fn to_poly(coeffs: &[i64]) -> MultiPoly {
    UniPoly::from_ints(Var::Psi, coeffs).to_multi()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_are_commutative(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn associativity_and_distributivity(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverses(a in ratfunc()) {
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
        } else {
            prop_assert!(a.recip().is_err());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        // Multiplying numerator and denominator by a common factor changes nothing.
        let a = normalize(n.clone(), d.clone()).unwrap();
        let b = normalize(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        f in ratfunc(),
        g in ratfunc(),
        x in -6i64..=6,
        y in -6i64..=6,
    ) {
        let Ok(composed) = f.substitute(Var::Psi, &g) else { return Ok(()); };
        let point = [(Var::Psi, int(y)), (Var::N, int(x))];
        let Ok(inner) = g.eval_at(&point) else { return Ok(()); };
        let Ok(outer) = f.eval_at(&[(Var::Psi, inner), (Var::N, int(x))]) else { return Ok(()); };
        let lhs = composed.eval_at(&point);
        prop_assert_eq!(lhs, Ok(outer));
    }

    #[test]
    fn resultant_matches_sylvester_determinant(p in unipoly(), q in unipoly()) {
        let r = resultant(&to_poly(&p), &to_poly(&q), Var::Psi).unwrap();
        prop_assert_eq!(r.as_constant().unwrap_or_else(BigRat::zero), sylvester_resultant(&p, &q));
    }

    #[test]
    fn resultant_vanishes_on_common_root(p in unipoly(), q in unipoly(), root in -4i64..=4) {
        let factor = to_poly(&[-root, 1]);
        let r = resultant(&(&to_poly(&p) * &factor), &(&to_poly(&q) * &factor), Var::Psi).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn gcd_divides_and_is_divisible_by_common_factor(
        a in nonzero_poly(),
        b in nonzero_poly(),
        c in nonzero_poly(),
    ) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc);
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some(), "gcd {} misses factor {}", g, c);
    }

    #[test]
    fn rational_roots_are_roots(coeffs in unipoly()) {
        let u = UniPoly::from_ints(Var::Psi, &coeffs);
        for x in u.rational_roots().unwrap() {
            prop_assert!(u.eval(&x).is_zero());
        }
    }

    #[test]
    fn parse_round_trip(a in ratfunc()) {
        prop_assert_eq!(parse_ratfunc(&a.to_string()).unwrap(), a);
    }
}

mod domain {
    use hookw::catalog::*;
    use hookw::curves::verify_trialities;
    use hookw::liedata::{Family, HookFamily};
    use hookw::spectra::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn trialities_hold_at_random_points(n in 0u32..8, d in 0u32..8) {
            let m = n + d;
            prop_assume!(n + m >= 1);
            prop_assert!(verify_trialities(n, m).unwrap().all_pass());
        }

        #[test]
        fn singular_weight_formulas_agree(n in 1u32..8, u in 1u32..30, v in 1u32..12, sp in any::<bool>()) {
            prop_assume!(u.gcd(&v) == 1);
            let kind = if sp { ClassicalType::Sp } else { ClassicalType::SoOdd };
            for object in [SingObject::Affine, SingObject::PrincipalW] {
                prop_assert_eq!(
                    sing_weight_general(kind, object, n, u, v).unwrap(),
                    sing_weight_closed(kind, object, n, u, v).unwrap()
                );
            }
        }

        #[test]
        fn witnesses_recertify(idx in 0usize..6, a in 0u32..4, r_hi in 1i64..5) {
            let fam = match idx {
                0 => HookFamily::new(Family::B2, 0, a + 1),
                1 => HookFamily::new(Family::D1, 1, a + 1),
                2 => HookFamily::new(Family::D2, 1, a + 2),
                3 => HookFamily::new(Family::C2, a, 1),
                4 => HookFamily::new(Family::C2, a + 1, 0),
                _ => HookFamily::new(Family::C1, a + 1, 0),
            };
            let bounds = WitnessBounds { aux: 1..=r_hi, p: 1..=5, q: 1..=5, include_conjectural: true };
            for w in rational_points(&fam, &bounds).unwrap() {
                let check = verify_witness(&w).unwrap();
                prop_assert!(check.ok(), "{}: {:?}", w, check);
            }
        }

        #[test]
        fn coincidences_hold_at_random_points(i in 0usize..48, n in 0i64..7, m in 0i64..7, r in 1i64..7) {
            let e = &all_coincidences()[i];
            prop_assume!(r >= e.kind.min_rank());
            let out = verify_coincidence(e, n, m, r).unwrap();
            prop_assert!(!out.is_fail(), "{} at ({}, {}, {}): {:?}", e, n, m, r, out);
        }
    }
}
