//! Oracle tests for the exact arithmetic kernel.

use hookw::exact::*;

fn psi() -> RatFunc {
    RatFunc::var(Var::Psi)
}

#[test]
fn normalize_cancels_common_factor() {
    let num = rf("2*psi^2 - 2").num().clone();
    let den = rf("2*psi - 2").num().clone();
    let r = normalize(num, den).unwrap();
    assert_eq!(r.to_string(), "psi + 1");
    assert!(r.den().as_constant().unwrap() == int(1));
}

#[test]
fn normalize_zero_and_sign() {
    let r = normalize(MultiPoly::zero(), MultiPoly::var(Var::Psi)).unwrap();
    assert_eq!(r, RatFunc::zero());
    assert_eq!(r.to_string(), "0");
    let r = normalize(rf("-psi").num().clone(), rf("-2*psi + 1").num().clone()).unwrap();
    assert_eq!(r.to_string(), "(psi)/(2*psi - 1)");
    assert_eq!(
        normalize(MultiPoly::one(), MultiPoly::zero()),
        Err(ExactError::ZeroDenominator)
    );
}

#[test]
fn normalize_is_idempotent() {
    let r = rf("(psi^2 - n^2)/(psi*n + n^2)");
    let again = normalize(r.num().clone(), r.den().clone()).unwrap();
    assert_eq!(r, again);
    assert_eq!(r, rf("(psi - n)/n"));
}

#[test]
fn substitution_examples() {
    let f = psi();
    let g = rf("1/(4*psi)");
    assert_eq!(substitute(&f, Var::Psi, &g).unwrap(), rf("1/(4psi)"));
    let inv = rf("1/psi");
    assert_eq!(substitute(&inv, Var::Psi, &inv).unwrap(), psi());
    let t = rf("psi/(2*psi - 1)");
    assert_eq!(substitute(&t, Var::Psi, &t).unwrap(), psi());
}

#[test]
fn substitution_into_identically_zero_denominator_fails() {
    let f = rf("1/(psi - n)");
    assert_eq!(
        f.substitute(Var::Psi, &RatFunc::var(Var::N)),
        Err(ExactError::ZeroDenominator)
    );
}

#[test]
fn evaluation_examples() {
    let f = rf("(psi + 1)/(psi - 1)");
    assert_eq!(f.eval_at(&[(Var::Psi, int(3))]).unwrap(), int(2));
    let g = rf("1/(2*psi - 1)");
    assert_eq!(g.eval_at(&[(Var::Psi, rat(1, 2))]), Err(ExactError::Pole));
    assert_eq!(g.eval_at(&[]), Err(ExactError::MissingVariable(Var::Psi)));
}

#[test]
fn resultant_examples() {
    let x = Var::Psi1;
    let p = rf("psi1^2 - 2").num().clone();
    let q = rf("psi1 - psi2").num().clone();
    assert_eq!(
        resultant(&p, &q, x).unwrap(),
        rf("psi2^2 - 2").num().clone()
    );
    assert!(resultant(&p, &p, x).unwrap().is_zero());
    let a = rf("psi1 - 2*psi2").num().clone();
    let b = rf("psi1*psi2 - 1").num().clone();
    let r = resultant(&a, &b, x).unwrap();
    assert_eq!(r, rf("2*psi2^2 - 1").num().clone());
    let c = rf("psi2 + 1").num().clone();
    assert_eq!(resultant(&c, &p, x), Err(ExactError::ZeroDegree(x)));
}

#[test]
fn resultant_of_coprime_quadratics_matches_sylvester() {
    // Res_x(x^2 + a x + b, x^2 + c x + d) = (b - d)^2 + (a - c)(a d - b c).
    let p = rf("psi^2 + n*psi + m").num().clone();
    let q = rf("psi^2 + r*psi + s").num().clone();
    let expect = rf("(m - s)^2 + (n - r)*(n*s - m*r)").num().clone();
    assert_eq!(resultant(&p, &q, Var::Psi).unwrap(), expect);
}

#[test]
fn rational_root_examples() {
    let v = Var::Psi;
    let p = UniPoly::from_ints(v, &[1, -3, 2]);
    assert_eq!(rational_roots(&p).unwrap(), vec![rat(1, 2), int(1)]);
    let p = UniPoly::from_ints(v, &[1, 0, 1]);
    assert!(rational_roots(&p).unwrap().is_empty());
    let p = UniPoly::from_ints(v, &[-1, 0, 0, 8]);
    assert_eq!(rational_roots(&p).unwrap(), vec![rat(1, 2)]);
    assert_eq!(
        rational_roots(&UniPoly::new(v, vec![])),
        Err(ExactError::ZeroPolynomial)
    );
}

#[test]
fn rational_roots_with_multiplicity_and_zero() {
    // x^2 (3x - 7)^3 (x + 5)(x^2 + 2)
    let p = rf("psi^2*(3psi - 7)^3*(psi + 5)*(psi^2 + 2)").num().clone();
    let u = UniPoly::from_multi(&p, Var::Psi).unwrap();
    assert_eq!(
        u.rational_roots().unwrap(),
        vec![int(-5), int(0), rat(7, 3)]
    );
}

#[test]
fn rational_roots_large_coefficients() {
    let p = rf("(123456789*psi - 987654321)*(1000003*psi + 999983)*(psi^3 - 5)")
        .num()
        .clone();
    let u = UniPoly::from_multi(&p, Var::Psi).unwrap();
    assert_eq!(
        u.rational_roots().unwrap(),
        vec![rat(-999983, 1000003), rat(987654321, 123456789)]
    );
}

#[test]
fn gcd_multivariate() {
    let a = rf("(psi + n)^3*(m - 2*psi*r + 1)*(psi - 3)").num().clone();
    let b = rf("(psi + n)^2*(m - 2*psi*r + 1)^2*(n*m + 7)")
        .num()
        .clone();
    let g = poly_gcd(&a, &b);
    assert_eq!(g, rf("(psi + n)^2*(m - 2*psi*r + 1)").num().primitive());
    let one = poly_gcd(&rf("psi^2 + 1").num().clone(), &rf("psi + n").num().clone());
    assert_eq!(one, MultiPoly::one());
}

#[test]
fn parse_rational_text() {
    assert_eq!(parse_bigrat("3/10").unwrap(), rat(3, 10));
    assert_eq!(parse_bigrat("-11/8").unwrap(), rat(-11, 8));
    assert_eq!(parse_bigrat("6/4").unwrap(), rat(3, 2));
    assert!(parse_bigrat("1/0").is_err());
    assert!(parse_bigrat("1.5").is_err());
    assert!(parse_bigrat("").is_err());
    assert!(parse_bigrat("2/-3").is_err());
}

#[test]
fn parse_expressions() {
    assert_eq!(rf("2psi"), rf("2*psi"));
    assert_eq!(rf("ψ'"), RatFunc::var(Var::Psi1));
    assert_eq!(rf("psi''"), RatFunc::var(Var::Psi2));
    assert_eq!(rf("psi^-2"), rf("1/psi^2"));
    assert_eq!(rf("-psi^2"), rf("-(psi^2)"));
    assert_eq!(rf("(n+1)(n-1)"), rf("n^2 - 1"));
    assert!(matches!(
        parse_ratfunc("psi + q"),
        Err(ExactError::UnknownVariable(_))
    ));
    assert!(parse_ratfunc("1/(psi - psi)").is_err());
    assert!(parse_ratfunc("(psi").is_err());
    assert!(parse_ratfunc("psi +").is_err());
}

#[test]
fn display_round_trip() {
    for text in [
        "(3*psi^2 - n*psi + 1)/(2*psi - 1)",
        "-7/20",
        "(m*n - psi)/2",
        "(s^2*r - 4)/(psi*psi1*psi2)",
    ] {
        let f = rf(text);
        assert_eq!(rf(&f.to_string()), f, "{text} -> {f}");
    }
}

#[test]
fn serialization_order_is_graded_lex() {
    // Higher total degree first; within a degree the variable s dominates ψ.
    let f = rf("psi^2 + s + psi*n + n^2 + 1");
    assert_eq!(f.to_string(), "n^2 + n*psi + psi^2 + s + 1");
}
