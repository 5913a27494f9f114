//! Canonical rational functions.
//!
//! A [`RatFunc`] is a quotient `num/den` of polynomials in which
//!
//! 1. `num` and `den` have integer coefficients whose joint content is 1,
//! 2. `gcd(num, den) = 1` as polynomials,
//! 3. the leading coefficient of `den` (graded lexicographic) is positive.
//!
//! Zero is `0/1`.  Because the form is unique, structural equality decides
//! equality of rational functions.

use super::error::ExactError;
use super::modgcd::poly_gcd;
use super::poly::MultiPoly;
use super::var::{Var, NVARS};
use super::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A rational function in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

/// Rescales `num/den` so that both are integral with joint content 1 and the
/// denominator has positive leading coefficient.  Assumes `den != 0`.
fn fix_scalars(num: MultiPoly, den: MultiPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    let l = num.denominator_lcm().lcm(&den.denominator_lcm());
    let mut g = BigInt::zero();
    for (_, c) in num.terms().chain(den.terms()) {
        let scaled = c.numer() * (&l / c.denom());
        g = g.gcd(&scaled);
        if g.is_one() {
            break;
        }
    }
    let mut f = BigRat::new(l, g);
    if den.leading_coeff().is_negative() {
        f = -f;
    }
    if f.is_one() {
        RatFunc { num, den }
    } else {
        RatFunc {
            num: num.scale(&f),
            den: den.scale(&f),
        }
    }
}

impl RatFunc {
    /// Canonical form of `num/den`.
    pub fn normalize(num: MultiPoly, den: MultiPoly) -> Result<RatFunc, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        if den.is_constant() || num.is_constant() {
            return Ok(fix_scalars(num, den));
        }
        let g = poly_gcd(&num, &den);
        if g.is_constant() {
            return Ok(fix_scalars(num, den));
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Ok(fix_scalars(n, d))
    }

    /// Zero.
    pub fn zero() -> RatFunc {
        RatFunc {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    /// One.
    pub fn one() -> RatFunc {
        RatFunc::from_int(1)
    }

    /// A machine integer constant.
    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::constant(BigRat::from_integer(c.into()))
    }

    /// The constant `p/q` (panics if `q = 0`).
    pub fn frac(p: i64, q: i64) -> RatFunc {
        RatFunc::constant(BigRat::new(p.into(), q.into()))
    }

    /// A rational constant.
    pub fn constant(c: BigRat) -> RatFunc {
        fix_scalars(MultiPoly::constant(c), MultiPoly::one())
    }

    /// The variable `v`.
    pub fn var(v: Var) -> RatFunc {
        RatFunc {
            num: MultiPoly::var(v),
            den: MultiPoly::one(),
        }
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: MultiPoly) -> RatFunc {
        fix_scalars(p, MultiPoly::one())
    }

    /// Numerator of the canonical form.
    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    /// Denominator of the canonical form.
    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether this is a polynomial (denominator is a constant).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value if the function is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Variables occurring in numerator or denominator.
    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    /// Whether `v` occurs.
    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(fix_scalars(self.den.clone(), self.num.clone()))
    }

    /// Quotient `self / rhs`.
    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Result<RatFunc, ExactError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(fix_scalars(base.num.pow(k), base.den.pow(k)))
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, c: &BigRat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        fix_scalars(self.num.scale(c), self.den.clone())
    }

    /// Substitutes `var := g` and re-normalizes.
    pub fn substitute(&self, var: Var, g: &RatFunc) -> Result<RatFunc, ExactError> {
        self.substitute_many(&[(var, g.clone())])
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_many(&self, subs: &[(Var, RatFunc)]) -> Result<RatFunc, ExactError> {
        let subs: Vec<&(Var, RatFunc)> =
            subs.iter().filter(|(v, _)| self.contains_var(*v)).collect();
        if subs.is_empty() {
            return Ok(self.clone());
        }
        // Pure renamings (v := w) need no arithmetic.
        let is_rename = subs.iter().all(|(_, g)| {
            g.den.is_one_poly()
                && g.num.len() == 1
                && g.num.total_degree() == Some(1)
                && g.num.leading_coeff().is_one()
        });
        if is_rename {
            let mut map = [None; NVARS];
            for (v, g) in &subs {
                map[v.index()] = Some(g.num.vars()[0]);
            }
            let f = |v: Var| map[v.index()].unwrap_or(v);
            return RatFunc::normalize(self.num.rename(&f), self.den.rename(&f));
        }
        let degs: Vec<u32> = subs
            .iter()
            .map(|(v, _)| self.num.degree_in(*v).max(self.den.degree_in(*v)))
            .collect();
        let mut cache: Vec<BTreeMap<u32, MultiPoly>> = vec![BTreeMap::new(); subs.len()];
        let mut hom = |p: &MultiPoly| -> MultiPoly {
            // Group terms by the exponents of the substituted variables.
            let mut groups: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
            for (m, c) in p.terms() {
                let mut rest = *m;
                let key: Vec<u32> = subs
                    .iter()
                    .map(|(v, _)| {
                        let e = rest.0[v.index()];
                        rest.0[v.index()] = 0;
                        e
                    })
                    .collect();
                groups.entry(key).or_default().add_term(rest, c.clone());
            }
            let mut out = MultiPoly::zero();
            for (key, rest) in groups {
                let mut acc = rest;
                for (j, &e) in key.iter().enumerate() {
                    let g = &subs[j].1;
                    let d = degs[j];
                    // Cache entries keyed by e hold P^e Q^(d-e).
                    let factor = cache[j]
                        .entry(e)
                        .or_insert_with(|| &g.num.pow(e) * &g.den.pow(d - e))
                        .clone();
                    acc = &acc * &factor;
                }
                out = &out + &acc;
            }
            out
        };
        let n = hom(&self.num);
        let d = hom(&self.den);
        RatFunc::normalize(n, d)
    }

    /// Renames variables (simultaneously).
    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> RatFunc {
        RatFunc::normalize(self.num.rename(map), self.den.rename(map))
            .expect("renaming keeps the denominator nonzero")
    }

    /// Exact value at a point; every occurring variable needs a value.
    pub fn eval(&self, value: &dyn Fn(Var) -> Option<BigRat>) -> Result<BigRat, ExactError> {
        for v in self.vars() {
            if value(v).is_none() {
                return Err(ExactError::MissingVariable(v));
            }
        }
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return Err(ExactError::Pole);
        }
        Ok(self.num.eval(value)? / d)
    }

    /// Convenience: evaluation from a slice of `(variable, value)` pairs.
    pub fn eval_at(&self, assignment: &[(Var, BigRat)]) -> Result<BigRat, ExactError> {
        self.eval(&|v| {
            assignment
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, x)| x.clone())
        })
    }

    /// Fixes some variables to rational values, leaving the rest symbolic.
    pub fn specialize(&self, assignment: &[(Var, BigRat)]) -> Result<RatFunc, ExactError> {
        let f = |v: Var| {
            assignment
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, x)| x.clone())
        };
        let d = self.den.specialize(&f);
        if d.is_zero() {
            return Err(ExactError::Pole);
        }
        RatFunc::normalize(self.num.specialize(&f), d)
    }
}

trait OnePoly {
    fn is_one_poly(&self) -> bool;
}

impl OnePoly for MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<BigRat> for RatFunc {
    fn from(c: BigRat) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

fn add_sub(a: &RatFunc, b: &RatFunc, negate: bool) -> RatFunc {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return fix_scalars(bn, b.den.clone());
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        return RatFunc::normalize(&a.num + &bn, a.den.clone()).expect("nonzero denominator");
    }
    if a.den.is_constant() && b.den.is_constant() {
        let num = &a.num.scale(&b.den.leading_coeff()) + &bn.scale(&a.den.leading_coeff());
        let den = a.den.scale(&b.den.leading_coeff());
        return fix_scalars(num, den);
    }
    // With g = gcd(b1, b2): n = a1 (b2/g) + a2 (b1/g), and only g can share
    // factors with n.
    let g = poly_gcd(&a.den, &b.den);
    let (d1, d2) = if g.is_constant() {
        (a.den.clone(), b.den.clone())
    } else {
        (a.den.div_exact(&g).unwrap(), b.den.div_exact(&g).unwrap())
    };
    let num = &(&a.num * &d2) + &(&bn * &d1);
    if num.is_zero() {
        return RatFunc::zero();
    }
    if g.is_constant() {
        return fix_scalars(num, &a.den * &d2);
    }
    let h = poly_gcd(&num, &g);
    if h.is_constant() {
        fix_scalars(num, &a.den * &d2)
    } else {
        let num = num.div_exact(&h).unwrap();
        let den = (&a.den * &d2).div_exact(&h).unwrap();
        fix_scalars(num, den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_sub(self, rhs, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_sub(self, rhs, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel so that the product is already reduced.
        let cancel = |x: &MultiPoly, y: &MultiPoly| -> (MultiPoly, MultiPoly) {
            if x.is_constant() || y.is_constant() {
                return (x.clone(), y.clone());
            }
            let g = poly_gcd(x, y);
            if g.is_constant() {
                (x.clone(), y.clone())
            } else {
                (x.div_exact(&g).unwrap(), y.div_exact(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        fix_scalars(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    /// `p/q` for constants, the bare numerator for polynomials, otherwise
    /// `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.den.is_constant() {
            let d = self.den.leading_coeff();
            if d.is_one() {
                return write!(f, "{}", self.num);
            }
            return write!(f, "({})/{}", self.num, d);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl std::str::FromStr for RatFunc {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfunc(s)
    }
}
