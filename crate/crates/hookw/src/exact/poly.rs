//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded lexicographic order with `ψ < ψ' < ψ'' < n < m < r < s`.  The
//! last entry of the map is therefore the leading term.

use super::error::ExactError;
use super::var::{Var, NVARS};
use super::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector indexed by [`Var::index`].
pub type Exps = [u32; NVARS];

/// A power product of variables from the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Exps);

impl Monomial {
    /// The empty product.
    pub const ONE: Monomial = Monomial([0; NVARS]);

    /// `v^e`.
    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut x = [0; NVARS];
        x[v.index()] = e;
        Monomial(x)
    }

    /// Sum of the exponents.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of a single variable.
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    /// Whether this is the empty product.
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(x)
    }

    /// Quotient `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(other.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= b;
        }
        Some(Monomial(x))
    }

    /// Iterator over the `(variable, exponent)` pairs with nonzero exponent.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        // Print variables with the most significant one first (s before ψ).
        for i in (0..NVARS).rev() {
            let e = self.0[i];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(Var::from_index(i).name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A sparse polynomial in the variable universe with rational coefficients.
///
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant one.
    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRat) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    /// A constant polynomial from a machine integer.
    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(c.into()))
    }

    /// The polynomial `v`.
    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var_pow(v, 1), BigRat::one())
    }

    /// `c · mono`.
    pub fn monomial(mono: Monomial, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRat)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c · mono` in place.
    pub fn add_term(&mut self, mono: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRat)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms (the zero polynomial).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the polynomial is constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_zero() {
            Some(BigRat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigRat {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRat::zero)
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, mono: &Monomial) -> BigRat {
        self.terms.get(mono).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Total degree (`None` for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in one variable (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn vars(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        Var::ALL
            .iter()
            .copied()
            .filter(|v| seen[v.index()])
            .collect()
    }

    /// Whether `v` occurs.
    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone()))
                .collect(),
        }
    }

    /// `self^e`.
    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to `v`: entry `i` is the coefficient of `v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm.0[v.index()] as usize;
            mm.0[v.index()] = 0;
            out[e].terms.insert(mm, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var_pow(v, i as u32);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&shift), a.clone());
            }
        }
        out
    }

    /// Evaluates at a full assignment.
    pub fn eval(&self, value: &dyn Fn(Var) -> Option<BigRat>) -> Result<BigRat, ExactError> {
        let mut cache: [Vec<BigRat>; NVARS] = Default::default();
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let powers = &mut cache[v.index()];
                if powers.is_empty() {
                    let x = value(v).ok_or(ExactError::MissingVariable(v))?;
                    powers.push(BigRat::one());
                    powers.push(x);
                }
                while powers.len() <= e as usize {
                    let next = &powers[powers.len() - 1] * &powers[1];
                    powers.push(next);
                }
                t *= &powers[e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces some variables by rational values, leaving the others symbolic.
    pub fn specialize(&self, value: &dyn Fn(Var) -> Option<BigRat>) -> MultiPoly {
        let vals: Vec<Option<BigRat>> = Var::ALL.iter().map(|&v| value(v)).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut mm = *m;
            let mut t = c.clone();
            for (i, val) in vals.iter().enumerate() {
                if let Some(x) = val {
                    if mm.0[i] > 0 {
                        t *= num_traits::pow::pow(x.clone(), mm.0[i] as usize);
                        mm.0[i] = 0;
                    }
                }
            }
            out.add_term(mm, t);
        }
        out
    }

    /// Renames variables according to `map` (applied simultaneously).
    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut x = [0; NVARS];
            for (v, e) in m.factors() {
                x[map(v).index()] += e;
            }
            out.add_term(Monomial(x), c.clone());
        }
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the coefficient numerators (zero for the zero polynomial).
    pub fn numerator_gcd(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Primitive integer associate with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let l = self.denominator_lcm();
        let scaled = self.scale(&BigRat::from_integer(l));
        let g = scaled.numerator_gcd();
        let mut f = BigRat::from_integer(g).recip();
        if scaled.leading_coeff().is_negative() {
            f = -f;
        }
        scaled.scale(&f)
    }

    /// Exact quotient `self / d` over the rationals, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        let (dlm, dlc) = d.leading_term().map(|(m, c)| (*m, c.clone()))?;
        if d.len() == 1 {
            let inv = dlc.recip();
            let mut q = BTreeMap::new();
            for (m, c) in &self.terms {
                q.insert(m.div(&dlm)?, c * &inv);
            }
            return Some(MultiPoly { terms: q });
        }
        let inv = dlc.recip();
        let mut rem = self.terms.clone();
        let mut quot = MultiPoly::zero();
        while let Some((lm, lc)) = rem.pop_last() {
            let qm = lm.div(&dlm)?;
            // Early reject: a quotient monomial can never exceed self/lt(d).
            let qc = lc * &inv;
            for (m, c) in d.terms.iter().rev().skip(1) {
                let key = m.mul(&qm);
                let delta = c * &qc;
                use std::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let mut mm = *m;
                mm.0[v.index()] -= 1;
                out.add_term(mm, c * BigRat::from_integer(e.into()));
            }
        }
        out
    }
}

fn add_into(acc: &mut BTreeMap<Monomial, BigRat>, m: Monomial, c: BigRat) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            add_into(&mut terms, *m, c.clone());
        }
        MultiPoly { terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut terms, *m, -c.clone());
        }
        MultiPoly { terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                add_into(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Leading term first, explicit `*` and `^`, e.g. `2*psi^2 - m*psi + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
