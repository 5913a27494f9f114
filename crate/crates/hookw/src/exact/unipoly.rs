//! Dense univariate polynomials and exact rational root finding.
//!
//! Rational roots are found p-adically: the polynomial is made primitive and
//! squarefree, a small prime keeping it squarefree is chosen, roots modulo
//! that prime are lifted by Newton iteration past the Cauchy-type bound
//! `2·|a_0|·|a_n|`, and each lift is turned back into a fraction by rational
//! reconstruction.  Every candidate is confirmed by exact evaluation.

use super::error::ExactError;
use super::modgcd::poly_gcd;
use super::poly::{Monomial, MultiPoly};
use super::var::Var;
use super::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A dense polynomial in one designated variable (coefficients low to high).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<BigRat>,
}

impl UniPoly {
    /// Builds from coefficients `c_0, c_1, …`, trimming leading zeros.
    pub fn new(var: Var, mut coeffs: Vec<BigRat>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(
            var,
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    /// Views a multivariate polynomial that only involves `var`.
    pub fn from_multi(p: &MultiPoly, var: Var) -> Option<UniPoly> {
        if p.vars().iter().any(|&v| v != var) {
            return None;
        }
        let coeffs = p
            .coeffs_in(var)
            .into_iter()
            .map(|c| c.as_constant().expect("constant coefficient"))
            .collect();
        Some(UniPoly::new(var, coeffs))
    }

    /// Back to the sparse representation.
    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var_pow(self.var, i as u32), c.clone())),
        )
    }

    /// The designated variable.
    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    /// All rational roots, sorted increasingly, without multiplicity.
    pub fn rational_roots(&self) -> Result<Vec<BigRat>, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let p = self.to_multi();
        let x = self.var;
        // Squarefree part over Q.
        let dp = p.derivative(x);
        let sq = if dp.is_zero() {
            p.primitive()
        } else {
            let g = poly_gcd(&p, &dp);
            p.div_exact(&g).expect("gcd divides").primitive()
        };
        let mut f: Vec<BigInt> = sq
            .coeffs_in(x)
            .into_iter()
            .map(|c| c.as_constant().unwrap().to_integer())
            .collect();
        if f.is_empty() {
            return Ok(roots);
        }
        if f[0].is_zero() {
            roots.push(BigRat::zero());
            f.remove(0);
        }
        roots.extend(integer_poly_roots(&f));
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}

fn eval_int_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn eval_small(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Squarefree test of a polynomial modulo a small prime (gcd with derivative).
fn squarefree_mod(f: &[u64], p: u64) -> bool {
    let d: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (c * (i as u64 % p)) % p)
        .collect();
    let trim = |mut v: Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut a = trim(f.to_vec());
    let mut b = trim(d);
    if b.is_empty() {
        return false;
    }
    let inv = |x: u64| {
        let mut r = 1u64;
        let (mut base, mut e) = (x % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        r
    };
    while !b.is_empty() {
        let ib = inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let q = a.last().unwrap() * ib % p;
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - q * c % p) % p;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

/// Rational reconstruction: `n/d ≡ u (mod m)` with `|n| ≤ nb`, `0 < d ≤ db`.
fn ratrecon(u: &BigInt, m: &BigInt, nb: &BigInt, db: &BigInt) -> Option<BigRat> {
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > nb {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *db || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRat::new(r1, t1))
}

/// Nonzero rational roots of a squarefree integer polynomial with `f(0) != 0`.
fn integer_poly_roots(f: &[BigInt]) -> Vec<BigRat> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![BigRat::new(-f[0].clone(), f[1].clone())];
    }
    let a0 = f[0].abs();
    let an = f[n].abs();
    let bound: BigInt = BigInt::from(2) * &a0 * &an;

    // A small prime not dividing the leading coefficient that keeps f squarefree.
    let mut chosen = None;
    for p in small_primes().take(2000) {
        if (&an % p).is_zero() {
            continue;
        }
        let fp: Vec<u64> = f
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
            .collect();
        if squarefree_mod(&fp, p) {
            chosen = Some((p, fp));
            break;
        }
    }
    let Some((p, fp)) = chosen else {
        return brute_force_roots(f);
    };
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let mut out = Vec::new();
    for r in 0..p {
        if eval_small(&fp, r, p) != 0 {
            continue;
        }
        // Newton lifting with quadratic convergence.
        let mut x = BigInt::from(r);
        let mut m = BigInt::from(p);
        while m <= bound {
            let m2 = &m * &m;
            let fx = eval_int_mod(f, &x, &m2);
            let dfx = eval_int_mod(&df, &x, &m2);
            let e = dfx.extended_gcd(&m2);
            if !e.gcd.is_one() {
                break;
            }
            x = (&x - fx * e.x).mod_floor(&m2);
            m = m2;
        }
        if let Some(cand) = ratrecon(&x, &m, &a0, &an) {
            if is_root(f, &cand) {
                out.push(cand);
            }
        }
    }
    out
}

fn is_root(f: &[BigInt], x: &BigRat) -> bool {
    // Homogenised evaluation: Σ c_i a^i b^(n-i) = 0.
    let (a, b) = (x.numer(), x.denom());
    let n = f.len() - 1;
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    let bpows: Vec<BigInt> = (0..=n).map(|k| num_traits::pow(b.clone(), k)).collect();
    for (i, c) in f.iter().enumerate() {
        acc += c * &apow * &bpows[n - i];
        apow *= a;
    }
    acc.is_zero()
}

/// Fallback by the rational root theorem (only reached if no good prime exists).
fn brute_force_roots(f: &[BigInt]) -> Vec<BigRat> {
    let divisors = |x: &BigInt| -> Vec<BigInt> {
        let x = x.abs();
        let mut d = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= x {
            if (&x % &k).is_zero() {
                d.push(k.clone());
                d.push(&x / &k);
            }
            k += 1;
        }
        d
    };
    let mut out = Vec::new();
    for a in divisors(&f[0]) {
        for b in divisors(&f[f.len() - 1]) {
            for s in [a.clone(), -a.clone()] {
                let cand = BigRat::new(s, b.clone());
                if is_root(f, &cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
