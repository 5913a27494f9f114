//! Resultants by the subresultant polynomial remainder sequence.
//!
//! The input polynomials are viewed as univariate in the elimination
//! variable with coefficients in the polynomial ring of the others.  All
//! divisions in the sequence are exact, so coefficient growth stays
//! polynomial in the degrees.

use super::error::ExactError;
use super::poly::MultiPoly;
use super::var::Var;

type Upoly = Vec<MultiPoly>;

fn deg(a: &Upoly) -> usize {
    a.len() - 1
}

fn lc(a: &Upoly) -> &MultiPoly {
    a.last().expect("nonzero")
}

fn trim(a: &mut Upoly) {
    while a.last().is_some_and(MultiPoly::is_zero) {
        a.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &Upoly, b: &Upoly) -> Upoly {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut e = deg(a) + 1 - db;
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1;
        let t = r[k].clone();
        let shift = k - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&t * bc);
        }
        debug_assert!(r[k].is_zero());
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn exact(a: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    a.div_exact(d).expect("subresultant division is exact")
}

/// Resultant of `p` and `q` with respect to `var`.
///
/// Both polynomials must have positive degree in `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: Var) -> Result<MultiPoly, ExactError> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(ExactError::ZeroDegree(var));
    }
    let mut a = p.coeffs_in(var);
    let mut b = q.coeffs_in(var);
    let mut s = 1i32;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let (da, db) = (deg(&a), deg(&b));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(MultiPoly::zero());
        }
        a = b;
        let div = &g * &h.pow(delta);
        b = r.iter().map(|c| exact(c, &div)).collect();
        g = lc(&a).clone();
        // h <- h^(1-δ) g^δ
        h = if delta == 0 {
            h
        } else {
            exact(&g.pow(delta), &h.pow(delta - 1))
        };
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let hb = lc(&b).pow(da);
            let out = if da == 0 {
                hb
            } else {
                exact(&hb, &h.pow(da - 1))
            };
            return Ok(if s < 0 { -out } else { out });
        }
    }
}
