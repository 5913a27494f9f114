//! Multivariate polynomial gcd over the integers by Brown's modular algorithm.
//!
//! Images are computed modulo word-sized primes close to 2^62.  Inside one
//! prime the algorithm recurses on the last active variable: it evaluates
//! that variable at many points, computes gcds of the images, scales each
//! image to a common leading coefficient and reconstructs by Newton
//! interpolation.  Unlucky evaluation points and primes are detected by
//! comparing leading monomials; every candidate is confirmed by trial
//! division, so the result is always exact.

use super::poly::{Exps, Monomial, MultiPoly};
use super::var::NVARS;
use super::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// A polynomial modulo a prime: terms sorted by decreasing lexicographic
/// exponent vector (`ψ` most significant), no zero coefficients.
type ModPoly = Vec<(Exps, u64)>;

const ZERO_EXPS: Exps = [0; NVARS];

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    powm(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub(crate) fn big_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut c = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

fn reduce_int(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

// ---------------------------------------------------------------------------
// Dense univariate arithmetic mod p (coefficients low to high, trimmed).

fn utrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn ueval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0, |acc, &c| addm(mulm(acc, x, p), c, p))
}

fn umonic(a: &mut [u64], p: u64) {
    if let Some(&lc) = a.last() {
        let inv = invm(lc, p);
        for c in a.iter_mut() {
            *c = mulm(*c, inv, p);
        }
    }
}

/// Remainder of `a` by `b` (b nonzero), in place.
fn urem(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = invm(b[db], p);
    while a.len() > db {
        let k = a.len() - 1;
        let q = mulm(a[k], inv, p);
        if q != 0 {
            let shift = k - db;
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = subm(a[shift + i], mulm(q, bc, p), p);
            }
        }
        a.pop();
        utrim(a);
    }
    utrim(a);
}

/// Exact quotient `a / b` (assumes divisibility).
fn udiv(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    if a.len() <= db {
        return Vec::new();
    }
    let inv = invm(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() - db];
    for k in (db..r.len()).rev() {
        let c = mulm(r[k], inv, p);
        q[k - db] = c;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[k - db + i] = subm(r[k - db + i], mulm(c, bc, p), p);
            }
        }
    }
    q
}

fn umul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    out
}

/// Monic gcd (zero only if both inputs are zero).
fn ugcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    utrim(&mut x);
    utrim(&mut y);
    while !y.is_empty() {
        urem(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    umonic(&mut x, p);
    x
}

// ---------------------------------------------------------------------------
// Sparse multivariate arithmetic mod p.

fn active_vars(a: &ModPoly, b: &ModPoly) -> Vec<usize> {
    let mut seen = [false; NVARS];
    for (e, _) in a.iter().chain(b.iter()) {
        for i in 0..NVARS {
            if e[i] > 0 {
                seen[i] = true;
            }
        }
    }
    (0..NVARS).filter(|&i| seen[i]).collect()
}

/// Splits into `(prefix, dense coefficients in x_v)` groups, where `v` is the
/// last active variable, so that prefixes appear in decreasing order.
fn to_groups(a: &ModPoly, v: usize) -> Vec<(Exps, Vec<u64>)> {
    let mut out: Vec<(Exps, Vec<u64>)> = Vec::new();
    for (e, c) in a {
        let mut pre = *e;
        let k = pre[v] as usize;
        pre[v] = 0;
        match out.last_mut() {
            Some((q, coeffs)) if *q == pre => {
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, 0);
                }
                coeffs[k] = *c;
            }
            _ => {
                let mut coeffs = vec![0; k + 1];
                coeffs[k] = *c;
                out.push((pre, coeffs));
            }
        }
    }
    out
}

fn from_groups(groups: &[(Exps, Vec<u64>)], v: usize) -> ModPoly {
    let mut out = Vec::new();
    for (pre, coeffs) in groups {
        for k in (0..coeffs.len()).rev() {
            if coeffs[k] != 0 {
                let mut e = *pre;
                e[v] = k as u32;
                out.push((e, coeffs[k]));
            }
        }
    }
    out
}

fn mod_sort(a: &mut ModPoly) {
    a.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
}

/// Exact division test mod p in lexicographic order.
fn mod_divides(d: &ModPoly, a: &ModPoly, p: u64) -> bool {
    if d.is_empty() {
        return a.is_empty();
    }
    let (dlm, dlc) = d[0];
    let inv = invm(dlc, p);
    let mut rem: BTreeMap<Exps, u64> = a.iter().cloned().collect();
    while let Some((lm, lc)) = rem.pop_last() {
        let mut q = lm;
        for i in 0..NVARS {
            if q[i] < dlm[i] {
                return false;
            }
            q[i] -= dlm[i];
        }
        let qc = mulm(lc, inv, p);
        for (e, c) in d.iter().skip(1) {
            let mut k = *e;
            for i in 0..NVARS {
                k[i] += q[i];
            }
            let delta = mulm(*c, qc, p);
            let slot = rem.entry(k).or_insert(0);
            *slot = subm(*slot, delta, p);
            if *slot == 0 {
                rem.remove(&k);
            }
        }
    }
    true
}

fn mod_scale(a: &mut ModPoly, c: u64, p: u64) {
    for t in a.iter_mut() {
        t.1 = mulm(t.1, c, p);
    }
}

/// Gcd of two polynomials modulo `p`, up to a unit.  Returns `None` when
/// too many unlucky evaluation points were met (the caller switches prime).
fn pgcd(a: &ModPoly, b: &ModPoly, p: u64) -> Option<ModPoly> {
    if a.is_empty() {
        return Some(b.clone());
    }
    if b.is_empty() {
        return Some(a.clone());
    }
    let vars = active_vars(a, b);
    if vars.is_empty() {
        return Some(vec![(ZERO_EXPS, 1)]);
    }
    let v = *vars.last().unwrap();
    let ga = to_groups(a, v);
    let gb = to_groups(b, v);
    if vars.len() == 1 {
        let g = ugcd(&ga[0].1, &gb[0].1, p);
        return Some(from_groups(&[(ZERO_EXPS, g)], v));
    }

    // Content in x_v and primitive parts.
    let content = |g: &[(Exps, Vec<u64>)]| {
        let mut c = g[0].1.clone();
        umonic(&mut c, p);
        for (_, x) in &g[1..] {
            if c.len() == 1 {
                break;
            }
            c = ugcd(&c, x, p);
        }
        c
    };
    let ca = content(&ga);
    let cb = content(&gb);
    let cont = ugcd(&ca, &cb, p);
    let ga: Vec<_> = ga.into_iter().map(|(e, x)| (e, udiv(&x, &ca, p))).collect();
    let gb: Vec<_> = gb.into_iter().map(|(e, x)| (e, udiv(&x, &cb, p))).collect();
    let la = ga[0].1.clone();
    let lb = gb[0].1.clone();
    let gamma = ugcd(&la, &lb, p);
    let deg_v = |g: &[(Exps, Vec<u64>)]| g.iter().map(|(_, x)| x.len() - 1).max().unwrap();
    let bound = (gamma.len() - 1) + deg_v(&ga).min(deg_v(&gb));
    let a1 = from_groups(&ga, v);
    let b1 = from_groups(&gb, v);
    let with_content = |mut h: ModPoly| {
        if cont.len() > 1 {
            let groups: Vec<_> = to_groups(&h, v)
                .into_iter()
                .map(|(e, x)| (e, umul(&x, &cont, p)))
                .collect();
            h = from_groups(&groups, v);
        }
        h
    };

    let mut interp: BTreeMap<Exps, Vec<u64>> = BTreeMap::new();
    let mut modulus: Vec<u64> = vec![1];
    let mut lead: Option<Exps> = None;
    let mut npts = 0usize;
    let max_tries = 4 * bound + 64;
    let mut tries = 0usize;
    let mut i: u64 = 0;
    loop {
        i += 1;
        tries += 1;
        if tries > max_tries {
            return None;
        }
        // Distinct point sequences per variable keep the images of
        // different recursion levels independent of each other.
        let pt = mulm(i + ((v as u64) << 40), 0x9E37_79B9_7F4A_7C15 % p, p);
        if pt == 0 || ueval(&la, pt, p) == 0 || ueval(&lb, pt, p) == 0 {
            continue;
        }
        let eval = |g: &[(Exps, Vec<u64>)]| -> ModPoly {
            g.iter()
                .filter_map(|(e, x)| {
                    let c = ueval(x, pt, p);
                    (c != 0).then_some((*e, c))
                })
                .collect()
        };
        let ai = eval(&ga);
        let bi = eval(&gb);
        let mut hi = pgcd(&ai, &bi, p)?;
        if hi.len() == 1 && hi[0].0 == ZERO_EXPS {
            // Coprime image with a nonvanishing leading coefficient.
            return Some(with_content(vec![(ZERO_EXPS, 1)]));
        }
        let lm = hi[0].0;
        match lead {
            Some(cur) if lm < cur => {
                interp.clear();
                modulus = vec![1];
                npts = 0;
                lead = Some(lm);
            }
            Some(cur) if lm > cur => continue,
            None => lead = Some(lm),
            _ => {}
        }
        let s = mulm(ueval(&gamma, pt, p), invm(hi[0].1, p), p);
        mod_scale(&mut hi, s, p);

        // Newton step: H += (h_i - H(pt)) / M(pt) * M.
        let mpt = ueval(&modulus, pt, p);
        let minv = invm(mpt, p);
        let mut changed = false;
        let mut hmap: BTreeMap<Exps, u64> = hi.into_iter().collect();
        for (pre, coeffs) in interp.iter_mut() {
            let target = hmap.remove(pre).unwrap_or(0);
            let cur = ueval(coeffs, pt, p);
            let delta = mulm(subm(target, cur, p), minv, p);
            if delta != 0 {
                changed = true;
                let add = umul(&modulus, &[delta], p);
                if coeffs.len() < add.len() {
                    coeffs.resize(add.len(), 0);
                }
                for (k, c) in add.into_iter().enumerate() {
                    coeffs[k] = addm(coeffs[k], c, p);
                }
                utrim(coeffs);
            }
        }
        for (pre, target) in hmap {
            changed = true;
            let delta = mulm(target, minv, p);
            interp.insert(pre, umul(&modulus, &[delta], p));
        }
        interp.retain(|_, c| !c.is_empty());
        modulus = umul(&modulus, &[subm(0, pt, p), 1], p);
        npts += 1;

        if !changed || npts > bound {
            let mut groups: Vec<(Exps, Vec<u64>)> =
                interp.iter().rev().map(|(e, c)| (*e, c.clone())).collect();
            let mut hc = groups[0].1.clone();
            for (_, x) in &groups[1..] {
                if hc.len() == 1 {
                    break;
                }
                hc = ugcd(&hc, x, p);
            }
            if hc.len() > 1 {
                for g in groups.iter_mut() {
                    g.1 = udiv(&g.1, &hc, p);
                }
            }
            let cand = from_groups(&groups, v);
            if mod_divides(&cand, &a1, p) && mod_divides(&cand, &b1, p) {
                return Some(with_content(cand));
            }
            if npts > bound {
                // Some image was unlucky in a way the leading monomial did
                // not reveal; start the interpolation afresh.
                interp.clear();
                modulus = vec![1];
                npts = 0;
                lead = None;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Integer level.

/// Integer polynomial keyed by lexicographic exponent vectors.
type ZPoly = BTreeMap<Exps, BigInt>;

fn to_zpoly(a: &MultiPoly) -> ZPoly {
    a.terms()
        .map(|(m, c)| {
            debug_assert!(c.is_integer());
            (m.0, c.numer().clone())
        })
        .collect()
}

fn zpoly_to_multi(a: &ZPoly) -> MultiPoly {
    MultiPoly::from_terms(
        a.iter()
            .map(|(e, c)| (Monomial(*e), BigRat::from_integer(c.clone()))),
    )
}

fn reduce_zpoly(a: &ZPoly, p: u64) -> ModPoly {
    let mut out: ModPoly = a
        .iter()
        .filter_map(|(e, c)| {
            let r = reduce_int(c, p);
            (r != 0).then_some((*e, r))
        })
        .collect();
    mod_sort(&mut out);
    out
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if x > half {
        x - m
    } else {
        x
    }
}

/// Greatest common divisor of two polynomials with rational coefficients.
///
/// The result is the primitive integer polynomial with positive leading
/// coefficient (graded lexicographic order); it is `1` when the inputs are
/// coprime or when either is a nonzero constant, and `0` only for `gcd(0, 0)`.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let pa = a.primitive();
    let pb = b.primitive();
    if pa == pb {
        return pa;
    }
    if pa.len() == 1 || pb.len() == 1 {
        // Monomial gcd: the common power product.
        let (mono, other) = if pa.len() == 1 {
            (&pa, &pb)
        } else {
            (&pb, &pa)
        };
        let mut e = mono.leading_term().unwrap().0 .0;
        for (m, _) in other.terms() {
            for (ei, mi) in e.iter_mut().zip(m.0.iter()) {
                *ei = (*ei).min(*mi);
            }
        }
        return MultiPoly::monomial(Monomial(e), BigRat::one());
    }

    let za = to_zpoly(&pa);
    let zb = to_zpoly(&pb);
    let lca = za.last_key_value().unwrap().1.clone();
    let lcb = zb.last_key_value().unwrap().1.clone();
    let gamma = lca.gcd(&lcb);

    let mut acc: ZPoly = BTreeMap::new();
    let mut modulus = BigInt::one();
    let mut lead: Option<Exps> = None;
    for &p in big_primes() {
        if reduce_int(&lca, p) == 0 || reduce_int(&lcb, p) == 0 {
            continue;
        }
        let ap = reduce_zpoly(&za, p);
        let bp = reduce_zpoly(&zb, p);
        let Some(mut g) = pgcd(&ap, &bp, p) else {
            continue;
        };
        if g.len() == 1 && g[0].0 == ZERO_EXPS {
            return MultiPoly::one();
        }
        let lm = g[0].0;
        match lead {
            Some(cur) if lm < cur => {
                acc.clear();
                modulus = BigInt::one();
            }
            Some(cur) if lm > cur => continue,
            _ => {}
        }
        lead = Some(lm);
        let s = mulm(reduce_int(&gamma, p), invm(g[0].1, p), p);
        mod_scale(&mut g, s, p);

        // Chinese remaindering into symmetric representatives.
        let bp_ = BigInt::from(p);
        let minv = invm(reduce_int(&modulus, p), p);
        let new_mod = &modulus * &bp_;
        let mut changed = false;
        let mut gmap: BTreeMap<Exps, u64> = g.into_iter().collect();
        let keys: Vec<Exps> = acc.keys().cloned().chain(gmap.keys().cloned()).collect();
        let mut next: ZPoly = BTreeMap::new();
        for e in keys {
            if next.contains_key(&e) {
                continue;
            }
            let old = acc.get(&e).cloned().unwrap_or_else(BigInt::zero);
            let r = gmap.remove(&e).unwrap_or(0);
            let oldp = reduce_int(&old, p);
            let t = mulm(subm(r, oldp, p), minv, p);
            let val = if t == 0 {
                old.clone()
            } else {
                changed = true;
                symmetric(
                    (&old + &modulus * BigInt::from(t)).mod_floor(&new_mod),
                    &new_mod,
                )
            };
            if !val.is_zero() {
                next.insert(e, val);
            }
        }
        acc = next;
        modulus = new_mod;
        // Small coefficients after the first prime are very likely final;
        // otherwise wait for the reconstruction to stabilise.
        let small = acc.values().all(|c| c.bits() < 40);
        if changed && !(modulus.bits() <= 64 && small) {
            continue;
        }
        let cand = zpoly_to_multi(&acc).primitive();
        if pa.div_exact(&cand).is_some() && pb.div_exact(&cand).is_some() {
            return cand;
        }
    }
    unreachable!("modular gcd exhausted its prime supply")
}
