//! Roots of univariate polynomials inside the coefficient field.
//!
//! Over `F_p` the roots are split off `gcd(f, t^p - t)` by Cantor–Zassenhaus
//! with a deterministic sequence of shifts. Over `Q` the square-free integer
//! part is solved modulo a small good prime, each simple root is Newton-lifted
//! past the bound `2 |f_0| |f_d|`, and rational reconstruction recovers the
//! candidate, which is then checked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{inv_mod, Field, FieldElement};

pub(crate) fn roots_in_field(field: Field, coeffs: &[FieldElement]) -> Vec<FieldElement> {
    match field {
        Field::Prime(p) => {
            let f: Vec<u64> = coeffs
                .iter()
                .map(|c| match c {
                    FieldElement::Prime { value, .. } => *value as u64,
                    _ => panic!("mixed coefficient fields"),
                })
                .collect();
            let mut r = roots_mod_p(&f, p as u64);
            r.sort_unstable();
            r.into_iter().map(|v| field.from_i64(v as i64)).collect()
        }
        Field::Rationals => {
            let f: Vec<BigRational> = coeffs
                .iter()
                .map(|c| c.as_rational().expect("mixed coefficient fields").clone())
                .collect();
            let mut r = rational_roots(&f);
            r.sort();
            r.into_iter().map(FieldElement::Rational).collect()
        }
    }
}

// ---------- dense polynomials mod p, coefficients low to high ----------

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn degree(f: &[u64]) -> Option<usize> {
    f.len().checked_sub(1)
}

fn monic(f: Vec<u64>, p: u64) -> Vec<u64> {
    let f = trim(f);
    let Some(&lc) = f.last() else { return f };
    let inv = inv_mod(lc, p);
    f.into_iter().map(|c| c * inv % p).collect()
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let inv = inv_mod(b[db], p);
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let d = r.len() - 1;
        let q = r[d] * inv % p;
        let shift = d - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - q * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn divide(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let inv = inv_mod(b[db], p);
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let d = r.len() - 1;
        let c = r[d] * inv % p;
        let shift = d - db;
        q[shift] = c;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    trim(q)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(&b, &b, m, p);
        }
    }
    acc
}

fn eval_mod(f: &[u64], t: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, c| (acc * t + c) % p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

/// Distinct roots of `f` in `F_p`.
pub(crate) fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    let f = monic(f.iter().map(|c| c % p).collect(), p);
    match degree(&f) {
        None => panic!("roots of the zero polynomial"),
        Some(0) => return Vec::new(),
        _ => {}
    }
    if p < 64 {
        return (0..p).filter(|&t| eval_mod(&f, t, p) == 0).collect();
    }
    // product of the distinct linear factors
    let xp = powmod(&[0, 1], p, &f, p);
    let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
    let mut roots = Vec::new();
    split(g, p, &mut roots);
    roots
}

fn split(g: Vec<u64>, p: u64, out: &mut Vec<u64>) {
    match degree(&g) {
        None | Some(0) => return,
        Some(1) => {
            out.push((p - g[0]) % p);
            return;
        }
        _ => {}
    }
    for a in 0..p {
        let w = powmod(&[a, 1], (p - 1) / 2, &g, p);
        let d = gcd(&g, &sub(&w, &[1], p), p);
        let dd = degree(&d).unwrap_or(0);
        if dd > 0 && dd < g.len() - 1 {
            let other = divide(&g, &d, p);
            split(d, p, out);
            split(monic(other, p), p, out);
            return;
        }
    }
    unreachable!("some shift separates two distinct roots");
}

// ---------- rational roots ----------

fn rtrim(mut f: Vec<BigRational>) -> Vec<BigRational> {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn rrem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    let mut r = rtrim(a.to_vec());
    while r.len() > db {
        let d = r.len() - 1;
        let q = &r[d] / &b[db];
        let shift = d - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&q * bi);
        }
        r = rtrim(r);
    }
    r
}

fn rdiv(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    let mut r = rtrim(a.to_vec());
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let d = r.len() - 1;
        let c = &r[d] / &b[db];
        let shift = d - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bi);
        }
        q[shift] = c;
        r = rtrim(r);
    }
    rtrim(q)
}

fn rgcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (rtrim(a.to_vec()), rtrim(b.to_vec()));
    while !b.is_empty() {
        let r = rrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval_int(f: &[BigInt], t: &BigInt, m: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| (acc * t + c).mod_floor(m))
}

/// Inverse of `a` modulo `m` (assumed coprime).
fn inv_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Finds `a/b` with `|a| <= a_bound`, `0 < b <= b_bound`, `a ≡ r b (mod m)`.
fn rational_reconstruction(r: &BigInt, m: &BigInt, a_bound: &BigInt, b_bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > a_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > b_bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (1009u64..).step_by(2).filter(|&n| crate::field::is_prime(n as u32))
}

/// Distinct rational roots of `f`.
fn rational_roots(f: &[BigRational]) -> Vec<BigRational> {
    let mut f = rtrim(f.to_vec());
    assert!(!f.is_empty(), "roots of the zero polynomial");
    let mut roots = Vec::new();
    if f[0].is_zero() {
        roots.push(BigRational::zero());
        let lead_zeros = f.iter().take_while(|c| c.is_zero()).count();
        f.drain(..lead_zeros);
    }
    if f.len() <= 1 {
        return roots;
    }

    // square-free part
    let deriv: Vec<BigRational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let g = rgcd(&f, &deriv);
    let f = if g.len() > 1 { rdiv(&f, &g) } else { f };

    // primitive integer polynomial
    let lcm_den = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let d = ints.len() - 1;
    if d == 1 {
        roots.push(BigRational::new(-ints[0].clone(), ints[1].clone()));
        return roots;
    }

    let a_bound = ints[0].abs();
    let b_bound = ints[d].abs();
    let target = BigInt::from(2) * &a_bound * &b_bound;
    let int_deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();

    for p in small_primes() {
        let pb = BigInt::from(p);
        if (&ints[d] % &pb).is_zero() {
            continue;
        }
        let fp: Vec<u64> = ints.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        let dp: Vec<u64> = int_deriv.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        if degree(&gcd(&fp, &dp, p)) != Some(0) {
            continue;
        }
        for r in roots_mod_p(&fp, p) {
            let mut m = pb.clone();
            let mut x = BigInt::from(r);
            while m <= target {
                m = &m * &m;
                let fx = eval_int(&ints, &x, &m);
                let dx = eval_int(&int_deriv, &x, &m);
                x = (&x - fx * inv_big(&dx, &m)).mod_floor(&m);
            }
            if let Some(cand) = rational_reconstruction(&x, &m, &a_bound, &b_bound) {
                let value = f.iter().rev().fold(BigRational::zero(), |acc, c| acc * &cand + c);
                if value.is_zero() {
                    roots.push(cand);
                }
            }
        }
        return roots;
    }
    unreachable!("infinitely many primes")
}
