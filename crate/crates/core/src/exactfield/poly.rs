//! Dense univariate polynomials over ℚ, lowest degree first.

use crate::linalg::Q;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree, or None for the zero polynomial.
pub(crate) fn degree(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let lead_inv = b[db].recip();
    let mut quo = vec![Q::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (i, c) in b[..=db].iter().enumerate() {
            if !c.is_zero() {
                r[shift + i] -= &f * c;
            }
        }
        quo[shift] = f;
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

pub(crate) fn derivative(p: &[Q]) -> Vec<Q> {
    let mut d: Vec<Q> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Q::from_integer(i.into()))
        .collect();
    trim(&mut d);
    d
}

/// Monic gcd.
pub(crate) fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(x)
}

pub(crate) fn make_monic(mut p: Vec<Q>) -> Vec<Q> {
    if let Some(d) = degree(&p) {
        let inv = p[d].recip();
        for c in p.iter_mut() {
            *c *= &inv;
        }
    }
    p
}

/// Solves s·a ≡ g (mod m) with g = gcd(a, m) monic. Returns (g, s).
pub(crate) fn half_ext_gcd(a: &[Q], m: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Q>, Vec<Q>) = (Vec::new(), vec![Q::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let d = degree(&r0).unwrap_or(0);
    let inv = r0[d].recip();
    let g: Vec<Q> = r0.iter().map(|c| c * &inv).collect();
    let s: Vec<Q> = s0.iter().map(|c| c * &inv).collect();
    (g, s)
}
