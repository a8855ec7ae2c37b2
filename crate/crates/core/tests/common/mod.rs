#![allow(dead_code)]

use kpoincare::resolution::{BranchParam, Coef};
use kpoincare::{AlgNum, AmbientField};
use num_rational::BigRational;
use std::sync::Arc;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn field(min_poly: &[i64]) -> Arc<AmbientField> {
    AmbientField::from_ints("z", min_poly).unwrap()
}

pub fn elt(l: &Arc<AmbientField>, coords: &[Q]) -> AlgNum {
    l.element(coords.to_vec()).unwrap()
}

pub fn branch(l: &Arc<AmbientField>, m: usize, terms: &[(usize, AlgNum)]) -> BranchParam {
    BranchParam::with_coeffs(l, m, terms)
}

/// A named corpus element.
pub struct Entry {
    pub name: &'static str,
    pub branch: BranchParam,
}

fn e(name: &'static str, branch: BranchParam) -> Entry {
    Entry { name, branch }
}

/// Branches with rational coefficients.
pub fn rational_corpus() -> Vec<Entry> {
    let l = AmbientField::rationals();
    let one = l.one();
    let b = |m, t: &[usize]| branch(&l, m, &t.iter().map(|&k| (k, one.clone())).collect::<Vec<_>>());
    vec![
        e("(t, 0)", b(1, &[])),
        e("(t^2, t^3)", b(2, &[3])),
        e("(t^3, t^5)", b(3, &[5])),
        e("(t^2, t^3 + t^4)", b(2, &[3, 4])),
        e("(t^4, t^6 + t^7)", b(4, &[6, 7])),
        e("(t^4, t^6 + t^9)", b(4, &[6, 9])),
        e("(t^3, t^7)", b(3, &[7])),
    ]
}

/// Branches over quadratic, cubic and quartic fields.
pub fn field_corpus() -> Vec<Entry> {
    let mut out = Vec::new();

    let l = field(&[-2, 0, 1]);
    let (z, one) = (l.gen(), l.one());
    out.push(e("(t, sqrt2 t)", branch(&l, 1, &[(1, z.clone())])));
    out.push(e("(t^2, sqrt2 t^3)", branch(&l, 2, &[(3, z.clone())])));
    out.push(e("(t^2, t^3 + sqrt2 t^4)", branch(&l, 2, &[(3, one.clone()), (4, z.clone())])));
    out.push(e("(t, t + sqrt2 t^2)", branch(&l, 1, &[(1, one.clone()), (2, z.clone())])));
    out.push(e("(t^2, sqrt2 t^2 + t^3)", branch(&l, 2, &[(2, z.clone()), (3, one.clone())])));
    out.push(e("(t^3, t^4 + sqrt2 t^5)", branch(&l, 3, &[(4, one.clone()), (5, z.clone())])));
    out.push(e("(t^4, t^6 + sqrt2 t^7)", branch(&l, 4, &[(6, one.clone()), (7, z.clone())])));
    out.push(e("(t^4, sqrt2 t^6 + t^7)", branch(&l, 4, &[(6, z.clone()), (7, one.clone())])));
    out.push(e("(t^2, t^3 + sqrt2 t^5)", branch(&l, 2, &[(3, one.clone()), (5, z.clone())])));
    out.push(e("(t, sqrt2 t + t^3)", branch(&l, 1, &[(1, z.clone()), (3, one.clone())])));

    let l = field(&[1, 0, 1]);
    let (z, one) = (l.gen(), l.one());
    out.push(e("(t, i t)", branch(&l, 1, &[(1, z.clone())])));
    out.push(e("(t^2, t^3 + i t^4)", branch(&l, 2, &[(3, one.clone()), (4, z.clone())])));
    out.push(e("(t^2, i t^3)", branch(&l, 2, &[(3, z.clone())])));

    let l = field(&[1, 1, 1]);
    let z = l.gen();
    out.push(e("(t^3, w t^4)", branch(&l, 3, &[(4, z.clone())])));
    out.push(e("(t, w t)", branch(&l, 1, &[(1, z.clone())])));

    let l = field(&[-2, 0, 0, 1]);
    let (z, one) = (l.gen(), l.one());
    out.push(e("(t, cbrt2 t)", branch(&l, 1, &[(1, z.clone())])));
    out.push(e("(t^3, cbrt2 t^4)", branch(&l, 3, &[(4, z.clone())])));
    out.push(e("(t^2, t^3 + cbrt2 t^4)", branch(&l, 2, &[(3, one.clone()), (4, z.clone())])));

    let l = field(&[-1, -3, 0, 1]);
    let z = l.gen();
    out.push(e("(t, a t + a^2 t^2), a^3 = 3a + 1", branch(&l, 1, &[(1, z.clone()), (2, z.mul(&z))])));

    let l = field(&[1, 0, -10, 0, 1]);
    let s2 = elt(&l, &[q(0, 1), q(-9, 2), q(0, 1), q(1, 2)]);
    let s3 = elt(&l, &[q(0, 1), q(11, 2), q(0, 1), q(-1, 2)]);
    out.push(e("(t, sqrt2 t + sqrt3 t^2)", branch(&l, 1, &[(1, s2.clone()), (2, s3.clone())])));
    out.push(e("(t^2, t^3 + sqrt2 t^4 + sqrt3 t^5)", branch(&l, 2, &[(3, l.one()), (4, s2), (5, s3)])));

    let l = field(&[-2, 0, 0, 0, 1]);
    let (z, one) = (l.gen(), l.one());
    out.push(e("(t, r^2 t + r t^2), r^4 = 2", branch(&l, 1, &[(1, z.mul(&z)), (2, z.clone())])));
    out.push(e("(t^2, t^3 + r t^4), r^4 = 2", branch(&l, 2, &[(3, one.clone()), (4, z.clone())])));
    out
}

/// Divisorial targets: (name, branch, extra blow-ups).
pub fn divisorial_corpus() -> Vec<(&'static str, BranchParam, usize)> {
    let l = AmbientField::rationals();
    let one = l.one();
    let s = field(&[-2, 0, 1]);
    vec![
        ("first blow-up", branch(&l, 1, &[]), 0),
        ("second blow-up along y = 0", branch(&l, 1, &[]), 1),
        ("tau_1 of the cusp", branch(&l, 2, &[(3, one.clone())]), 0),
        ("past the splitting point of (t, sqrt2 t)", branch(&s, 1, &[(1, s.gen())]), 0),
        ("cusp plus two blow-ups", branch(&l, 2, &[(3, one.clone())]), 2),
        ("(t, sqrt2 t) plus two blow-ups", branch(&s, 1, &[(1, s.gen())]), 2),
        ("after the field jump of (t^2, t^3 + sqrt2 t^4)", branch(&s, 2, &[(3, s.one()), (4, s.gen())]), 0),
    ]
}

/// Branches with a generic coefficient.
pub fn generic_corpus() -> Vec<(&'static str, BranchParam)> {
    let l = AmbientField::rationals();
    let s = field(&[-2, 0, 1]);
    let g = |m, t: Vec<(usize, Coef)>, f: &Arc<AmbientField>| BranchParam::new(f, m, t);
    let n = |a: &AlgNum| Coef::Num(a.clone());
    vec![
        ("(t, T t)", g(1, vec![(1, Coef::Generic)], &l)),
        ("(t^2, T t^3)", g(2, vec![(3, Coef::Generic)], &l)),
        ("(t^2, t^3 + T t^5)", g(2, vec![(3, n(&l.one())), (5, Coef::Generic)], &l)),
        ("(t^2, T t^2 + t^3)", g(2, vec![(2, Coef::Generic), (3, n(&l.one()))], &l)),
        ("(t, sqrt2 t + T t^2)", g(1, vec![(1, n(&s.gen())), (2, Coef::Generic)], &s)),
    ]
}
