//! Small examples computed by hand, and structural invariants over the corpus.

mod common;

use common::*;
use kpoincare::analysis::{analyze, Mode};
use kpoincare::exactfield::{nf_arith, rel_degree, span_close, NfOp, Subfield};
use kpoincare::oracle::{value_of, PolyXY};
use kpoincare::poincare::{
    binomial_factorization, classical_series, expand, gaps, membership, minimal_generator_check,
    partial_series, semigroup_series, PoincareError, SeriesExpansion,
};
use kpoincare::resolution::{
    blow_up_once, conjugate_param, curvette_param, intersect_noether, resolve, ChartParam, PointCoord,
    VertexKind,
};
use kpoincare::{AmbientField, Order, PlaneParam, TauSeries};
use num_integer::Integer;

#[test]
fn quadratic_field_arithmetic() {
    let l = field(&[-2, 0, 1]);
    let z = l.gen();
    assert_eq!(nf_arith(&z, &z, NfOp::Mul).unwrap(), l.int(2));
    let inv = nf_arith(&l.element_from_ints(&[1, 1]), &z, NfOp::InvOfA).unwrap();
    assert_eq!(inv, l.element_from_ints(&[-1, 1]));
    let q = Subfield::rationals(&l);
    let k = span_close(&[z.clone()], &q);
    assert_eq!(rel_degree(&q, &k).unwrap(), 2);
    assert!(!q.contains(&z));
    assert!(k.contains(&z));
}

#[test]
fn blow_up_examples() {
    let l = AmbientField::rationals();
    let s = |t: &[(usize, i64)]| TauSeries::from_terms(&t.iter().map(|&(e, c)| (e, l.int(c))).collect::<Vec<_>>(), l.zero());
    let b = blow_up_once(&ChartParam { u: s(&[(2, 1)]), w: s(&[(3, 1)]) }, 16).unwrap();
    assert_eq!((b.mult, b.center.clone()), (2, PointCoord::Finite(l.zero())));
    assert_eq!(b.next.w, s(&[(1, 1)]));

    let r = field(&[-2, 0, 1]);
    let u = TauSeries::from_terms(&[(2, r.one())], r.zero());
    let w = TauSeries::from_terms(&[(2, r.gen()), (5, r.one())], r.zero());
    let b = blow_up_once(&ChartParam { u, w }, 16).unwrap();
    assert_eq!((b.mult, b.center), (2, PointCoord::Finite(r.gen())));
}

#[test]
fn resolve_examples() {
    let l = AmbientField::rationals();
    let line = resolve(&branch(&l, 1, &[])).unwrap();
    assert_eq!(line.len(), 1);
    assert!(line.graph.vertices[0].kinds.contains(&VertexKind::Delta));

    let s = field(&[-2, 0, 1]);
    let r = resolve(&branch(&s, 1, &[(1, s.gen())])).unwrap();
    assert_eq!(r.graph.geodesic, vec![0, 1]);
    assert!(r.graph.vertices[0].kinds.contains(&VertexKind::Splitting(1)));
    assert_eq!(r.splitting[0].ell, 2);
}

#[test]
fn curvette_of_the_irrational_line() {
    let s = field(&[-2, 0, 1]);
    let r = resolve(&branch(&s, 1, &[(1, s.gen())])).unwrap();
    let c = curvette_param(&r, 1, &s.one()).unwrap();
    assert_eq!(c.x, TauSeries::from_terms(&[(1, s.one())], s.zero()));
    assert_eq!(c.y, TauSeries::from_terms(&[(1, s.gen()), (2, s.one())], s.zero()));
}

#[test]
fn noether_agrees_with_substitution() {
    let l = AmbientField::rationals();
    let one = l.one();
    let lines = [PolyXY::monomial(0, 1), PolyXY::monomial(1, 0)];
    for c in rational_corpus() {
        let p = c.branch.plane_param().unwrap();
        for f in &lines {
            // the zero set of x or y, parametrized
            let t = TauSeries::from_terms(&[(1, one.clone())], l.zero());
            let zero = TauSeries::zero_series(l.zero());
            let curve = if f == &PolyXY::monomial(0, 1) {
                PlaneParam { x: t, y: zero }
            } else {
                PlaneParam { x: zero, y: t }
            };
            assert_eq!(intersect_noether(&p, &curve).unwrap(), value_of(f, &c.branch).unwrap().0, "{}", c.name);
        }
        // the cusp y^2 = x^3 against every corpus branch
        let cusp = PlaneParam {
            x: TauSeries::from_terms(&[(2, one.clone())], l.zero()),
            y: TauSeries::from_terms(&[(3, one.clone())], l.zero()),
        };
        let f = PolyXY::from_ints(&[(0, 2, 1), (3, 0, -1)]);
        assert_eq!(intersect_noether(&p, &cusp).unwrap(), value_of(&f, &c.branch).unwrap().0, "{}", c.name);
    }
}

#[test]
fn enriques_proximity_equalities() {
    for c in rational_corpus().into_iter().chain(field_corpus()) {
        let r = resolve(&c.branch).unwrap();
        let e = r.branch_mults();
        for k in 0..r.len() {
            let proximate: usize = (k + 1..r.len()).filter(|&j| r.records[j].host_components.contains(&k)).map(|j| e[j]).sum();
            // the last points carry the smooth strict transform, which is not proximate to anything
            if e[k] > 1 {
                assert_eq!(e[k], proximate, "{} at point {k}", c.name);
            }
        }
    }
}

#[test]
fn numerical_data_invariants() {
    for c in rational_corpus().into_iter().chain(field_corpus()) {
        let nd = analyze(&c.branch, Mode::Curve).unwrap().numerical;
        for i in 1..=nd.g() {
            assert_eq!(nd.big_m_tau[i - 1], nd.n[i - 1] * nd.big_m_sigma[i], "{}", c.name);
        }
        let mut g = 0u64;
        for i in 0..=nd.g() {
            g = g.gcd(&nd.big_m_sigma[i]);
            assert_eq!(g, nd.e[i], "{}", c.name);
        }
        assert!(nd.n.iter().all(|&n| n >= 2));
        let e = expand(&semigroup_series(&nd), 40);
        for v in 0..=40u64 {
            assert_eq!(e.coeffs[v as usize], membership(&nd.big_m_sigma, v) as i64, "{}", c.name);
        }
    }
}

#[test]
fn partial_series_grow_by_one_factor() {
    for c in field_corpus() {
        let nd = analyze(&c.branch, Mode::Curve).unwrap().numerical;
        assert_eq!(partial_series(&nd, 1).unwrap().normalized(), semigroup_series(&nd).normalized());
        assert_eq!(partial_series(&nd, nd.s() + 1).unwrap(), classical_series(&nd));
        for j in 1..=nd.s() {
            let d = nd.splitting[j - 1];
            let lo = expand(&partial_series(&nd, j).unwrap(), 40).coeffs;
            let hi = expand(&partial_series(&nd, j + 1).unwrap(), 40).coeffs;
            let conv: Vec<i64> = (0..=40)
                .map(|v| (0..d.ell).map(|k| k * d.m_rho).filter(|&s| s <= v).map(|s| lo[(v - s) as usize]).sum())
                .collect();
            assert_eq!(hi, conv, "{} at j = {j}", c.name);
        }
    }
}

#[test]
fn semigroup_examples() {
    assert!(!membership(&[2, 3], 1));
    assert_eq!(gaps(&[2, 3], 10), vec![1]);
    assert!(gaps(&[1], 10).is_empty());
    assert!(minimal_generator_check(&[1], &[]).is_ok());
}

#[test]
fn factorization_examples() {
    let one_over = SeriesExpansion { coeffs: vec![1; 8] };
    let err = binomial_factorization(&one_over, None).unwrap_err();
    assert_eq!(err, PoincareError::TruncationInconclusive { partial: vec![(1, -1)] });
    let s = field(&[-2, 0, 1]);
    let a = analyze(&branch(&s, 1, &[(1, s.gen())]), Mode::Curve).unwrap();
    let f = binomial_factorization(&a.expansion(8), Some(&a.series)).unwrap();
    assert_eq!(f.factors, vec![(1, -2), (2, 1)]);
}

#[test]
fn conjugation_flips_the_irrational_coefficient() {
    let s = field(&[-2, 0, 1]);
    let b = branch(&s, 2, &[(3, s.one()), (4, s.gen())]);
    let c = conjugate_param(&b, &s.gen().neg()).unwrap();
    let f = PolyXY::from_ints(&[(0, 2, 1), (3, 0, -1)]);
    let (vb, ab) = value_of(&f, &b).unwrap();
    let (vc, ac) = value_of(&f, &c).unwrap();
    assert_eq!(vb, vc);
    assert_eq!(ab.unwrap().neg(), ac.unwrap());
    assert_eq!(vb, Order::Finite(7));
}
