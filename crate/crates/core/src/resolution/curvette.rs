use super::blowup::{blow_up_step, Chart, ChartParam};
use super::process::{with_precision, Resolution};
use super::{InfNearRecord, PlaneParam, PointCoord, ResolutionError};
use crate::exactfield::AlgNum;
use crate::scalar::{RatFun, Scalar};
use crate::series::{Order, TauSeries};

/// Points of E_σ, in its first chart, that are blown up later or lie on another component.
fn special_points(res: &Resolution, sigma: usize) -> Vec<AlgNum> {
    let field = res.records[0].field_after.field().clone();
    let mut out = Vec::new();
    if let Some(PointCoord::Finite(b)) = res.records.get(sigma + 1).map(|r| &r.center) {
        out.push(b.clone());
    }
    if res.chart_one_other[sigma].is_some() {
        out.push(field.zero());
    }
    out
}

/// Smallest positive integer that is neither a special point of E_σ nor the point where the
/// branch meets it, so that the curvette and the branch separate on E_σ.
pub fn curvette_constant(res: &Resolution, sigma: usize) -> AlgNum {
    let field = res.records[0].field_after.field().clone();
    let mut avoid = special_points(res, sigma);
    if let (true, PointCoord::Finite(b)) = (sigma == res.delta(), &res.final_point) {
        avoid.push(b.clone());
    }
    (1..).map(|c| field.int(c)).find(|c| !avoid.contains(c)).expect("finitely many special points")
}

fn push_down<S: Scalar>(u: TauSeries<S>, w: TauSeries<S>, chart: Chart, a: &S) -> (TauSeries<S>, TauSeries<S>) {
    match chart {
        Chart::One => {
            let w = u.mul(&w).add_constant(a);
            (u, w)
        }
        Chart::Two => (u.mul(&w), u.add_constant(a)),
    }
}

/// Blow-down of {u = τ, w = c} on the first chart of component σ.
fn compose_down<S: Scalar>(res: &Resolution, sigma: usize, c: S) -> PlaneParam<S> {
    let field = res.records[0].field_after.field().clone();
    let embed = |p: &PointCoord| c.embed(&p.chart_value(&field));
    let u = TauSeries::monomial(c.one_like(), 1);
    let w = TauSeries::exact(vec![c.clone()], c.zero_like());
    let (mut u, mut w) = push_down(u, w, Chart::One, &embed(&res.records[sigma].center));
    for k in (1..=sigma).rev() {
        let chart = match res.records[k].center {
            PointCoord::AtInfinity => Chart::Two,
            _ => Chart::One,
        };
        (u, w) = push_down(u, w, chart, &embed(&res.records[k - 1].center));
    }
    PlaneParam { x: u, y: w }
}

/// Curvette through component σ at first-chart coordinate c, as polynomials over K_σ.
pub fn curvette_param(res: &Resolution, sigma: usize, c: &AlgNum) -> Result<PlaneParam<AlgNum>, ResolutionError> {
    if sigma >= res.len() {
        return Err(ResolutionError::NoSuchVertex(sigma));
    }
    if !res.records[sigma].field_after.contains(c) || special_points(res, sigma).contains(c) {
        return Err(ResolutionError::BadConstant(c.to_string()));
    }
    Ok(compose_down(res, sigma, c.clone()))
}

/// Curvette at σ through the point with indeterminate coordinate T.
pub fn generic_curvette(res: &Resolution, sigma: usize) -> Result<PlaneParam<RatFun>, ResolutionError> {
    if sigma >= res.len() {
        return Err(ResolutionError::NoSuchVertex(sigma));
    }
    let field = res.records[0].field_after.field().clone();
    Ok(compose_down(res, sigma, RatFun::indeterminate(&field)))
}

fn same_point(a: &PointCoord, b: &PointCoord) -> bool {
    !matches!(a, PointCoord::Generic) && a == b
}

fn through_origin<S: Scalar>(p: &PlaneParam<S>) -> bool {
    p.x.coeff(0).is_ok_and(|c| c.is_zero()) && p.y.coeff(0).is_ok_and(|c| c.is_zero())
}

/// Multiplicities of `carrier` at the points of a reference chain; 0 after it leaves the chain.
pub fn strict_mults<S: Scalar>(carrier: &PlaneParam<S>, reference: &[InfNearRecord]) -> Result<Vec<usize>, ResolutionError> {
    let n = reference.len();
    if n == 0 || !through_origin(carrier) {
        return Ok(vec![0; n]);
    }
    with_precision(2 * carrier.degree() + 8, |work| {
        let mut out = vec![0; n];
        let mut state = ChartParam { u: carrier.x.clone(), w: carrier.y.clone() };
        for k in 0..n {
            let bu = blow_up_step(&state, work)?;
            out[k] = bu.mult;
            if k + 1 == n || !same_point(&bu.center, &reference[k + 1].center) {
                break;
            }
            state = bu.next;
        }
        Ok(out)
    })
}

pub fn noether_sum(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Intersection multiplicity at the origin by Noether's formula.
///
/// Two distinct branches parametrized by polynomials of degrees d_a, d_b meet with multiplicity
/// at most d_a·d_b, so a running sum beyond that certifies that the branches coincide.
pub fn intersect_noether(a: &PlaneParam<AlgNum>, b: &PlaneParam<AlgNum>) -> Result<Order, ResolutionError> {
    if !through_origin(a) || !through_origin(b) {
        return Ok(Order::Finite(0));
    }
    let bound = a.degree() * b.degree();
    with_precision(2 * a.degree().max(b.degree()) + 8, |work| {
        let mut sa = ChartParam { u: a.x.clone(), w: a.y.clone() };
        let mut sb = ChartParam { u: b.x.clone(), w: b.y.clone() };
        let mut sum = 0;
        loop {
            let ba = blow_up_step(&sa, work)?;
            let bb = blow_up_step(&sb, work)?;
            sum += ba.mult * bb.mult;
            if sum > bound {
                return Ok(Order::Infinity);
            }
            if !same_point(&ba.center, &bb.center) {
                return Ok(Order::Finite(sum));
            }
            sa = ba.next;
            sb = bb.next;
        }
    })
}

/// m_σ = C ∘ C_σ for every vertex, through curvettes replayed along the branch's chain.
pub fn m_values(res: &Resolution) -> Result<Vec<usize>, ResolutionError> {
    let own = res.branch_mults();
    (0..res.len())
        .map(|s| {
            let phi = curvette_param(res, s, &curvette_constant(res, s))?;
            Ok(noether_sum(&own, &strict_mults(&phi, &res.records)?))
        })
        .collect()
}

/// Curvette multiplicities at σ from proximity alone: the multiplicity at a point equals the
/// sum over the points proximate to it.
pub fn proximity_mults(res: &Resolution, sigma: usize) -> Vec<usize> {
    let mut e = vec![0; res.len()];
    e[sigma] = 1;
    for k in (0..sigma).rev() {
        e[k] = (k + 1..=sigma)
            .filter(|&j| res.records[j].host_components.contains(&k))
            .map(|j| e[j])
            .sum();
    }
    e
}
