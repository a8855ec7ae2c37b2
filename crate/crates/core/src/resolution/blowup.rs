use super::{PointCoord, ResolutionError};
use crate::scalar::Scalar;
use crate::series::{Order, TauSeries};

/// Which standard chart of the new component contains the strict transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// u' = u, w' = (w - a)/u: every point except the one at infinity.
    One,
    /// u' = w - a, w' = u/(w - a): the point at infinity, where the old component meets the new one.
    Two,
}

/// A branch in local chart coordinates (u, w), centered so that u(0) = w(0) = 0.
/// The exceptional component of the chart, if any, is {u = 0}.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartParam<S> {
    pub u: TauSeries<S>,
    pub w: TauSeries<S>,
}

#[derive(Debug, Clone)]
pub struct BlowUp<S> {
    /// Multiplicity of the branch at the blown-up point.
    pub mult: usize,
    pub chart: Chart,
    /// Coordinate on the new component of the point the strict transform passes through.
    pub center: PointCoord,
    /// Raw chart-one value of that coordinate (zero for the point at infinity).
    pub raw_center: S,
    /// Strict transform centered at the new point.
    pub next: ChartParam<S>,
    /// Intersection multiplicity of the strict transform with the new component there.
    pub contact: usize,
}

/// One blow-up of the origin of the chart. Generic centers are reported, not rejected.
pub fn blow_up_step<S: Scalar>(p: &ChartParam<S>, work: usize) -> Result<BlowUp<S>, ResolutionError> {
    let ou = p.u.order()?;
    let ow = p.w.order()?;
    let mult = ou.min(ow).finite().ok_or(ResolutionError::NotAtOrigin)?;
    if mult == 0 {
        return Err(ResolutionError::NotAtOrigin);
    }
    let zero = p.u.zero_scalar().clone();
    if ow >= ou {
        let w1 = p.w.div(&p.u, work)?;
        let b = w1.coeff(0)?;
        let center = match b.as_constant() {
            Some(c) => PointCoord::Finite(c),
            None => PointCoord::Generic,
        };
        let next = ChartParam { u: p.u.clone(), w: w1.add_constant(&b.neg()) };
        let contact = finite(ou);
        Ok(BlowUp { mult, chart: Chart::One, center, raw_center: b, next, contact })
    } else {
        let w2 = p.u.div(&p.w, work)?;
        let next = ChartParam { u: p.w.clone(), w: w2 };
        let contact = finite(ow);
        Ok(BlowUp { mult, chart: Chart::Two, center: PointCoord::AtInfinity, raw_center: zero, next, contact })
    }
}

fn finite(o: Order) -> usize {
    o.finite().expect("order compared against a finite one")
}

/// One blow-up over L; a generic center is an error here.
pub fn blow_up_once<S: Scalar>(p: &ChartParam<S>, work: usize) -> Result<BlowUp<S>, ResolutionError> {
    let b = blow_up_step(p, work)?;
    if b.center == PointCoord::Generic {
        return Err(ResolutionError::GenericCenter);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{AlgNum, AmbientField};
    use std::sync::Arc;

    fn chart(l: &Arc<AmbientField>, u: &[(usize, AlgNum)], w: &[(usize, AlgNum)]) -> ChartParam<AlgNum> {
        ChartParam { u: TauSeries::from_terms(u, l.zero()), w: TauSeries::from_terms(w, l.zero()) }
    }

    #[test]
    fn cusp_first_blow_up() {
        let l = AmbientField::rationals();
        let b = blow_up_once(&chart(&l, &[(2, l.one())], &[(3, l.one())]), 8).unwrap();
        assert_eq!((b.mult, b.chart, b.center), (2, Chart::One, PointCoord::Finite(l.zero())));
        assert_eq!(b.next.u, TauSeries::monomial(l.one(), 2));
        assert_eq!(b.next.w, TauSeries::monomial(l.one(), 1));
    }

    #[test]
    fn irrational_slope() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let b = blow_up_once(&chart(&l, &[(1, l.one())], &[(1, l.gen())]), 8).unwrap();
        assert_eq!((b.mult, b.center), (1, PointCoord::Finite(l.gen())));
        assert_eq!(b.next.w.order().unwrap(), Order::Infinity);
    }

    #[test]
    fn leading_coefficient_of_quotient() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let b = blow_up_once(&chart(&l, &[(2, l.one())], &[(2, l.gen()), (5, l.one())]), 8).unwrap();
        assert_eq!((b.mult, b.center), (2, PointCoord::Finite(l.gen())));
    }

    #[test]
    fn tangent_to_the_old_axis_goes_to_chart_two() {
        let l = AmbientField::rationals();
        let b = blow_up_once(&chart(&l, &[(2, l.one())], &[(1, l.one())]), 8).unwrap();
        assert_eq!((b.mult, b.chart, b.center, b.contact), (1, Chart::Two, PointCoord::AtInfinity, 1));
    }
}
