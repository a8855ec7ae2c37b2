//! Blow-up resolution of a parametrized branch, tracking the field generated by the centers.
//!
//! The quotient dual graph is built directly: only one representative of each Galois orbit of
//! infinitely near points is blown up, and a center outside the current field marks its host
//! component as splitting.

mod blowup;
mod curvette;
mod graph;
mod process;

pub use blowup::{blow_up_once, blow_up_step, BlowUp, Chart, ChartParam};
pub use curvette::{
    curvette_constant, curvette_param, generic_curvette, intersect_noether, m_values,
    noether_sum, proximity_mults, strict_mults,
};
pub use graph::{intersection_matrix, minus_inverse, CaseTag, QuotientGraph, Vertex, VertexKind};
pub use process::{case_iii_reduce, field_of_definition, resolve, resolve_divisorial, Resolution, Splitting};

use crate::exactfield::{AlgNum, AmbientField, FieldError};
use crate::scalar::{RatFun, Scalar};
use crate::series::{SeriesError, TauSeries};
use num_integer::Integer;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResolutionError {
    #[error("parametrization is not irreducible: gcd of the exponents is {0}")]
    NotIrreducibleParam(usize),
    #[error("parametrization does not pass through the origin")]
    NotAtOrigin,
    #[error("center of the blow-up is generic")]
    GenericCenter,
    #[error("more than one generic coefficient")]
    MultipleGeneric,
    #[error("curvette constant {0} is a special point or lies outside the component's field")]
    BadConstant(String),
    #[error("{0} is not a root of the minimal polynomial")]
    NotARoot(String),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("resolution did not terminate within {0} blow-ups")]
    NoTermination(usize),
    #[error("intersection matrix is singular")]
    SingularMatrix,
    #[error("series precision exhausted")]
    PrecisionExhausted,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A coefficient of the y-series: an element of L or the generic marker.
#[derive(Debug, Clone, PartialEq)]
pub enum Coef {
    Num(AlgNum),
    Generic,
}

/// x = τ^m, y = Σ c_i τ^i, or the same with the axes exchanged when `swapped`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchParam {
    pub ambient: Arc<AmbientField>,
    pub x_order: usize,
    pub y_terms: Vec<(usize, Coef)>,
    pub swapped: bool,
}

impl BranchParam {
    pub fn new(ambient: &Arc<AmbientField>, x_order: usize, y_terms: Vec<(usize, Coef)>) -> Self {
        BranchParam { ambient: ambient.clone(), x_order, y_terms, swapped: false }
    }

    /// Convenience constructor with every coefficient in L.
    pub fn with_coeffs(ambient: &Arc<AmbientField>, x_order: usize, terms: &[(usize, AlgNum)]) -> Self {
        Self::new(ambient, x_order, terms.iter().map(|(e, c)| (*e, Coef::Num(c.clone()))).collect())
    }

    pub fn has_generic(&self) -> bool {
        self.y_terms.iter().any(|(_, c)| matches!(c, Coef::Generic))
    }

    /// Terms with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &(usize, Coef)> {
        self.y_terms.iter().filter(|(_, c)| match c {
            Coef::Num(a) => !a.is_zero(),
            Coef::Generic => true,
        })
    }

    /// Largest exponent in the parametrization.
    pub fn degree(&self) -> usize {
        self.support().map(|(e, _)| *e).max().unwrap_or(0).max(self.x_order)
    }

    /// Orders of the two coordinates (None for y ≡ 0).
    pub fn y_order(&self) -> Option<usize> {
        self.support().map(|(e, _)| *e).min()
    }

    fn series_pair<S: Scalar>(&self, zero: &S, map: impl Fn(&Coef) -> S) -> PlaneParam<S> {
        let m = TauSeries::monomial(zero.one_like(), self.x_order);
        let terms: Vec<(usize, S)> = self.support().map(|(e, c)| (*e, map(c))).collect();
        let y = TauSeries::from_terms(&terms, zero.clone());
        if self.swapped {
            PlaneParam { x: y, y: m }
        } else {
            PlaneParam { x: m, y }
        }
    }

    /// The parametrization as a pair of polynomials over L. Fails on a generic coefficient.
    pub fn plane_param(&self) -> Result<PlaneParam<AlgNum>, ResolutionError> {
        if self.has_generic() {
            return Err(ResolutionError::GenericCenter);
        }
        Ok(self.series_pair(&self.ambient.zero(), |c| match c {
            Coef::Num(a) => a.clone(),
            Coef::Generic => unreachable!(),
        }))
    }

    /// The parametrization over L(T), the generic marker becoming the indeterminate T.
    pub fn plane_param_generic(&self) -> PlaneParam<RatFun> {
        let t = RatFun::indeterminate(&self.ambient);
        self.series_pair(&t.zero_like(), |c| match c {
            Coef::Num(a) => RatFun::constant(a),
            Coef::Generic => t.clone(),
        })
    }
}

impl fmt::Display for BranchParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ys = Vec::new();
        for (e, c) in self.support() {
            let c = match c {
                Coef::Num(a) if a.is_one() => String::new(),
                Coef::Num(a) => format!("({a})*"),
                Coef::Generic => "GENERIC*".into(),
            };
            ys.push(format!("{c}t^{e}"));
        }
        let y = if ys.is_empty() { "0".into() } else { ys.join(" + ") };
        let x = format!("t^{}", self.x_order);
        if self.swapped {
            write!(f, "(x = {y}, y = {x})")
        } else {
            write!(f, "(x = {x}, y = {y})")
        }
    }
}

/// A general polynomial parametrization (x(τ), y(τ)).
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneParam<S> {
    pub x: TauSeries<S>,
    pub y: TauSeries<S>,
}

impl<S: Scalar> PlaneParam<S> {
    /// max(deg x, deg y); bounds the degree of the image curve.
    pub fn degree(&self) -> usize {
        self.x.degree().unwrap_or(0).max(self.y.degree().unwrap_or(0))
    }
}

/// Coordinate of an infinitely near point on the component that carries it.
#[derive(Debug, Clone, PartialEq)]
pub enum PointCoord {
    /// The origin of the plane (no component).
    Origin,
    /// A point with coordinate b in the first standard chart.
    Finite(AlgNum),
    /// The point at infinity of the first chart, covered by the second one.
    AtInfinity,
    /// A center whose coordinate involves the generic indeterminate.
    Generic,
}

impl PointCoord {
    /// Coordinate of the point inside its own chart.
    pub(crate) fn chart_value(&self, field: &Arc<AmbientField>) -> AlgNum {
        match self {
            PointCoord::Finite(a) => a.clone(),
            _ => field.zero(),
        }
    }
}

impl fmt::Display for PointCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointCoord::Origin => write!(f, "origin"),
            PointCoord::Finite(a) => write!(f, "{a}"),
            PointCoord::AtInfinity => write!(f, "infinity"),
            PointCoord::Generic => write!(f, "generic"),
        }
    }
}

/// A blown-up point of the chain.
#[derive(Debug, Clone)]
pub struct InfNearRecord {
    pub step: usize,
    pub center: PointCoord,
    /// Multiplicity of the strict transform at this point.
    pub branch_mult: usize,
    /// Field generated by this and all earlier centers.
    pub field_after: crate::exactfield::Subfield,
    /// Components through the point (vertex ids); empty for the origin.
    pub host_components: Vec<usize>,
}

/// Checks irreducibility and puts the coordinate of smaller order first.
pub fn normalize(p: &BranchParam) -> Result<BranchParam, ResolutionError> {
    let g = p.support().fold(p.x_order, |g, (e, _)| g.gcd(e));
    if p.x_order == 0 {
        return Err(ResolutionError::NotAtOrigin);
    }
    if g > 1 {
        return Err(ResolutionError::NotIrreducibleParam(g));
    }
    if p.support().any(|(e, _)| *e == 0) {
        return Err(ResolutionError::NotAtOrigin);
    }
    if p.support().filter(|(_, c)| matches!(c, Coef::Generic)).count() > 1 {
        return Err(ResolutionError::MultipleGeneric);
    }
    let mut terms: Vec<(usize, Coef)> = p.support().cloned().collect();
    terms.sort_by_key(|(e, _)| *e);
    let mut out = BranchParam { ambient: p.ambient.clone(), x_order: p.x_order, y_terms: terms, swapped: p.swapped };
    if let Some(k) = out.y_order() {
        if k < out.x_order {
            match out.y_terms.as_slice() {
                [(e, Coef::Num(c))] if c.is_one() => {
                    // a pure exchange of two monomials
                    let m = out.x_order;
                    out.x_order = *e;
                    out.y_terms = vec![(m, Coef::Num(c.clone()))];
                }
                _ => out.swapped = !out.swapped,
            }
        }
    }
    Ok(out)
}

/// Applies the field map z ↦ r to every coefficient.
pub fn conjugate_param(p: &BranchParam, r: &AlgNum) -> Result<BranchParam, ResolutionError> {
    if !r.eval_rational_poly(p.ambient.min_poly()).is_zero() {
        return Err(ResolutionError::NotARoot(r.to_string()));
    }
    let y_terms = p
        .y_terms
        .iter()
        .map(|(e, c)| {
            let c = match c {
                Coef::Num(a) => Coef::Num(a.substitute_gen(r)),
                Coef::Generic => Coef::Generic,
            };
            (*e, c)
        })
        .collect();
    Ok(BranchParam { y_terms, ..p.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<AmbientField> {
        AmbientField::rationals()
    }

    #[test]
    fn normalize_swaps_monomials() {
        let l = q();
        let p = BranchParam::with_coeffs(&l, 3, &[(2, l.one())]);
        let n = normalize(&p).unwrap();
        assert_eq!((n.x_order, n.y_terms.clone()), (2, vec![(3, Coef::Num(l.one()))]));
        let cusp = BranchParam::with_coeffs(&l, 2, &[(3, l.one())]);
        assert_eq!(normalize(&cusp).unwrap(), cusp);
    }

    #[test]
    fn normalize_rejects_reducible() {
        let l = q();
        let p = BranchParam::with_coeffs(&l, 2, &[(4, l.one())]);
        assert_eq!(normalize(&p), Err(ResolutionError::NotIrreducibleParam(2)));
    }

    #[test]
    fn normalize_flags_non_monomial_swap() {
        let l = q();
        let p = BranchParam::with_coeffs(&l, 3, &[(2, l.one()), (4, l.one())]);
        let n = normalize(&p).unwrap();
        assert!(n.swapped);
        let pp = n.plane_param().unwrap();
        assert_eq!(pp.x.order().unwrap().finite(), Some(2));
        assert_eq!(pp.y.order().unwrap().finite(), Some(3));
    }

    #[test]
    fn conjugation_flips_sign() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let p = BranchParam::with_coeffs(&l, 2, &[(3, l.one()), (4, l.gen())]);
        let c = conjugate_param(&p, &l.gen().neg()).unwrap();
        assert_eq!(c.y_terms[1].1, Coef::Num(l.gen().neg()));
        assert_eq!(conjugate_param(&p, &l.gen()).unwrap(), p);
        assert!(matches!(conjugate_param(&p, &l.one()), Err(ResolutionError::NotARoot(_))));
    }
}
