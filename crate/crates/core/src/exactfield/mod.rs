//! Exact arithmetic in a number field L = ℚ[z]/(p(z)) and in its subfields.

pub(crate) mod poly;
mod subfield;

pub use subfield::{rel_degree, span_close, Subfield};

use crate::linalg::Q;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("minimal polynomial is reducible (nontrivial gcd {0} found while inverting)")]
    ReduciblePolynomial(String),
    #[error("minimal polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("minimal polynomial is not square-free")]
    NotSquareFree,
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("elements belong to different ambient fields")]
    FieldMismatch,
    #[error("inner space is not contained in the outer subfield")]
    NotASubfield,
    #[error("dimension {outer} is not a multiple of {inner}")]
    NonIntegralDegree { inner: usize, outer: usize },
}

/// The ambient field ℚ[z]/(p(z)); p is monic and square-free.
#[derive(Debug, PartialEq, Eq)]
pub struct AmbientField {
    var: String,
    min_poly: Vec<Q>,
}

impl AmbientField {
    /// `min_poly` is lowest degree first and must be monic.
    pub fn new(var: &str, min_poly: Vec<Q>) -> Result<Arc<Self>, FieldError> {
        let mut p = min_poly;
        poly::trim(&mut p);
        match poly::degree(&p) {
            Some(d) if d >= 1 && p[d].is_one() => {}
            _ => return Err(FieldError::NotMonic),
        }
        let g = poly::gcd(&p, &poly::derivative(&p));
        if poly::degree(&g) != Some(0) {
            return Err(FieldError::NotSquareFree);
        }
        Ok(Arc::new(AmbientField { var: var.to_string(), min_poly: p }))
    }

    /// ℚ itself, presented as ℚ[z]/(z).
    pub fn rationals() -> Arc<Self> {
        Arc::new(AmbientField { var: "z".into(), min_poly: vec![Q::zero(), Q::one()] })
    }

    pub fn from_ints(var: &str, min_poly: &[i64]) -> Result<Arc<Self>, FieldError> {
        Self::new(var, min_poly.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn min_poly(&self) -> &[Q] {
        &self.min_poly
    }

    pub fn zero(self: &Arc<Self>) -> AlgNum {
        AlgNum { field: self.clone(), coords: vec![Q::zero(); self.degree()] }
    }

    pub fn one(self: &Arc<Self>) -> AlgNum {
        self.rational(Q::one())
    }

    pub fn rational(self: &Arc<Self>, q: Q) -> AlgNum {
        let mut a = self.zero();
        a.coords[0] = q;
        a
    }

    pub fn int(self: &Arc<Self>, n: i64) -> AlgNum {
        self.rational(Q::from_integer(n.into()))
    }

    /// The class of z. In ℚ[z]/(z) this is 0.
    pub fn gen(self: &Arc<Self>) -> AlgNum {
        self.from_poly(&[Q::zero(), Q::one()])
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Q>) -> Result<AlgNum, FieldError> {
        if coords.len() != self.degree() {
            return Err(FieldError::DimensionMismatch { expected: self.degree(), got: coords.len() });
        }
        Ok(AlgNum { field: self.clone(), coords })
    }

    pub fn element_from_ints(self: &Arc<Self>, coords: &[i64]) -> AlgNum {
        self.from_poly(&coords.iter().map(|&c| Q::from_integer(c.into())).collect::<Vec<_>>())
    }

    /// Reduces an arbitrary polynomial in z modulo p.
    pub fn from_poly(self: &Arc<Self>, c: &[Q]) -> AlgNum {
        AlgNum { field: self.clone(), coords: self.reduce(c.to_vec()) }
    }

    fn reduce(&self, mut c: Vec<Q>) -> Vec<Q> {
        let n = self.degree();
        let p = &self.min_poly;
        for k in (n..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let f = std::mem::take(&mut c[k]);
            for i in 0..n {
                if !p[i].is_zero() {
                    c[k - n + i] -= &f * &p[i];
                }
            }
        }
        c.resize(n, Q::zero());
        c
    }
}

/// An element of an ambient number field in power-basis coordinates.
#[derive(Clone)]
pub struct AlgNum {
    field: Arc<AmbientField>,
    coords: Vec<Q>,
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
            && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for AlgNum {}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgNum({self})")
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = self.field.var();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "{var}")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl AlgNum {
    pub fn field(&self) -> &Arc<AmbientField> {
        &self.field
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Q> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    pub fn zero_like(&self) -> AlgNum {
        self.field.zero()
    }

    pub fn one_like(&self) -> AlgNum {
        self.field.one()
    }

    fn zip(&self, other: &AlgNum, f: impl Fn(&Q, &Q) -> Q) -> AlgNum {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixed ambient fields"
        );
        AlgNum {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &AlgNum) -> AlgNum {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &AlgNum) -> AlgNum {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> AlgNum {
        AlgNum { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &AlgNum) -> AlgNum {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixed ambient fields"
        );
        if self.field.degree() == 1 {
            return AlgNum { field: self.field.clone(), coords: vec![&self.coords[0] * &other.coords[0]] };
        }
        let prod = poly::mul(&self.coords, &other.coords);
        AlgNum { field: self.field.clone(), coords: self.field.reduce(prod) }
    }

    pub fn scale(&self, q: &Q) -> AlgNum {
        AlgNum { field: self.field.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, mut e: u32) -> AlgNum {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<AlgNum, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(AlgNum { field: self.field.clone(), coords: vec![self.coords[0].recip()] });
        }
        let (g, s) = poly::half_ext_gcd(&self.coords, &self.field.min_poly);
        if poly::degree(&g) != Some(0) {
            let shown = AlgNum { field: self.field.clone(), coords: self.field.reduce(g) };
            return Err(FieldError::ReduciblePolynomial(shown.to_string()));
        }
        Ok(AlgNum { field: self.field.clone(), coords: self.field.reduce(s) })
    }

    pub fn div(&self, other: &AlgNum) -> Result<AlgNum, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power, negative exponents through inversion.
    pub fn powi(&self, e: i64) -> Result<AlgNum, FieldError> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Evaluates a polynomial with rational coefficients (lowest degree first) at this element.
    pub fn eval_rational_poly(&self, c: &[Q]) -> AlgNum {
        let mut acc = self.zero_like();
        for q in c.iter().rev() {
            acc = acc.mul(self);
            acc.coords[0] += q;
        }
        acc
    }

    /// Image under the field map z ↦ r. Only meaningful when r is a root of p.
    pub fn substitute_gen(&self, r: &AlgNum) -> AlgNum {
        r.eval_rational_poly(&self.coords)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&AlgNum> for &AlgNum {
            type Output = AlgNum;
            fn $m(self, rhs: &AlgNum) -> AlgNum {
                AlgNum::$m(self, rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum::neg(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfOp {
    Add,
    Sub,
    Mul,
    /// Inverse of the first operand; the second is ignored.
    InvOfA,
}

pub fn nf_arith(a: &AlgNum, b: &AlgNum, op: NfOp) -> Result<AlgNum, FieldError> {
    if !(Arc::ptr_eq(&a.field, &b.field) || a.field == b.field) {
        return Err(FieldError::FieldMismatch);
    }
    Ok(match op {
        NfOp::Add => a.add(b),
        NfOp::Sub => a.sub(b),
        NfOp::Mul => a.mul(b),
        NfOp::InvOfA => a.inv()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> Arc<AmbientField> {
        AmbientField::from_ints("z", &[-2, 0, 1]).unwrap()
    }

    #[test]
    fn defining_relation() {
        let l = sqrt2();
        let z = l.gen();
        assert_eq!(nf_arith(&z, &z, NfOp::Mul).unwrap(), l.int(2));
    }

    #[test]
    fn inverse_of_generator() {
        let l = sqrt2();
        let inv = nf_arith(&l.gen(), &l.zero(), NfOp::InvOfA).unwrap();
        assert_eq!(inv, l.gen().scale(&Q::new(1.into(), 2.into())));
        assert_eq!(&inv * &l.gen(), l.one());
    }

    #[test]
    fn adding_zero() {
        let l = sqrt2();
        let a = l.element_from_ints(&[3, -5]);
        assert_eq!(nf_arith(&a, &l.zero(), NfOp::Add).unwrap(), a);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(sqrt2().zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn reducible_polynomial_surfaces_on_inversion() {
        // z² - 1 = (z - 1)(z + 1) is square-free but reducible
        let l = AmbientField::from_ints("z", &[-1, 0, 1]).unwrap();
        let a = l.element_from_ints(&[-1, 1]);
        assert!(matches!(a.inv(), Err(FieldError::ReduciblePolynomial(_))));
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert_eq!(AmbientField::from_ints("z", &[1, 0, 2]).unwrap_err(), FieldError::NotMonic);
        assert_eq!(
            AmbientField::from_ints("z", &[1, 2, 1]).unwrap_err(),
            FieldError::NotSquareFree
        );
    }

    #[test]
    fn display_is_readable() {
        let l = sqrt2();
        assert_eq!(l.element_from_ints(&[1, -3]).to_string(), "1 - 3*z");
        assert_eq!(l.zero().to_string(), "0");
    }

    #[test]
    fn conjugation_is_a_homomorphism() {
        let l = AmbientField::from_ints("z", &[1, 0, -10, 0, 1]).unwrap();
        let r = l.element_from_ints(&[0, 10, 0, -1]); // 1/z
        assert!(l.gen().eval_rational_poly(l.min_poly()).is_zero());
        assert!(r.eval_rational_poly(l.min_poly()).is_zero());
        let a = l.element_from_ints(&[1, 2, 0, 3]);
        let b = l.element_from_ints(&[0, -1, 4, 1]);
        assert_eq!((&a * &b).substitute_gen(&r), &a.substitute_gen(&r) * &b.substitute_gen(&r));
    }
}
