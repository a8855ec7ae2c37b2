//! Coefficient fields for power series: the ambient field L itself, and the rational
//! function field L(T) in one indeterminate, used for generic coefficients and generic curvettes.

use crate::exactfield::{AlgNum, AmbientField, FieldError};
use std::fmt;
use std::sync::Arc;

pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;
    /// Image of an ambient constant in the same coefficient field as `self`.
    fn embed(&self, a: &AlgNum) -> Self;
    /// The value as an ambient constant, if it does not involve an indeterminate.
    fn as_constant(&self) -> Option<AlgNum>;
}

impl Scalar for AlgNum {
    fn zero_like(&self) -> Self {
        AlgNum::zero_like(self)
    }
    fn one_like(&self) -> Self {
        AlgNum::one_like(self)
    }
    fn is_zero(&self) -> bool {
        AlgNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        AlgNum::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        AlgNum::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        AlgNum::mul(self, o)
    }
    fn neg(&self) -> Self {
        AlgNum::neg(self)
    }
    fn inv(&self) -> Result<Self, FieldError> {
        AlgNum::inv(self)
    }
    fn embed(&self, a: &AlgNum) -> Self {
        a.clone()
    }
    fn as_constant(&self) -> Option<AlgNum> {
        Some(self.clone())
    }
}

/// Polynomials over L in T, lowest degree first, no trailing zeros.
type LPoly = Vec<AlgNum>;

fn ltrim(p: &mut LPoly) {
    while p.last().is_some_and(AlgNum::is_zero) {
        p.pop();
    }
}

fn lmul(a: &[AlgNum], b: &[AlgNum]) -> LPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    ltrim(&mut out);
    out
}

fn lcombine(a: &[AlgNum], b: &[AlgNum], sub: bool, field: &Arc<AmbientField>) -> LPoly {
    let n = a.len().max(b.len());
    let mut out: LPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            match b.get(i) {
                Some(y) if sub => x.sub(y),
                Some(y) => x.add(y),
                None => x,
            }
        })
        .collect();
    ltrim(&mut out);
    out
}

fn ldivrem(a: &[AlgNum], b: &[AlgNum]) -> Result<(LPoly, LPoly), FieldError> {
    let db = b.len().checked_sub(1).ok_or(FieldError::DivisionByZero)?;
    let lead_inv = b[db].inv()?;
    let mut r = a.to_vec();
    ltrim(&mut r);
    let zero = b[0].zero_like();
    let mut q = vec![zero; r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr].mul(&lead_inv);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                r[shift + i] = r[shift + i].sub(&f.mul(c));
            }
        }
        q[shift] = f;
        ltrim(&mut r);
    }
    ltrim(&mut q);
    Ok((q, r))
}

fn lmonic(p: LPoly) -> Result<LPoly, FieldError> {
    match p.last() {
        None => Ok(p),
        Some(l) => {
            let inv = l.inv()?;
            Ok(p.iter().map(|c| c.mul(&inv)).collect())
        }
    }
}

fn lgcd(a: &[AlgNum], b: &[AlgNum]) -> Result<LPoly, FieldError> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    ltrim(&mut x);
    ltrim(&mut y);
    while !y.is_empty() {
        let (_, r) = ldivrem(&x, &y)?;
        x = std::mem::replace(&mut y, r);
    }
    lmonic(x)
}

/// An element of L(T): num/den with den monic and gcd(num, den) = 1.
#[derive(Clone)]
pub struct RatFun {
    field: Arc<AmbientField>,
    num: LPoly,
    den: LPoly,
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

fn fmt_lpoly(p: &[AlgNum], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match (i, c.is_one()) {
            (0, _) => write!(f, "({c})")?,
            (1, true) => write!(f, "T")?,
            (1, false) => write!(f, "({c})*T")?,
            (_, true) => write!(f, "T^{i}")?,
            (_, false) => write!(f, "({c})*T^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.len() == 1 {
            return fmt_lpoly(&self.num, f);
        }
        write!(f, "[")?;
        fmt_lpoly(&self.num, f)?;
        write!(f, "]/[")?;
        fmt_lpoly(&self.den, f)?;
        write!(f, "]")
    }
}

impl RatFun {
    pub fn constant(a: &AlgNum) -> Self {
        let mut num = vec![a.clone()];
        ltrim(&mut num);
        RatFun { field: a.field().clone(), num, den: vec![a.one_like()] }
    }

    /// The indeterminate T.
    pub fn indeterminate(field: &Arc<AmbientField>) -> Self {
        RatFun { field: field.clone(), num: vec![field.zero(), field.one()], den: vec![field.one()] }
    }

    pub fn field(&self) -> &Arc<AmbientField> {
        &self.field
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    /// Numerator coefficients; for a polynomial these are its coefficients in T.
    pub fn numerator(&self) -> &[AlgNum] {
        &self.num
    }

    pub fn denominator(&self) -> &[AlgNum] {
        &self.den
    }

    pub fn degree_in_t(&self) -> usize {
        self.num.len().saturating_sub(1).max(self.den.len() - 1)
    }

    fn from_parts(field: &Arc<AmbientField>, num: LPoly, den: LPoly) -> Result<Self, FieldError> {
        let mut num = num;
        ltrim(&mut num);
        if num.is_empty() {
            return Ok(RatFun { field: field.clone(), num, den: vec![field.one()] });
        }
        let (num, den) = if den.len() == 1 {
            let inv = den[0].inv()?;
            (num.iter().map(|c| c.mul(&inv)).collect(), vec![field.one()])
        } else {
            let g = lgcd(&num, &den)?;
            let (n, _) = ldivrem(&num, &g)?;
            let (d, _) = ldivrem(&den, &g)?;
            let inv = d.last().expect("nonzero denominator").inv()?;
            (n.iter().map(|c| c.mul(&inv)).collect(), d.iter().map(|c| c.mul(&inv)).collect())
        };
        Ok(RatFun { field: field.clone(), num, den })
    }

    fn combine(&self, o: &Self, sub: bool) -> Self {
        let f = &self.field;
        if self.den.len() == 1 && o.den.len() == 1 {
            return RatFun { field: f.clone(), num: lcombine(&self.num, &o.num, sub, f), den: vec![f.one()] };
        }
        let num = lcombine(&lmul(&self.num, &o.den), &lmul(&o.num, &self.den), sub, f);
        Self::from_parts(f, num, lmul(&self.den, &o.den)).expect("monic denominators are invertible")
    }

    /// Value at T = t, or DivisionByZero when t is a pole.
    pub fn eval(&self, t: &AlgNum) -> Result<AlgNum, FieldError> {
        let ev = |p: &[AlgNum]| p.iter().rev().fold(t.zero_like(), |acc, c| acc.mul(t).add(c));
        ev(&self.num).div(&ev(&self.den))
    }
}

impl Scalar for RatFun {
    fn zero_like(&self) -> Self {
        RatFun { field: self.field.clone(), num: Vec::new(), den: vec![self.field.one()] }
    }
    fn one_like(&self) -> Self {
        RatFun::constant(&self.field.one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }
    fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }
    fn mul(&self, o: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if self.den.len() == 1 && o.den.len() == 1 {
            return RatFun { field: f.clone(), num: lmul(&self.num, &o.num), den: vec![f.one()] };
        }
        Self::from_parts(f, lmul(&self.num, &o.num), lmul(&self.den, &o.den))
            .expect("monic denominators are invertible")
    }
    fn neg(&self) -> Self {
        RatFun { field: self.field.clone(), num: self.num.iter().map(AlgNum::neg).collect(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Self::from_parts(&self.field, self.den.clone(), self.num.clone())
    }
    fn embed(&self, a: &AlgNum) -> Self {
        RatFun::constant(a)
    }
    fn as_constant(&self) -> Option<AlgNum> {
        match (self.num.len(), self.den.len()) {
            (0, _) => Some(self.field.zero()),
            (1, 1) => Some(self.num[0].clone()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_operations_in_t() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let t = RatFun::indeterminate(&l);
        let one = t.one_like();
        // (T² - 1)/(T - 1) = T + 1
        let a = t.mul(&t).sub(&one);
        let b = t.sub(&one);
        let q = a.mul(&b.inv().unwrap());
        assert_eq!(q, t.add(&one));
        assert!(q.is_polynomial());
        // T · T⁻¹ = 1
        assert_eq!(t.mul(&t.inv().unwrap()), one);
        assert!(t.as_constant().is_none());
        assert_eq!(RatFun::constant(&l.gen()).as_constant(), Some(l.gen()));
    }

    #[test]
    fn evaluation() {
        let l = AmbientField::rationals();
        let t = RatFun::indeterminate(&l);
        let f = t.mul(&t).add(&t.one_like()).mul(&t.sub(&t.one_like()).inv().unwrap());
        assert_eq!(f.eval(&l.int(3)).unwrap(), l.int(5));
        assert!(f.eval(&l.int(1)).is_err());
    }
}
