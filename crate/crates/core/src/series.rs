//! Power series in τ with either exact (polynomial) or truncated coefficient data.
//!
//! A truncated series knows its coefficients below an absolute bound `prec`; everything
//! at or above it is unknown. Arithmetic propagates the bound, so orders are either
//! certified or reported as `TruncationTooShort`.

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series known only below τ^{bound}; more terms are needed")]
    TruncationTooShort { bound: usize },
    #[error("division by a series of larger order")]
    NotDivisible,
}

/// A valuation: a finite order or INFINITY.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(usize),
    Infinity,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(v) => Some(v),
            Order::Infinity => None,
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a.cmp(b),
            (Order::Finite(_), Order::Infinity) => Ordering::Less,
            (Order::Infinity, Order::Finite(_)) => Ordering::Greater,
            (Order::Infinity, Order::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(v) => write!(f, "{v}"),
            Order::Infinity => write!(f, "INFINITY"),
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct TauSeries<S> {
    /// Trailing zeros trimmed; entries past the end are zero (below `prec` when truncated).
    coeffs: Vec<S>,
    prec: Option<usize>,
    zero: S,
}

impl<S: fmt::Debug> fmt::Debug for TauSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TauSeries").field("coeffs", &self.coeffs).field("prec", &self.prec).finish()
    }
}

impl<S: Scalar> fmt::Display for TauSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*τ")?,
                _ => write!(f, "({c})*τ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(p) = self.prec {
            write!(f, " + O(τ^{p})")?;
        }
        Ok(())
    }
}

fn trimmed<S: Scalar>(mut v: Vec<S>) -> Vec<S> {
    while v.last().is_some_and(Scalar::is_zero) {
        v.pop();
    }
    v
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<S: Scalar> TauSeries<S> {
    pub fn exact(coeffs: Vec<S>, zero: S) -> Self {
        TauSeries { coeffs: trimmed(coeffs), prec: None, zero }
    }

    pub fn truncated(mut coeffs: Vec<S>, prec: usize, zero: S) -> Self {
        coeffs.truncate(prec);
        TauSeries { coeffs: trimmed(coeffs), prec: Some(prec), zero }
    }

    pub fn from_terms(terms: &[(usize, S)], zero: S) -> Self {
        let len = terms.iter().map(|(e, _)| e + 1).max().unwrap_or(0);
        let mut c = vec![zero.clone(); len];
        for (e, v) in terms {
            c[*e] = c[*e].add(v);
        }
        Self::exact(c, zero)
    }

    pub fn monomial(c: S, k: usize) -> Self {
        let zero = c.zero_like();
        let mut v = vec![zero.clone(); k];
        v.push(c);
        Self::exact(v, zero)
    }

    pub fn zero_series(zero: S) -> Self {
        TauSeries { coeffs: Vec::new(), prec: None, zero }
    }

    pub fn zero_scalar(&self) -> &S {
        &self.zero
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Absolute precision bound, None when exact.
    pub fn precision(&self) -> Option<usize> {
        self.prec
    }

    /// Known coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Degree of an exact series (None for zero); for truncated ones, the last stored index.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Result<S, SeriesError> {
        if let Some(p) = self.prec {
            if i >= p {
                return Err(SeriesError::TruncationTooShort { bound: p });
            }
        }
        Ok(self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone()))
    }

    fn at(&self, i: usize) -> &S {
        self.coeffs.get(i).unwrap_or(&self.zero)
    }

    pub fn order(&self) -> Result<Order, SeriesError> {
        match (self.coeffs.iter().position(|c| !c.is_zero()), self.prec) {
            (Some(i), _) => Ok(Order::Finite(i)),
            (None, None) => Ok(Order::Infinity),
            (None, Some(p)) => Err(SeriesError::TruncationTooShort { bound: p }),
        }
    }

    /// Order and leading coefficient, or None for the exact zero series.
    pub fn leading(&self) -> Result<Option<(usize, S)>, SeriesError> {
        Ok(match self.order()? {
            Order::Finite(i) => Some((i, self.coeffs[i].clone())),
            Order::Infinity => None,
        })
    }

    /// Number of coefficients certainly zero at the start.
    fn leading_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or_else(|| self.prec.unwrap_or(0))
    }

    fn combine(&self, o: &Self, sub: bool) -> Self {
        let prec = min_opt(self.prec, o.prec);
        let mut n = self.coeffs.len().max(o.coeffs.len());
        if let Some(p) = prec {
            n = n.min(p);
        }
        let c = (0..n)
            .map(|i| if sub { self.at(i).sub(o.at(i)) } else { self.at(i).add(o.at(i)) })
            .collect();
        TauSeries { coeffs: trimmed(c), prec, zero: self.zero.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn neg(&self) -> Self {
        TauSeries { coeffs: self.coeffs.iter().map(Scalar::neg).collect(), prec: self.prec, zero: self.zero.clone() }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return TauSeries { coeffs: Vec::new(), prec: self.prec, zero: self.zero.clone() };
        }
        TauSeries { coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(), prec: self.prec, zero: self.zero.clone() }
    }

    /// Adds a constant to the τ⁰ coefficient.
    pub fn add_constant(&self, c: &S) -> Self {
        self.add(&TauSeries::exact(vec![c.clone()], self.zero.clone()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let exact_zero = |s: &Self| s.prec.is_none() && s.coeffs.is_empty();
        if exact_zero(self) || exact_zero(o) {
            return TauSeries::zero_series(self.zero.clone());
        }
        let prec = match (self.prec, o.prec) {
            (None, None) => None,
            (Some(pa), None) => Some(pa + o.leading_zeros()),
            (None, Some(pb)) => Some(pb + self.leading_zeros()),
            (Some(pa), Some(pb)) => Some((pa + o.leading_zeros()).min(pb + self.leading_zeros())),
        };
        let mut n = self.coeffs.len() + o.coeffs.len();
        if let Some(p) = prec {
            n = n.min(p);
        }
        TauSeries { coeffs: trimmed(product_prefix(&self.coeffs, &o.coeffs, n, &self.zero)), prec, zero: self.zero.clone() }
    }

    /// Product known modulo τ^n (or better, if the factors allow less).
    pub fn mul_trunc(&self, o: &Self, n: usize) -> Self {
        let p = self.mul_bound(o).map_or(n, |p| p.min(n));
        let c = product_prefix(&self.coeffs, &o.coeffs, p, &self.zero);
        TauSeries::truncated(c, p, self.zero.clone())
    }

    fn mul_bound(&self, o: &Self) -> Option<usize> {
        match (self.prec, o.prec) {
            (None, None) => None,
            (Some(pa), None) => Some(pa + o.leading_zeros()),
            (None, Some(pb)) => Some(pb + self.leading_zeros()),
            (Some(pa), Some(pb)) => Some((pa + o.leading_zeros()).min(pb + self.leading_zeros())),
        }
    }

    /// Forgets every coefficient at or above τ^n.
    pub fn truncate(&self, n: usize) -> Self {
        let p = self.prec.map_or(n, |p| p.min(n));
        TauSeries::truncated(self.coeffs.clone(), p, self.zero.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TauSeries::exact(vec![self.zero.one_like()], self.zero.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient self / o, which must have order at least ord(o).
    ///
    /// When both operands are exact and the divisor is not a monomial the quotient is an
    /// infinite series; it is then returned truncated with `work` terms of relative precision.
    pub fn div(&self, o: &Self, work: usize) -> Result<Self, SeriesError> {
        let beta = match o.order()? {
            Order::Finite(b) => b,
            Order::Infinity => return Err(SeriesError::NotDivisible),
        };
        let alpha = match self.order() {
            Ok(Order::Finite(a)) => a,
            Ok(Order::Infinity) => return Ok(TauSeries::zero_series(self.zero.clone())),
            Err(SeriesError::TruncationTooShort { bound }) => {
                // self = O(τ^bound), so the quotient is O(τ^(bound - β))
                return Ok(TauSeries::truncated(Vec::new(), bound.saturating_sub(beta), self.zero.clone()));
            }
            Err(e) => return Err(e),
        };
        if alpha < beta {
            return Err(SeriesError::NotDivisible);
        }
        let rel_a = self.prec.map(|p| p - alpha);
        let rel_b = o.prec.map(|p| p - beta);
        let monomial_divisor = o.prec.is_none() && o.coeffs.len() == beta + 1;
        let b0_inv = o.coeffs[beta].inv().expect("leading coefficient is nonzero");
        if monomial_divisor && self.prec.is_none() {
            let c = (0..alpha - beta)
                .map(|_| self.zero.clone())
                .chain(self.coeffs[alpha..].iter().map(|c| c.mul(&b0_inv)))
                .collect();
            return Ok(TauSeries::exact(c, self.zero.clone()));
        }
        let rel = match (rel_a, rel_b) {
            (None, None) => work,
            (a, b) => min_opt(a, b).expect("one side is truncated"),
        };
        let mut q: Vec<S> = Vec::with_capacity(rel);
        for k in 0..rel {
            let mut acc = self.at(alpha + k).clone();
            for j in 1..=k {
                let b = o.at(beta + j);
                if !b.is_zero() && !q[k - j].is_zero() {
                    acc = acc.sub(&b.mul(&q[k - j]));
                }
            }
            q.push(acc.mul(&b0_inv));
        }
        let shift = alpha - beta;
        let mut c = vec![self.zero.clone(); shift];
        c.extend(q);
        Ok(TauSeries::truncated(c, shift + rel, self.zero.clone()))
    }

    pub fn map<T: Scalar>(&self, zero: T, f: impl Fn(&S) -> T) -> TauSeries<T> {
        TauSeries { coeffs: trimmed(self.coeffs.iter().map(f).collect()), prec: self.prec, zero }
    }

    pub fn is_monomial(&self) -> bool {
        self.prec.is_none() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }
}

fn product_prefix<S: Scalar>(a: &[S], b: &[S], n: usize, zero: &S) -> Vec<S> {
    let mut out = vec![zero.clone(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// Order of a series, certified or reported as too short.
pub fn series_order<S: Scalar>(s: &TauSeries<S>) -> Result<Order, SeriesError> {
    s.order()
}
