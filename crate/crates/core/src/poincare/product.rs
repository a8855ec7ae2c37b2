use super::{NumericalData, PoincareError};
use std::fmt;

/// ∏ (1 − t^a)^s over the factors, in insertion order with equal exponents merged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeriesProduct {
    pub factors: Vec<(u64, i64)>,
    /// Built from a finite prefix of an infinite splitting list.
    pub partial: bool,
}

impl SeriesProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiplies by (1 − t^a)^s.
    pub fn push(&mut self, a: u64, s: i64) {
        if s == 0 {
            return;
        }
        match self.factors.iter().position(|(b, _)| *b == a) {
            Some(i) => {
                self.factors[i].1 += s;
                if self.factors[i].1 == 0 {
                    self.factors.remove(i);
                }
            }
            None => self.factors.push((a, s)),
        }
    }

    pub fn times(mut self, other: &SeriesProduct) -> Self {
        for &(a, s) in &other.factors {
            self.push(a, s);
        }
        self.partial |= other.partial;
        self
    }

    /// Factors sorted by exponent, for comparisons.
    pub fn normalized(&self) -> Vec<(u64, i64)> {
        let mut f = self.factors.clone();
        f.sort();
        f
    }

    /// Order of the pole at t = 1.
    pub fn pole_order(&self) -> i64 {
        -self.factors.iter().map(|(_, s)| s).sum::<i64>()
    }
}

impl fmt::Display for SeriesProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |s: i64| -> Vec<String> {
            self.factors
                .iter()
                .filter(|(_, e)| e.signum() == s)
                .map(|&(a, e)| {
                    let b = if a == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{a})") };
                    if e.abs() == 1 { b } else { format!("{b}^{}", e.abs()) }
                })
                .collect()
        };
        let (num, den) = (part(1), part(-1));
        let num = if num.is_empty() { "1".to_string() } else { num.join("") };
        if den.is_empty() {
            write!(f, "{num}")
        } else if den.len() == 1 {
            write!(f, "{num} / {}", den[0])
        } else {
            write!(f, "{num} / ({})", den.join(""))
        }
    }
}

fn splitting_factors(nd: &NumericalData, upto: usize) -> SeriesProduct {
    let mut p = SeriesProduct::one();
    for d in &nd.splitting[..upto] {
        p.push(d.ell * d.m_rho, 1);
        p.push(d.m_rho, -1);
    }
    p
}

/// ∏_{i=1}^g (1 − t^{M_τi}) / ∏_{i=0}^g (1 − t^{M_σi}).
pub fn semigroup_series(nd: &NumericalData) -> SeriesProduct {
    let mut p = SeriesProduct::one();
    for &m in &nd.big_m_tau {
        p.push(m, 1);
    }
    for &m in &nd.big_m_sigma {
        p.push(m, -1);
    }
    p
}

pub fn classical_series(nd: &NumericalData) -> SeriesProduct {
    let mut p = semigroup_series(nd).times(&splitting_factors(nd, nd.s()));
    p.partial = nd.partial;
    p
}

pub fn divisorial_series(nd: &NumericalData) -> Result<SeriesProduct, PoincareError> {
    let md = nd.big_m_delta.ok_or(PoincareError::MissingDelta)?;
    let mut p = classical_series(nd);
    p.push(md, -1);
    Ok(p)
}

/// P_{j-1}: the semigroup series times the first j − 1 splitting factors, 1 ≤ j ≤ s + 1.
pub fn partial_series(nd: &NumericalData, j: usize) -> Result<SeriesProduct, PoincareError> {
    let max = nd.s() + 1;
    if j == 0 || j > max {
        return Err(PoincareError::IndexOutOfRange { index: j, max });
    }
    let mut p = semigroup_series(nd).times(&splitting_factors(nd, j - 1));
    p.partial = nd.partial;
    Ok(p)
}

/// Coefficients a_0..a_N of a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub coeffs: Vec<i64>,
}

impl SeriesExpansion {
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, v: usize) -> Option<i64> {
        self.coeffs.get(v).copied()
    }
}

pub fn expand(p: &SeriesProduct, n: usize) -> SeriesExpansion {
    let mut c = vec![0i64; n + 1];
    c[0] = 1;
    for &(a, s) in &p.factors {
        let a = a as usize;
        if a == 0 || a > n {
            continue;
        }
        for _ in 0..s.unsigned_abs() {
            if s > 0 {
                for k in (a..=n).rev() {
                    c[k] -= c[k - a];
                }
            } else {
                for k in a..=n {
                    c[k] += c[k - a];
                }
            }
        }
    }
    SeriesExpansion { coeffs: c }
}

/// Unique exponents s_m with Σ a_v t^v ≡ ∏_{m ≤ N} (1 − t^m)^{s_m} mod t^{N+1}.
pub fn peel_binomials(coeffs: &[i64]) -> Vec<(u64, i64)> {
    let n = coeffs.len().saturating_sub(1);
    let mut c = coeffs.to_vec();
    let mut out = Vec::new();
    for m in 1..=n {
        let s = -c[m];
        if s == 0 {
            continue;
        }
        out.push((m as u64, s));
        // multiply by (1 − t^m)^{−s}
        let mut unit = SeriesProduct::one();
        unit.push(m as u64, -s);
        let f = expand(&unit, n);
        c = mul_trunc(&c, &f.coeffs);
    }
    out
}

fn mul_trunc(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len();
    let mut out = vec![0i64; n];
    for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, i64)>,
    pub is_cyclotomic: bool,
}

/// Recovers the binomial factors of an expansion. Closure of the product can only be confirmed
/// against a complete source product whose exponents all fit in the expansion.
pub fn binomial_factorization(
    exp: &SeriesExpansion,
    source: Option<&SeriesProduct>,
) -> Result<Factorization, PoincareError> {
    let factors = peel_binomials(&exp.coeffs);
    match source {
        Some(src) if !src.partial => {
            let n = exp.truncation() as u64;
            if src.factors.iter().any(|(a, _)| *a > n) {
                return Err(PoincareError::TruncationInconclusive { partial: factors });
            }
            if src.normalized() != factors {
                return Err(PoincareError::FactorizationMismatch);
            }
            Ok(Factorization { factors, is_cyclotomic: true })
        }
        _ => Err(PoincareError::TruncationInconclusive { partial: factors }),
    }
}
