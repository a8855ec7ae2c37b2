//! Brute-force ground truth: valuations by substitution and the dimensions of J(v)/J(v+1) by
//! exact rank computations over ℚ.
//!
//! Only monomials x^i y^j with i·ν(x) + j·ν(y) ≤ V are needed: every other monomial already lies
//! in J(V+1), so the classes below V+1 are spanned by these.
//!
//! For parametrizations with an indeterminate T the coefficient of τ^k in f(x, y) is a
//! polynomial in T whose degree is bounded from the parametrization. It vanishes identically
//! iff it vanishes at (bound + 1) distinct rational points, so the ℚ-linear conditions
//! "all T-coefficients are zero" are replaced by evaluations at those points. The two sets
//! of functionals span the same space, hence the ranks agree.

use crate::exactfield::{AlgNum, AmbientField};
use crate::linalg::Q;
use crate::resolution::{BranchParam, PlaneParam, ResolutionError};
use crate::scalar::{RatFun, Scalar};
use crate::series::{Order, TauSeries};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("parametrization has a coefficient that is not a polynomial in the indeterminate")]
    NotPolynomial,
    #[error("parametrization does not pass through the origin")]
    NotAtOrigin,
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// A polynomial in x, y with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyXY {
    terms: BTreeMap<(usize, usize), Q>,
}

impl PolyXY {
    pub fn new(terms: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut p = PolyXY::default();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn from_ints(terms: &[(usize, usize, i64)]) -> Self {
        Self::new(terms.iter().map(|&(i, j, c)| (i, j, Q::from_integer(c.into()))))
    }

    pub fn monomial(i: usize, j: usize) -> Self {
        Self::new([(i, j, Q::one())])
    }

    fn add_term(&mut self, i: usize, j: usize, c: Q) {
        let e = self.terms.entry((i, j)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (i, j, c) in o.terms() {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = PolyXY::default();
        for (i, j, a) in self.terms() {
            for (k, l, b) in o.terms() {
                p.add_term(i + k, j + l, a * b);
            }
        }
        p
    }

    /// f(x(τ), y(τ)) as an exact polynomial in τ.
    pub fn substitute<S: Scalar>(&self, p: &PlaneParam<S>) -> TauSeries<S> {
        let zero = p.x.zero_scalar().clone();
        let mut out = TauSeries::zero_series(zero.clone());
        let mut xp: Vec<TauSeries<S>> = vec![TauSeries::exact(vec![zero.one_like()], zero.clone())];
        let mut yp = xp.clone();
        for (i, j, c) in self.terms() {
            while xp.len() <= i {
                let next = xp.last().unwrap().mul(&p.x);
                xp.push(next);
            }
            while yp.len() <= j {
                let next = yp.last().unwrap().mul(&p.y);
                yp.push(next);
            }
            let c = rational_like(&zero, c);
            out = out.add(&xp[i].mul(&yp[j]).scale(&c));
        }
        out
    }
}

fn rational_like<S: Scalar>(like: &S, q: &Q) -> S {
    let one = like.one_like().as_constant().expect("constants embed");
    like.embed(&one.field().rational(q.clone()))
}

/// Order of f along the parametrization and the leading coefficient, if finite.
pub fn value_on<S: Scalar>(f: &PolyXY, p: &PlaneParam<S>) -> (Order, Option<S>) {
    let s = f.substitute(p);
    match s.coeffs().iter().position(|c| !c.is_zero()) {
        Some(k) => (Order::Finite(k), Some(s.coeffs()[k].clone())),
        None => (Order::Infinity, None),
    }
}

/// ν_C(f) and a(f) for a branch with coefficients in L. Substitution is exact, so INFINITY
/// means f vanishes on the branch.
pub fn value_of(f: &PolyXY, branch: &BranchParam) -> Result<(Order, Option<AlgNum>), OracleError> {
    Ok(value_on(f, &branch.plane_param()?))
}

/// ν_δ(f) through a curvette at a generic point of δ.
pub fn divisorial_value(f: &PolyXY, generic_curvette: &PlaneParam<RatFun>) -> Order {
    value_on(f, generic_curvette).0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationMode {
    Curve,
    Divisorial,
    /// A branch with a generic coefficient.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub v_max: usize,
    /// Largest total degree of a monomial that entered the computation.
    pub d_used: usize,
    pub dims: Vec<u64>,
    pub mode: FiltrationMode,
    pub witness_basis: Option<Vec<Vec<PolyXY>>>,
}

impl FiltrationReport {
    pub fn semigroup(&self) -> Vec<u64> {
        (0..).zip(&self.dims).filter(|(_, a)| **a > 0).map(|(v, _)| v).collect()
    }
}

/// Sparse row-echelon form over ℤ; every row is primitive and keyed by its first column.
#[derive(Default)]
struct SparseEchelon {
    rows: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

fn primitive(v: &mut [(usize, BigInt)]) {
    let g = v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// a·u − b·w on sorted sparse vectors.
fn combine(a: &BigInt, u: &[(usize, BigInt)], b: &BigInt, w: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        let (col, val) = match (u.get(i), w.get(j)) {
            (Some((cu, xu)), Some((cw, xw))) if cu == cw => {
                i += 1;
                j += 1;
                (*cu, a * xu - b * xw)
            }
            (Some((cu, xu)), Some((cw, _))) if cu < cw => {
                i += 1;
                (*cu, a * xu)
            }
            (Some((cu, xu)), None) => {
                i += 1;
                (*cu, a * xu)
            }
            (_, Some((cw, xw))) => {
                j += 1;
                (*cw, -(b * xw))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

impl SparseEchelon {
    /// Adds v to the span; returns the new pivot column if the rank grew.
    fn insert(&mut self, mut v: Vec<(usize, BigInt)>) -> Option<usize> {
        loop {
            let (col, lead) = v.first()?.clone();
            match self.rows.get(&col) {
                None => {
                    primitive(&mut v);
                    if v[0].1.is_negative() {
                        for (_, x) in v.iter_mut() {
                            *x = -&*x;
                        }
                    }
                    self.rows.insert(col, v);
                    return Some(col);
                }
                Some(row) => {
                    let g = lead.gcd(&row[0].1);
                    let a = &row[0].1 / &g;
                    let b = &lead / &g;
                    v = combine(&a, &v, &b, row);
                    primitive(&mut v);
                }
            }
        }
    }
}

/// Integer row vector proportional to the rational entries.
fn integral(entries: Vec<(usize, Q)>) -> Vec<(usize, BigInt)> {
    let l = entries.iter().fold(BigInt::one(), |l, (_, q)| l.lcm(q.denom()));
    entries
        .into_iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (c, (q * &l).to_integer()))
        .collect()
}

/// Coefficients τ^0..τ^V of a truncated product.
fn mul_upto(a: &[AlgNum], b: &[AlgNum], v: usize) -> Vec<AlgNum> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; v + 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(v + 1 - i).filter(|(_, y)| !y.is_zero()) {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn padded(s: &TauSeries<AlgNum>, v: usize, field: &Arc<AmbientField>) -> Vec<AlgNum> {
    (0..=v).map(|k| s.coeffs().get(k).cloned().unwrap_or_else(|| field.zero())).collect()
}

fn order_of(c: &[AlgNum]) -> Order {
    c.iter().position(|a| !a.is_zero()).map_or(Order::Infinity, Order::Finite)
}

/// Monomials (i, j) of value ≤ V, sorted by value.
fn monomials(ox: Order, oy: Order, v: usize) -> Vec<(usize, usize, usize)> {
    let (Order::Finite(ox), oy) = (ox, oy) else {
        // x ≡ 0 cannot come from a parametrization through the origin
        return vec![(0, 0, 0)];
    };
    let mut out = Vec::new();
    for i in 0..=v / ox {
        match oy {
            Order::Finite(oy) => {
                for j in 0..=(v - i * ox) / oy {
                    out.push((i * ox + j * oy, i, j));
                }
            }
            Order::Infinity => out.push((i * ox, i, 0)),
        }
    }
    out.sort();
    out
}

/// Truncated series of every monomial of value ≤ V, for one numeric parametrization.
struct MonomialTable {
    list: Vec<(usize, usize, usize)>,
    series: Vec<Vec<AlgNum>>,
}

fn monomial_table(x: &[AlgNum], y: &[AlgNum], list: &[(usize, usize, usize)], v: usize) -> MonomialTable {
    let imax = list.iter().map(|m| m.1).max().unwrap_or(0);
    let jmax = list.iter().map(|m| m.2).max().unwrap_or(0);
    let one = {
        let mut e = vec![x[0].zero_like(); v + 1];
        e[0] = x[0].one_like();
        e
    };
    let powers = |s: &[AlgNum], n: usize| {
        let mut p = vec![one.clone()];
        for _ in 0..n {
            let next = mul_upto(p.last().unwrap(), s, v);
            p.push(next);
        }
        p
    };
    let (xp, yp) = (powers(x, imax), powers(y, jmax));
    let single = |s: &[AlgNum]| {
        let nz: Vec<usize> = (0..s.len()).filter(|&k| !s[k].is_zero()).collect();
        (nz.len() == 1).then(|| nz[0])
    };
    let series = list
        .iter()
        .map(|&(_, i, j)| {
            // a monomial coordinate makes the product a shift
            if let Some(m) = single(x) {
                let c = x[m].pow(i as u32);
                let mut out = vec![x[0].zero_like(); v + 1];
                for k in 0..=v.saturating_sub(m * i) {
                    if m * i + k <= v && !yp[j][k].is_zero() {
                        out[m * i + k] = yp[j][k].mul(&c);
                    }
                }
                out
            } else if let Some(m) = single(y) {
                let c = y[m].pow(j as u32);
                let mut out = vec![x[0].zero_like(); v + 1];
                for k in 0..=v.saturating_sub(m * j) {
                    if m * j + k <= v && !xp[i][k].is_zero() {
                        out[m * j + k] = xp[i][k].mul(&c);
                    }
                }
                out
            } else {
                mul_upto(&xp[i], &yp[j], v)
            }
        })
        .collect();
    MonomialTable { list: list.to_vec(), series }
}

fn dims_from_pivots(pivots: &[usize], block_of: impl Fn(usize) -> usize, v: usize) -> Vec<u64> {
    let mut dims = vec![0u64; v + 1];
    for &p in pivots {
        dims[block_of(p)] += 1;
    }
    dims
}

/// dim_ℚ J(v)/J(v+1) for v ≤ V, J(v) = {f ∈ ℚ[x, y] : ord f(x(τ), y(τ)) ≥ v}.
pub fn filtration_dims_param(p: &PlaneParam<AlgNum>, v: usize) -> Result<FiltrationReport, OracleError> {
    let field = p.x.zero_scalar().field().clone();
    let n = field.degree();
    let (x, y) = (padded(&p.x, v, &field), padded(&p.y, v, &field));
    if !x[0].is_zero() || !y[0].is_zero() {
        return Err(OracleError::NotAtOrigin);
    }
    let list = monomials(order_of(&x), order_of(&y), v);
    let table = monomial_table(&x, &y, &list, v);
    let mut ech = SparseEchelon::default();
    let mut pivots = Vec::new();
    for (&(w, _, _), s) in table.list.iter().zip(&table.series) {
        let entries = (w..=v)
            .flat_map(|k| s[k].coords().iter().enumerate().map(move |(r, q)| (k * n + r, q.clone())))
            .collect();
        pivots.extend(ech.insert(integral(entries)));
    }
    Ok(FiltrationReport {
        v_max: v,
        d_used: table.list.iter().map(|m| m.1 + m.2).max().unwrap_or(0),
        dims: dims_from_pivots(&pivots, |c| c / n, v),
        mode: FiltrationMode::Curve,
        witness_basis: None,
    })
}

pub fn filtration_dims(branch: &BranchParam, v: usize) -> Result<FiltrationReport, OracleError> {
    filtration_dims_param(&branch.plane_param()?, v)
}

/// {v ≤ V : a_v > 0}.
pub fn observed_semigroup(branch: &BranchParam, v: usize) -> Result<Vec<u64>, OracleError> {
    Ok(filtration_dims(branch, v)?.semigroup())
}

/// Largest (deg_T of the τ^k coefficient) − k over a series.
fn slope(s: &TauSeries<RatFun>) -> Result<Option<i64>, OracleError> {
    let mut best = None;
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_polynomial() {
            return Err(OracleError::NotPolynomial);
        }
        let d = c.degree_in_t() as i64 - k as i64;
        best = Some(best.map_or(d, |b: i64| b.max(d)));
    }
    Ok(best)
}

/// Filtration of a parametrization over L[T], the conditions being identities in T.
pub fn generic_filtration_dims(
    p: &PlaneParam<RatFun>,
    v: usize,
    mode: FiltrationMode,
) -> Result<FiltrationReport, OracleError> {
    let field = p.x.zero_scalar().field().clone();
    let n = field.degree();
    let (sx, sy) = (slope(&p.x)?, slope(&p.y)?);
    let ord = |s: &TauSeries<RatFun>| s.coeffs().iter().position(|c| !c.is_zero()).map_or(Order::Infinity, Order::Finite);
    if matches!(ord(&p.x), Order::Finite(0)) || matches!(ord(&p.y), Order::Finite(0)) {
        return Err(OracleError::NotAtOrigin);
    }
    let list = monomials(ord(&p.x), ord(&p.y), v);
    // deg_T of the τ^k coefficient of x^i y^j is at most k + i·sx + j·sy
    let extra = list
        .iter()
        .map(|&(_, i, j)| i as i64 * sx.unwrap_or(0) + j as i64 * sy.unwrap_or(0))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let npts = v + extra + 1;
    let tables: Vec<MonomialTable> = (0..npts)
        .map(|t| {
            let at = field.int(t as i64);
            let ev = |s: &TauSeries<RatFun>| -> Vec<AlgNum> {
                (0..=v)
                    .map(|k| s.coeffs().get(k).map_or_else(|| field.zero(), |c| c.eval(&at).expect("polynomial")))
                    .collect()
            };
            monomial_table(&ev(&p.x), &ev(&p.y), &list, v)
        })
        .collect();
    // block k uses the first k + extra + 1 points
    let block_start = |k: usize| n * (k * k.saturating_sub(1) / 2 + k * (extra + 1));
    let block_of = |c: usize| (0..=v).rev().find(|&k| block_start(k) <= c).unwrap();
    let mut ech = SparseEchelon::default();
    let mut pivots = Vec::new();
    for (idx, &(w, _, _)) in list.iter().enumerate() {
        let mut entries = Vec::new();
        for k in w..=v {
            for (t, table) in tables.iter().enumerate().take(k + extra + 1) {
                for (r, q) in table.series[idx][k].coords().iter().enumerate() {
                    entries.push((block_start(k) + t * n + r, q.clone()));
                }
            }
        }
        pivots.extend(ech.insert(integral(entries)));
    }
    Ok(FiltrationReport {
        v_max: v,
        d_used: list.iter().map(|m| m.1 + m.2).max().unwrap_or(0),
        dims: dims_from_pivots(&pivots, block_of, v),
        mode,
        witness_basis: None,
    })
}

/// Filtration of ν_δ, through a curvette at a generic point of δ.
pub fn divisorial_filtration_dims(generic_curvette: &PlaneParam<RatFun>, v: usize) -> Result<FiltrationReport, OracleError> {
    generic_filtration_dims(generic_curvette, v, FiltrationMode::Divisorial)
}

/// Filtration of a branch with a generic coefficient, read as an indeterminate.
pub fn case_iii_filtration_dims(branch: &BranchParam, v: usize) -> Result<FiltrationReport, OracleError> {
    generic_filtration_dims(&branch.plane_param_generic(), v, FiltrationMode::Generic)
}

/// Same filtration computed with true polynomial arithmetic in T; slow, used as a cross-check.
pub fn generic_filtration_dims_symbolic(p: &PlaneParam<RatFun>, v: usize) -> Result<Vec<u64>, OracleError> {
    let ord = |s: &TauSeries<RatFun>| s.coeffs().iter().position(|c| !c.is_zero()).map_or(Order::Infinity, Order::Finite);
    let list = monomials(ord(&p.x), ord(&p.y), v);
    let mut cols: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for &(_, i, j) in &list {
        let s = PolyXY::monomial(i, j).substitute(p);
        let mut entries = Vec::new();
        for (k, c) in s.coeffs().iter().enumerate().take(v + 1) {
            if !c.is_polynomial() {
                return Err(OracleError::NotPolynomial);
            }
            for (d, a) in c.numerator().iter().enumerate() {
                for (r, q) in a.coords().iter().enumerate() {
                    entries.push(((k, d, r), q.clone()));
                }
            }
        }
        rows.push(entries);
    }
    for r in &rows {
        for (key, _) in r {
            cols.entry(*key).or_insert(0);
        }
    }
    for (i, c) in cols.values_mut().enumerate() {
        *c = i;
    }
    let mut ech = SparseEchelon::default();
    let mut dims = vec![0u64; v + 1];
    for r in rows {
        let mut e: Vec<(usize, Q)> = r.into_iter().map(|(key, q)| (cols[&key], q)).collect();
        e.sort_by_key(|(c, _)| *c);
        if let Some(p) = ech.insert(integral(e)) {
            let k = cols.iter().find(|(_, &c)| c == p).map(|(key, _)| key.0).unwrap();
            dims[k] += 1;
        }
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::{generic_curvette, resolve, resolve_divisorial};

    fn qbranch(m: usize, terms: &[(usize, i64)]) -> BranchParam {
        let l = AmbientField::rationals();
        let t: Vec<_> = terms.iter().map(|&(e, c)| (e, l.int(c))).collect();
        BranchParam::with_coeffs(&l, m, &t)
    }

    fn sqrt2() -> Arc<AmbientField> {
        AmbientField::from_ints("z", &[-2, 0, 1]).unwrap()
    }

    #[test]
    fn values_on_the_cusp() {
        let c = qbranch(2, &[(3, 1)]);
        let (v, a) = value_of(&PolyXY::monomial(0, 1), &c).unwrap();
        assert_eq!(v, Order::Finite(3));
        assert!(a.unwrap().is_one());
        let f = PolyXY::from_ints(&[(0, 2, 1), (3, 0, -1)]);
        assert_eq!(value_of(&f, &c).unwrap().0, Order::Infinity);
    }

    #[test]
    fn irrational_line_is_killed_by_its_norm() {
        let l = sqrt2();
        let b = BranchParam::with_coeffs(&l, 1, &[(1, l.gen())]);
        let f = PolyXY::from_ints(&[(0, 2, 1), (2, 0, -2)]);
        assert_eq!(value_of(&f, &b).unwrap().0, Order::Infinity);
        assert_eq!(value_of(&PolyXY::monomial(0, 1), &b).unwrap().0, Order::Finite(1));
    }

    #[test]
    fn curve_dims() {
        assert_eq!(filtration_dims(&qbranch(1, &[]), 5).unwrap().dims, vec![1; 6]);
        assert_eq!(filtration_dims(&qbranch(2, &[(3, 1)]), 6).unwrap().dims, vec![1, 0, 1, 1, 1, 1, 1]);
        let l = sqrt2();
        let b = BranchParam::with_coeffs(&l, 1, &[(1, l.gen())]);
        assert_eq!(filtration_dims(&b, 3).unwrap().dims, vec![1, 2, 2, 2]);
        let b = BranchParam::with_coeffs(&l, 2, &[(3, l.gen())]);
        assert_eq!(observed_semigroup(&b, 6).unwrap(), vec![0, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn divisorial_values() {
        let l = AmbientField::rationals();
        let line = BranchParam::with_coeffs(&l, 1, &[]);
        let e1 = generic_curvette(&resolve(&line).unwrap(), 0).unwrap();
        assert_eq!(divisorial_value(&PolyXY::monomial(1, 0), &e1), Order::Finite(1));
        let e2 = generic_curvette(&resolve_divisorial(&line, 1).unwrap(), 1).unwrap();
        assert_eq!(divisorial_value(&PolyXY::monomial(0, 1), &e2), Order::Finite(2));
        let cusp = resolve(&qbranch(2, &[(3, 1)])).unwrap();
        let t1 = generic_curvette(&cusp, 2).unwrap();
        let f = PolyXY::from_ints(&[(0, 2, 1), (3, 0, -1)]);
        assert_eq!(divisorial_value(&f, &t1), Order::Finite(6));
    }

    #[test]
    fn divisorial_dims() {
        let l = AmbientField::rationals();
        let line = BranchParam::with_coeffs(&l, 1, &[]);
        let e1 = generic_curvette(&resolve(&line).unwrap(), 0).unwrap();
        assert_eq!(divisorial_filtration_dims(&e1, 3).unwrap().dims, vec![1, 2, 3, 4]);
        let e2 = generic_curvette(&resolve_divisorial(&line, 1).unwrap(), 1).unwrap();
        assert_eq!(divisorial_filtration_dims(&e2, 4).unwrap().dims, vec![1, 1, 2, 2, 3]);
        let cusp = resolve(&qbranch(2, &[(3, 1)])).unwrap();
        let t1 = generic_curvette(&cusp, 2).unwrap();
        // (1 − t^6)/((1 − t^2)(1 − t^3)(1 − t^6)) = 1/((1 − t^2)(1 − t^3))
        assert_eq!(divisorial_filtration_dims(&t1, 6).unwrap().dims, vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn evaluation_agrees_with_symbolic_elimination() {
        let cusp = resolve(&qbranch(2, &[(3, 1)])).unwrap();
        let l = sqrt2();
        let irr = resolve_divisorial(&BranchParam::with_coeffs(&l, 1, &[(1, l.gen())]), 1).unwrap();
        for (res, s) in [(&cusp, 2), (&cusp, 1), (&irr, 2), (&irr, 1)] {
            let c = generic_curvette(res, s).unwrap();
            assert_eq!(
                divisorial_filtration_dims(&c, 8).unwrap().dims,
                generic_filtration_dims_symbolic(&c, 8).unwrap()
            );
        }
    }

    #[test]
    fn sparse_echelon_rank() {
        let mut e = SparseEchelon::default();
        let v = |x: &[i64]| x.iter().enumerate().filter(|(_, a)| **a != 0).map(|(i, &a)| (i, BigInt::from(a))).collect::<Vec<_>>();
        assert_eq!(e.insert(v(&[2, 4, 0])), Some(0));
        assert_eq!(e.insert(v(&[1, 2, 0])), None);
        assert_eq!(e.insert(v(&[3, 1, 1])), Some(1));
        assert_eq!(e.insert(v(&[0, 0, 0])), None);
        assert_eq!(e.insert(v(&[1, 7, 9])), Some(2));
    }
}
