//! Exact linear algebra over ℚ and ℤ.
//!
//! Small dense routines only: incremental echelon forms for subspace membership,
//! Gauss-Jordan inversion, determinants, and integer kernels of a single row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// A subspace of ℚ^n kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns false when it was already inside.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let p = match r.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        // keep the form reduced: clear column p in the older rows
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

/// Rank of a list of rational vectors.
pub fn rank(vectors: &[Vec<Q>]) -> usize {
    let width = vectors.first().map_or(0, Vec::len);
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Determinant by fraction-preserving elimination.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let piv = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Q::zero(),
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Exact inverse, or None for a singular matrix.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n.
pub fn leading_minors(m: &[Vec<Q>]) -> Vec<Q> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Q>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Sylvester's criterion for negative definiteness of a symmetric matrix.
pub fn is_negative_definite(m: &[Vec<Q>]) -> bool {
    leading_minors(m).iter().enumerate().all(|(k, d)| {
        // sign of the k+1'st minor must be (-1)^(k+1)
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

/// Generators of the lattice { k ∈ ℤ^r : Σ k_i a_i ≡ 0 (mod modulus) }.
///
/// Column operations reduce the row (a_1, .., a_r, modulus) to (g, 0, .., 0) while tracking
/// a unimodular matrix; the columns of that matrix over the zeroed entries span the kernel
/// of the extended row, and their first r coordinates generate the lattice.
pub fn congruence_lattice(a: &[i64], modulus: i64) -> Vec<Vec<i64>> {
    let r = a.len();
    let mut row: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    row.push(BigInt::from(modulus));
    let n = r + 1;
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    loop {
        let p = match row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by(|x, y| x.1.abs().cmp(&y.1.abs()))
        {
            Some((p, _)) => p,
            None => break,
        };
        let mut changed = false;
        for j in 0..n {
            if j == p || row[j].is_zero() {
                continue;
            }
            let q = row[j].div_floor(&row[p]);
            if q.is_zero() {
                continue;
            }
            let t = &q * &row[p];
            row[j] -= t;
            for uk in u.iter_mut() {
                let t = &q * &uk[p];
                uk[j] -= t;
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let to_i64 = |x: &BigInt| -> i64 { i64::try_from(x).expect("lattice entry overflow") };
    (0..n)
        .filter(|&j| row[j].is_zero())
        .map(|j| (0..r).map(|i| to_i64(&u[i][j])).collect::<Vec<i64>>())
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[q(1), q(2), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(3), q(1)]));
        assert!(e.contains(&[q(2), q(5), q(1)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn inverse_of_chain() {
        let e = mat(&[&[-2, 1], &[1, -1]]);
        let inv = inverse(&e).unwrap();
        assert_eq!(inv, mat(&[&[-1, -1], &[-1, -2]]));
        assert_eq!(determinant(&e), q(1));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn cusp_matrix_negative_definite() {
        let e = mat(&[&[-3, 0, 1], &[0, -2, 1], &[1, 1, -1]]);
        assert!(is_negative_definite(&e));
        assert!(!is_negative_definite(&mat(&[&[-1, 2], &[2, -1]])));
    }

    #[test]
    fn lattice_members_satisfy_congruence() {
        let a = [6, 7];
        let gens = congruence_lattice(&a, 4);
        assert!(!gens.is_empty());
        for g in &gens {
            assert_eq!((g[0] * 6 + g[1] * 7).rem_euclid(4), 0);
        }
        // index of the lattice in ℤ² is 4
        let det = gens
            .iter()
            .flat_map(|x| gens.iter().map(move |y| (x[0] * y[1] - x[1] * y[0]).abs()))
            .filter(|&d| d != 0)
            .fold(0, num_integer::gcd);
        assert_eq!(det, 4);
    }
}
