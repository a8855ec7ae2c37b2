use super::{NumericalData, PoincareError, SeriesExpansion};
use std::fmt;

/// Membership flags of the semigroup generated by `gens`, for 0..=bound.
pub fn semigroup_indicator(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut inside = vec![false; bound + 1];
    inside[0] = true;
    for v in 1..=bound {
        inside[v] = gens.iter().any(|&g| g != 0 && g as usize <= v && inside[v - g as usize]);
    }
    inside
}

pub fn membership(gens: &[u64], v: u64) -> bool {
    semigroup_indicator(gens, v as usize)[v as usize]
}

/// Elements of ℕ \ ⟨gens⟩ below `bound`.
pub fn gaps(gens: &[u64], bound: usize) -> Vec<u64> {
    semigroup_indicator(gens, bound)
        .into_iter()
        .enumerate()
        .filter(|(_, x)| !x)
        .map(|(v, _)| v as u64)
        .collect()
}

/// c = Σ (N_i − 1) M_σi − M_σ0 + 1 and Δ = c + Σ (ℓ_j − 1) M_ρj.
pub fn conductor_delta(nd: &NumericalData) -> (i64, u64) {
    let c: i64 = nd
        .n
        .iter()
        .zip(&nd.big_m_sigma[1..])
        .map(|(&n, &m)| (n as i64 - 1) * m as i64)
        .sum::<i64>()
        - nd.big_m_sigma[0] as i64
        + 1;
    let extra: i64 = nd.splitting.iter().map(|d| (d.ell as i64 - 1) * d.m_rho as i64).sum();
    (c, (c + extra).max(0) as u64)
}

/// Checks a_v + a_{Δ−1−v} = ℓ below Δ and a_v = ℓ from Δ on.
pub fn symmetry_check(exp: &SeriesExpansion, delta: u64, ell: u64) -> Result<bool, PoincareError> {
    let n = exp.truncation();
    let d = delta as usize;
    if n < d {
        return Err(PoincareError::TruncationTooShort { have: n, need: d });
    }
    let a = &exp.coeffs;
    let l = ell as i64;
    let mirrored = (0..d).all(|v| a[v] + a[d - 1 - v] == l);
    let stable = a[d..].iter().all(|&x| x == l);
    let sharp = d == 0 || a[d - 1] < l;
    Ok(mirrored && stable && sharp)
}

/// First property of the generators that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorViolation {
    pub index: usize,
    pub property: usize,
    pub detail: String,
}

impl fmt::Display for GeneratorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generator {} violates property {}: {}", self.index, self.property, self.detail)
    }
}

/// For each i ≥ 1: (N_i − 1)M_i ∉ ⟨M_0..M_{i−1}⟩, N_i M_i ∈ ⟨M_0..M_{i−1}⟩, and for i ≥ 2
/// also N_{i−1} M_{i−1} < M_i.
pub fn minimal_generator_check(m: &[u64], n: &[u64]) -> Result<(), GeneratorViolation> {
    let fail = |index, property, detail: String| Err(GeneratorViolation { index, property, detail });
    if n.len() + 1 != m.len() {
        return fail(0, 0, format!("{} generators but {} ratios", m.len(), n.len()));
    }
    for i in 1..m.len() {
        let prev = &m[..i];
        let ni = n[i - 1];
        let below = (ni - 1) * m[i];
        if membership(prev, below) {
            return fail(i, 1, format!("{below} is in the semigroup of the previous generators"));
        }
        let at = ni * m[i];
        if !membership(prev, at) {
            return fail(i, 2, format!("{at} is not in the semigroup of the previous generators"));
        }
        if i >= 2 && n[i - 2] * m[i - 1] >= m[i] {
            return fail(i, 3, format!("{} >= {}", n[i - 2] * m[i - 1], m[i]));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::{expand, semigroup_series};

    #[test]
    fn cusp_gaps() {
        assert_eq!(gaps(&[2, 3], 10), vec![1]);
        assert_eq!(gaps(&[4, 6, 13], 20), vec![1, 2, 3, 5, 7, 9, 11, 15]);
        assert!(membership(&[4, 6, 13], 19));
        assert!(!membership(&[4, 6, 13], 15));
    }

    #[test]
    fn generator_checks() {
        assert!(minimal_generator_check(&[4, 6, 13], &[2, 2]).is_ok());
        assert!(minimal_generator_check(&[2, 3], &[2]).is_ok());
        let bad = minimal_generator_check(&[4, 6, 11], &[2, 2]).unwrap_err();
        assert_eq!((bad.index, bad.property), (2, 3));
        let bad = minimal_generator_check(&[2, 4], &[2]).unwrap_err();
        assert_eq!(bad.property, 1);
    }

    #[test]
    fn symmetry_of_the_cusp() {
        let nd = NumericalData {
            m_sigma: vec![4, 6, 13],
            big_m_sigma: vec![4, 6, 13],
            big_m_tau: vec![12, 26],
            e: vec![4, 2, 1],
            n: vec![2, 2],
            splitting: vec![],
            big_m_delta: None,
            ell_total: 1,
            delta: 0,
            c_conductor: 0,
            partial: false,
        };
        let (c, d) = conductor_delta(&nd);
        assert_eq!((c, d), (16, 16));
        let e = expand(&semigroup_series(&nd), 30);
        assert!(symmetry_check(&e, d, 1).unwrap());
        assert!(!symmetry_check(&e, d + 1, 1).unwrap());
        assert!(symmetry_check(&expand(&semigroup_series(&nd), 10), d, 1).is_err());
    }
}
