//! Numerical invariants of the quotient graph and the product formulas for the semigroup,
//! classical and divisorial Poincaré series.

mod product;
mod semigroup;

pub use product::{
    binomial_factorization, classical_series, divisorial_series, expand, partial_series, peel_binomials,
    semigroup_series, Factorization, SeriesExpansion, SeriesProduct,
};
pub use semigroup::{
    conductor_delta, gaps, membership, minimal_generator_check, semigroup_indicator, symmetry_check,
    GeneratorViolation,
};

use crate::resolution::{
    curvette_constant, curvette_param, noether_sum, strict_mults, Resolution, ResolutionError,
};
use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PoincareError {
    #[error("semigroup data is inconsistent: {0}")]
    BadSemigroupData(String),
    #[error("divisorial series needs M_delta")]
    MissingDelta,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("expansion to order {have} is too short; need {need}")]
    TruncationTooShort { have: usize, need: usize },
    #[error("cyclotomicity cannot be decided from the available terms")]
    TruncationInconclusive { partial: Vec<(u64, i64)> },
    #[error("recovered factors differ from the source product")]
    FactorizationMismatch,
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// One splitting vertex: M_ρ and ℓ = [K_j : K_{j-1}].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitDatum {
    pub m_rho: u64,
    pub ell: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalData {
    pub m_sigma: Vec<u64>,
    pub big_m_sigma: Vec<u64>,
    pub big_m_tau: Vec<u64>,
    pub e: Vec<u64>,
    pub n: Vec<u64>,
    pub splitting: Vec<SplitDatum>,
    pub big_m_delta: Option<u64>,
    pub ell_total: u64,
    pub delta: u64,
    pub c_conductor: i64,
    /// True when the splitting list is a finite prefix of an infinite one.
    pub partial: bool,
}

impl NumericalData {
    pub fn g(&self) -> usize {
        self.big_m_sigma.len() - 1
    }

    pub fn s(&self) -> usize {
        self.splitting.len()
    }

    /// Replaces the splitting data by an abstract (finite) prefix, as for an infinite tower.
    pub fn with_abstract_splitting(&self, prefix: &[SplitDatum]) -> Self {
        let mut nd = self.clone();
        nd.splitting = prefix.to_vec();
        nd.partial = true;
        nd.ell_total = prefix.iter().map(|d| d.ell).product();
        let (c, delta) = conductor_delta(&nd);
        nd.c_conductor = c;
        nd.delta = delta;
        nd
    }
}

/// e_i = gcd(m_0..m_i) and N_i = e_{i-1}/e_i.
pub fn char_invariants(m_sigma: &[u64]) -> Result<(Vec<u64>, Vec<u64>), PoincareError> {
    if m_sigma.is_empty() {
        return Err(PoincareError::BadSemigroupData("no dead ends".into()));
    }
    let mut e = vec![m_sigma[0]];
    for &m in &m_sigma[1..] {
        e.push(e.last().unwrap().gcd(&m));
    }
    if *e.last().unwrap() != 1 {
        return Err(PoincareError::BadSemigroupData(format!("e_g = {}", e.last().unwrap())));
    }
    let n = e.windows(2).map(|w| w[0] / w[1]).collect();
    Ok((e, n))
}

/// Which valuation the numerical data describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    /// The branch itself.
    Curve,
    /// The last component of the resolution, through a curvette at it.
    Divisorial,
}

/// Everything computed on the way from a resolution to the numerical data.
#[derive(Debug, Clone)]
pub struct ValuationData {
    pub carrier: Carrier,
    /// Multiplicities of the carrier along the chain.
    pub carrier_mults: Vec<usize>,
    /// Multiplicities of the curvette at each vertex along the chain.
    pub curvette_mults: Vec<Vec<usize>>,
    /// m_σ per vertex.
    pub m: Vec<u64>,
    /// M_σ per vertex.
    pub big_m: Vec<u64>,
    pub numerical: NumericalData,
}

/// Orbit sums M_ω = m_ω + Σ_j L^d_j · e_{ρ_j}(φ_ω) · m_{ρ_j}, the sum running over the d splitting
/// centers in the creation chain of ω, with L^d_j = ℓ_j⋯ℓ_d − ℓ_{j+1}⋯ℓ_d.
pub fn big_m(res: &Resolution, curvette_mults: &[Vec<usize>], m: &[u64]) -> Vec<u64> {
    (0..res.len())
        .map(|w| {
            let split: Vec<_> = res.splitting.iter().filter(|s| s.center_step <= w).collect();
            let d = split.len();
            let tail = |from: usize| -> u64 { split[from..].iter().map(|s| s.ell as u64).product() };
            let extra: u64 = (0..d)
                .map(|j| {
                    let l = tail(j) - tail(j + 1);
                    let rho = split[j].vertex;
                    // ρ_j was created by blowing up the point with index ρ_j
                    l * curvette_mults[w][rho] as u64 * m[rho]
                })
                .sum();
            m[w] + extra
        })
        .collect()
}

pub fn valuation_data(res: &Resolution, carrier: Carrier) -> Result<ValuationData, PoincareError> {
    let curvette_mults = (0..res.len())
        .map(|s| {
            let phi = curvette_param(res, s, &curvette_constant(res, s))?;
            strict_mults(&phi, &res.records)
        })
        .collect::<Result<Vec<_>, ResolutionError>>()?;
    let carrier_mults = match carrier {
        Carrier::Curve => res.branch_mults(),
        Carrier::Divisorial => curvette_mults[res.delta()].clone(),
    };
    let m: Vec<u64> = curvette_mults.iter().map(|e| noether_sum(&carrier_mults, e) as u64).collect();
    let big = big_m(res, &curvette_mults, &m);
    let g = &res.graph;
    let m_sigma: Vec<u64> = g.dead_ends().iter().map(|&v| m[v]).collect();
    let (e, n) = char_invariants(&m_sigma)?;
    let splitting: Vec<SplitDatum> = res
        .splitting
        .iter()
        .map(|s| SplitDatum { m_rho: big[s.vertex], ell: s.ell as u64 })
        .collect();
    let mut nd = NumericalData {
        big_m_sigma: g.dead_ends().iter().map(|&v| big[v]).collect(),
        big_m_tau: g.ruptures().iter().map(|&v| big[v]).collect(),
        m_sigma,
        e,
        n,
        ell_total: splitting.iter().map(|d| d.ell).product(),
        splitting,
        big_m_delta: (carrier == Carrier::Divisorial).then(|| big[res.delta()]),
        delta: 0,
        c_conductor: 0,
        partial: false,
    };
    let (c, delta) = conductor_delta(&nd);
    nd.c_conductor = c;
    nd.delta = delta;
    Ok(ValuationData { carrier, carrier_mults, curvette_mults, m, big_m: big, numerical: nd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::AmbientField;
    use crate::resolution::{resolve, BranchParam};

    #[test]
    fn char_invariants_examples() {
        assert_eq!(char_invariants(&[2, 3]).unwrap(), (vec![2, 1], vec![2]));
        assert_eq!(char_invariants(&[1]).unwrap(), (vec![1], vec![]));
        assert_eq!(char_invariants(&[4, 6, 13]).unwrap(), (vec![4, 2, 1], vec![2, 2]));
        assert!(char_invariants(&[2, 4]).is_err());
    }

    #[test]
    fn rational_branch_has_m_equal_big_m() {
        let l = AmbientField::rationals();
        let r = resolve(&BranchParam::with_coeffs(&l, 4, &[(6, l.one()), (7, l.one())])).unwrap();
        let v = valuation_data(&r, Carrier::Curve).unwrap();
        assert_eq!(v.m, v.big_m);
        assert_eq!(v.numerical.big_m_sigma, vec![4, 6, 13]);
        assert_eq!(v.numerical.big_m_tau, vec![12, 26]);
    }

    #[test]
    fn irrational_line() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let r = resolve(&BranchParam::with_coeffs(&l, 1, &[(1, l.gen())])).unwrap();
        let v = valuation_data(&r, Carrier::Curve).unwrap();
        assert_eq!(v.numerical.big_m_sigma, vec![1]);
        assert_eq!(v.numerical.splitting, vec![SplitDatum { m_rho: 1, ell: 2 }]);
        assert_eq!((v.numerical.c_conductor, v.numerical.delta), (0, 1));
        let d = valuation_data(&r, Carrier::Divisorial).unwrap();
        assert_eq!(d.numerical.big_m_delta, Some(3));
    }

    #[test]
    fn field_jump_after_the_rupture() {
        let l = AmbientField::from_ints("z", &[-2, 0, 1]).unwrap();
        let p = BranchParam::with_coeffs(&l, 2, &[(3, l.one()), (4, l.gen())]);
        let v = valuation_data(&resolve(&p).unwrap(), Carrier::Curve).unwrap();
        assert_eq!(v.m, vec![2, 3, 6, 7, 8]);
        assert_eq!(v.big_m, vec![2, 3, 6, 7, 15]);
        let nd = &v.numerical;
        assert_eq!(nd.splitting, vec![SplitDatum { m_rho: 7, ell: 2 }]);
        assert_eq!((nd.c_conductor, nd.delta, nd.ell_total), (2, 9, 2));
    }
}
