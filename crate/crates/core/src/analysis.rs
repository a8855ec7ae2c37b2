//! End-to-end pipeline: branch → resolution → numerical data → series, with oracle verification.

use crate::oracle::{case_iii_filtration_dims, divisorial_filtration_dims, filtration_dims, FiltrationReport, OracleError};
use crate::poincare::{
    classical_series, divisorial_series, expand, valuation_data, Carrier, NumericalData, PoincareError,
    SeriesExpansion, SeriesProduct, SplitDatum, ValuationData,
};
use crate::resolution::{generic_curvette, normalize, resolve, resolve_divisorial, BranchParam, Resolution, ResolutionError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Poincare(#[from] PoincareError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("a generic coefficient is only allowed in curve mode")]
    GenericNotAllowed,
    #[error("an abstract splitting stream cannot be checked against the oracle")]
    NotVerifiable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Curve,
    /// The last component after `extra_steps` further blow-ups.
    Divisorial { extra_steps: usize },
    /// The branch's semigroup data with an abstract splitting prefix.
    Case2 { splitting: Vec<SplitDatum> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    I,
    II,
    III,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub branch: BranchParam,
    pub mode: Mode,
    pub case: Case,
    /// Contact n of Case III: the valuation is n·ν_δ.
    pub n_case3: Option<usize>,
    pub resolution: Resolution,
    pub valuation: ValuationData,
    pub numerical: NumericalData,
    pub series: SeriesProduct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub oracle: FiltrationReport,
    pub expansion: SeriesExpansion,
    /// First v where the two disagree, with (oracle, formula).
    pub first_mismatch: Option<(usize, u64, i64)>,
}

impl Verification {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn scaled(p: &SeriesProduct, n: u64) -> SeriesProduct {
    let mut out = SeriesProduct { factors: Vec::new(), partial: p.partial };
    for &(a, s) in &p.factors {
        out.push(a * n, s);
    }
    out
}

pub fn analyze(branch: &BranchParam, mode: Mode) -> Result<Analysis, AnalysisError> {
    let branch = normalize(branch)?;
    if branch.has_generic() {
        if mode != Mode::Curve {
            return Err(AnalysisError::GenericNotAllowed);
        }
        let resolution = resolve(&branch)?;
        let n = resolution.graph.n_case3.unwrap_or(1);
        let valuation = valuation_data(&resolution, Carrier::Divisorial)?;
        let numerical = valuation.numerical.clone();
        let series = scaled(&divisorial_series(&numerical)?, n as u64);
        return Ok(Analysis { branch, mode, case: Case::III, n_case3: Some(n), resolution, valuation, numerical, series });
    }
    let (resolution, carrier) = match &mode {
        Mode::Divisorial { extra_steps } => (resolve_divisorial(&branch, *extra_steps)?, Carrier::Divisorial),
        _ => (resolve(&branch)?, Carrier::Curve),
    };
    let valuation = valuation_data(&resolution, carrier)?;
    let (case, numerical) = match &mode {
        Mode::Case2 { splitting } => (Case::II, valuation.numerical.with_abstract_splitting(splitting)),
        _ => (Case::I, valuation.numerical.clone()),
    };
    let series = match carrier {
        Carrier::Curve => classical_series(&numerical),
        Carrier::Divisorial => divisorial_series(&numerical)?,
    };
    Ok(Analysis { branch, mode, case, n_case3: None, resolution, valuation, numerical, series })
}

impl Analysis {
    pub fn is_divisorial(&self) -> bool {
        matches!(self.mode, Mode::Divisorial { .. }) || self.case == Case::III
    }

    /// Δ + 10 for a curve valuation, 40 otherwise.
    pub fn default_truncation(&self) -> usize {
        match (self.case, &self.mode) {
            (Case::I, Mode::Curve) => self.numerical.delta as usize + 10,
            _ => 40,
        }
    }

    pub fn expansion(&self, n: usize) -> SeriesExpansion {
        expand(&self.series, n)
    }

    pub fn oracle_dims(&self, v: usize) -> Result<FiltrationReport, AnalysisError> {
        Ok(match (self.case, &self.mode) {
            (Case::II, _) => return Err(AnalysisError::NotVerifiable),
            (Case::III, _) => case_iii_filtration_dims(&self.branch, v)?,
            (_, Mode::Divisorial { .. }) => {
                divisorial_filtration_dims(&generic_curvette(&self.resolution, self.resolution.delta())?, v)?
            }
            _ => filtration_dims(&self.branch, v)?,
        })
    }

    /// Compares the oracle with the expansion of the series for v ≤ V.
    pub fn verify(&self, v: usize) -> Result<Verification, AnalysisError> {
        self.verify_against(&self.series, v)
    }

    /// Same comparison against an arbitrary product.
    pub fn verify_against(&self, series: &SeriesProduct, v: usize) -> Result<Verification, AnalysisError> {
        let oracle = self.oracle_dims(v)?;
        let expansion = expand(series, v);
        let first_mismatch = oracle
            .dims
            .iter()
            .zip(&expansion.coeffs)
            .enumerate()
            .find(|(_, (a, b))| **a as i64 != **b)
            .map(|(k, (a, b))| (k, *a, *b));
        Ok(Verification { oracle, expansion, first_mismatch })
    }
}
