//! Python bindings: build a branch, analyze it, read off invariants and series, run the oracle.

use kpoincare::analysis::{analyze, Analysis, Case, Mode};
use kpoincare::poincare::{binomial_factorization, expand, gaps, SeriesExpansion, SplitDatum};
use kpoincare::{AmbientField, BranchParam, Coef};
use kpoincare_cli::{dot, report, report_json, run, CliError, InputDoc, RatDoc, Run};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use std::sync::Arc;

create_exception!(pykpoincare, KpError, PyException);

fn err(e: impl std::fmt::Display) -> PyErr {
    KpError::new_err(e.to_string())
}

/// Accepts ints, "p/q" strings and fractions.Fraction (anything whose str() is "p/q").
fn rational(x: &Bound<'_, PyAny>) -> PyResult<kpoincare::linalg::Q> {
    let s: String = x.str()?.extract()?;
    RatDoc::Str(s).to_q().map_err(err)
}

/// A number field ℚ[var]/(min_poly), coefficients lowest degree first.
#[pyclass(frozen, name = "Field")]
struct PyField {
    inner: Arc<AmbientField>,
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (min_poly, var = "z"))]
    fn new(min_poly: Vec<Bound<'_, PyAny>>, var: &str) -> PyResult<Self> {
        let c = min_poly.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        Ok(PyField { inner: AmbientField::new(var, c).map_err(err)? })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn __repr__(&self) -> String {
        let p: Vec<String> = self.inner.min_poly().iter().map(|q| q.to_string()).collect();
        format!("Field({}, [{}])", self.inner.var(), p.join(", "))
    }
}

/// The result of the full pipeline for one branch.
#[pyclass(frozen, name = "Analysis")]
struct PyAnalysis {
    run: Run,
}

fn wrap(analysis: Analysis) -> PyAnalysis {
    let truncate = analysis.default_truncation();
    PyAnalysis { run: Run { analysis, truncate } }
}

#[pymethods]
impl PyAnalysis {
    #[getter]
    fn case(&self) -> &'static str {
        match self.run.analysis.case {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        }
    }

    #[getter]
    fn n(&self) -> Option<usize> {
        self.run.analysis.n_case3
    }

    #[getter]
    fn generators(&self) -> Vec<u64> {
        self.run.analysis.numerical.big_m_sigma.clone()
    }

    #[getter]
    fn rupture_values(&self) -> Vec<u64> {
        self.run.analysis.numerical.big_m_tau.clone()
    }

    /// (M_rho, ell) per splitting vertex.
    #[getter]
    fn splitting(&self) -> Vec<(u64, u64)> {
        self.run.analysis.numerical.splitting.iter().map(|d| (d.m_rho, d.ell)).collect()
    }

    #[getter]
    fn conductor(&self) -> i64 {
        self.run.analysis.numerical.c_conductor
    }

    #[getter]
    fn delta(&self) -> u64 {
        self.run.analysis.numerical.delta
    }

    #[getter]
    fn ell(&self) -> u64 {
        self.run.analysis.numerical.ell_total
    }

    /// Factors (a, s) of the product Π (1 - t^a)^s.
    #[getter]
    fn factors(&self) -> Vec<(u64, i64)> {
        self.run.analysis.series.factors.clone()
    }

    #[getter]
    fn partial(&self) -> bool {
        self.run.analysis.series.partial
    }

    #[getter]
    fn formula(&self) -> String {
        self.run.analysis.series.to_string()
    }

    #[getter]
    fn default_truncation(&self) -> usize {
        self.run.truncate
    }

    fn expansion(&self, n: usize) -> Vec<i64> {
        self.run.analysis.expansion(n).coeffs
    }

    /// Filtration dimensions from the oracle, up to v.
    fn oracle_dims(&self, py: Python<'_>, v: usize) -> PyResult<Vec<u64>> {
        let a = &self.run.analysis;
        py.detach(|| a.oracle_dims(v)).map(|r| r.dims).map_err(err)
    }

    /// None when the formula agrees with the oracle up to v, else (v, oracle, formula).
    fn verify(&self, py: Python<'_>, v: usize) -> PyResult<Option<(usize, u64, i64)>> {
        let a = &self.run.analysis;
        py.detach(|| a.verify(v)).map(|r| r.first_mismatch).map_err(err)
    }

    fn dot(&self) -> String {
        dot(&self.run.analysis)
    }

    fn report_json(&self) -> String {
        report_json(&report(&self.run, None))
    }

    fn __repr__(&self) -> String {
        format!("Analysis(case={}, P(t) = {})", self.case(), self.formula())
    }
}

/// Analyze x = τ^x_order, y = Σ c τ^exp. Each coefficient is a list of rationals of length
/// field.degree, or the string "generic". mode is "curve", "divisorial" or "case2".
#[pyfunction]
#[pyo3(signature = (field, x_order, y_terms, mode = "curve", extra_steps = 0, splitting = None))]
fn analyze_branch(
    py: Python<'_>,
    field: &PyField,
    x_order: usize,
    y_terms: Vec<(usize, Bound<'_, PyAny>)>,
    mode: &str,
    extra_steps: usize,
    splitting: Option<Vec<(u64, u64)>>,
) -> PyResult<PyAnalysis> {
    let l = &field.inner;
    let mut terms = Vec::new();
    for (e, c) in &y_terms {
        let coef = if c.extract::<String>().is_ok_and(|s| s == "generic") {
            Coef::Generic
        } else {
            let v: Vec<Bound<'_, PyAny>> = c.extract()?;
            let q = v.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
            Coef::Num(l.element(q).map_err(err)?)
        };
        terms.push((*e, coef));
    }
    let mode = match mode {
        "curve" => Mode::Curve,
        "divisorial" => Mode::Divisorial { extra_steps },
        "case2" => Mode::Case2 {
            splitting: splitting.unwrap_or_default().into_iter().map(|(m_rho, ell)| SplitDatum { m_rho, ell }).collect(),
        },
        other => return Err(err(format!("unknown mode {other:?}"))),
    };
    let b = BranchParam::new(l, x_order, terms);
    let a = py.detach(|| analyze(&b, mode)).map_err(err)?;
    Ok(wrap(a))
}

/// Analyze an input document in the command-line JSON format.
#[pyfunction]
fn analyze_json(py: Python<'_>, text: &str) -> PyResult<PyAnalysis> {
    let doc = InputDoc::parse(text).map_err(err)?;
    let r = py.detach(|| run(&doc, None)).map_err(|e: CliError| err(e))?;
    Ok(PyAnalysis { run: r })
}

/// Coefficients of Π (1 - t^a)^s up to t^n.
#[pyfunction]
fn expand_product(factors: Vec<(u64, i64)>, n: usize) -> Vec<i64> {
    let mut p = kpoincare::poincare::SeriesProduct::one();
    for (a, s) in factors {
        p.push(a, s);
    }
    expand(&p, n).coeffs
}

/// Binomial factors (a, s) recovered from a truncated expansion.
#[pyfunction]
fn factor_expansion(coeffs: Vec<i64>) -> PyResult<Vec<(u64, i64)>> {
    match binomial_factorization(&SeriesExpansion { coeffs }, None) {
        Ok(f) => Ok(f.factors),
        Err(kpoincare::poincare::PoincareError::TruncationInconclusive { partial }) => Ok(partial),
        Err(e) => Err(err(e)),
    }
}

#[pyfunction]
fn semigroup_gaps(generators: Vec<u64>, bound: usize) -> Vec<u64> {
    gaps(&generators, bound)
}

#[pymodule]
fn pykpoincare(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyAnalysis>()?;
    m.add_function(wrap_pyfunction!(analyze_branch, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(expand_product, m)?)?;
    m.add_function(wrap_pyfunction!(factor_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup_gaps, m)?)?;
    m.add("KpError", m.py().get_type::<KpError>())?;
    Ok(())
}
