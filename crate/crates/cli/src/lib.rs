//! File-driven front end: input documents, reports and DOT rendering.

use kpoincare::analysis::{analyze, Analysis, AnalysisError, Case, Mode, Verification};
use kpoincare::linalg::Q;
use kpoincare::poincare::{classical_series, divisorial_series, expand, SeriesProduct, SplitDatum};
use kpoincare::resolution::VertexKind;
use kpoincare::{AmbientField, BranchParam, Coef};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

pub const DEFAULT_MAX_ORDER: usize = 30;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("verification mismatch at v = {v}: oracle {oracle}, formula {formula}")]
    Mismatch { v: usize, oracle: u64, formula: i64, output: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Mismatch { .. } => 4,
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        CliError::Validation(e.to_string())
    }
}

// ---- input ----

/// A rational as an integer or a "p/q" string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RatDoc {
    Int(i64),
    Str(String),
}

impl RatDoc {
    pub fn to_q(&self) -> Result<Q, CliError> {
        match self {
            RatDoc::Int(n) => Ok(Q::from_integer(BigInt::from(*n))),
            RatDoc::Str(s) => {
                let s = s.trim();
                let (p, q) = s.split_once('/').unwrap_or((s, "1"));
                let p: BigInt = p.trim().parse().map_err(|_| CliError::Parse(format!("bad rational {s:?}")))?;
                let q: BigInt = q.trim().parse().map_err(|_| CliError::Parse(format!("bad rational {s:?}")))?;
                if q == BigInt::from(0) {
                    return Err(CliError::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Q::new(p, q))
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CoeffDoc {
    Vector(Vec<RatDoc>),
    Marker(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientDoc {
    pub var: String,
    /// Coefficients of the minimal polynomial, lowest degree first.
    pub min_poly: Vec<RatDoc>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: usize,
    pub coeff: CoeffDoc,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDoc {
    pub x_order: usize,
    pub y_terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDoc {
    #[serde(rename = "M_rho")]
    pub m_rho: u64,
    pub ell: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeDoc {
    Curve,
    Divisorial { extra_steps: usize },
    Case2 { splitting: Vec<SplitDoc> },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    pub truncate: Option<usize>,
    /// Replaces the computed generators M_σ before the series is assembled.
    /// Only useful for checking that `verify` notices a wrong formula.
    pub override_generators: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub ambient: AmbientDoc,
    pub branch: BranchDoc,
    #[serde(default = "curve")]
    pub mode: ModeDoc,
    #[serde(default)]
    pub options: OptionsDoc,
}

fn curve() -> ModeDoc {
    ModeDoc::Curve
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn mode(&self) -> Mode {
        match &self.mode {
            ModeDoc::Curve => Mode::Curve,
            ModeDoc::Divisorial { extra_steps } => Mode::Divisorial { extra_steps: *extra_steps },
            ModeDoc::Case2 { splitting } => Mode::Case2 {
                splitting: splitting.iter().map(|s| SplitDatum { m_rho: s.m_rho, ell: s.ell }).collect(),
            },
        }
    }

    /// Builds the branch. Shape problems are parse errors, field problems validation errors.
    pub fn branch(&self) -> Result<BranchParam, CliError> {
        let poly = self.ambient.min_poly.iter().map(RatDoc::to_q).collect::<Result<Vec<_>, _>>()?;
        if poly.len() < 2 {
            return Err(CliError::Parse("min_poly needs degree at least 1".into()));
        }
        let deg = poly.len() - 1;
        let field = AmbientField::new(&self.ambient.var, poly).map_err(|e| CliError::Validation(e.to_string()))?;
        let mut terms = Vec::new();
        for t in &self.branch.y_terms {
            let c = match &t.coeff {
                CoeffDoc::Marker(s) if s == "generic" => Coef::Generic,
                CoeffDoc::Marker(s) => return Err(CliError::Parse(format!("unknown coefficient marker {s:?}"))),
                CoeffDoc::Vector(v) => {
                    if v.len() != deg {
                        return Err(CliError::Parse(format!(
                            "coefficient of exponent {} has {} entries, expected {deg}",
                            t.exp,
                            v.len()
                        )));
                    }
                    let coords = v.iter().map(RatDoc::to_q).collect::<Result<Vec<_>, _>>()?;
                    Coef::Num(field.element(coords).map_err(|e| CliError::Validation(e.to_string()))?)
                }
            };
            terms.push((t.exp, c));
        }
        Ok(BranchParam::new(&field, self.branch.x_order, terms))
    }
}

// ---- pipeline ----

/// The analysis of an input document, with the generator override applied if present.
pub struct Run {
    pub analysis: Analysis,
    pub truncate: usize,
}

pub fn run(doc: &InputDoc, truncate: Option<usize>) -> Result<Run, CliError> {
    let mut analysis = analyze(&doc.branch()?, doc.mode())?;
    if let Some(gens) = &doc.options.override_generators {
        if gens.len() != analysis.numerical.big_m_sigma.len() {
            return Err(CliError::Validation(format!(
                "override_generators has {} entries, the graph has {} dead ends",
                gens.len(),
                analysis.numerical.big_m_sigma.len()
            )));
        }
        analysis.numerical.big_m_sigma = gens.clone();
        analysis.series = rebuild_series(&analysis)?;
    }
    let truncate = truncate.or(doc.options.truncate).unwrap_or_else(|| analysis.default_truncation());
    Ok(Run { analysis, truncate })
}

fn rebuild_series(a: &Analysis) -> Result<SeriesProduct, CliError> {
    let nd = &a.numerical;
    if !a.is_divisorial() {
        return Ok(classical_series(nd));
    }
    let base = divisorial_series(nd).map_err(|e| CliError::Validation(e.to_string()))?;
    let n = a.n_case3.unwrap_or(1) as u64;
    let mut out = SeriesProduct { factors: Vec::new(), partial: base.partial };
    for &(e, s) in &base.factors {
        out.push(e * n, s);
    }
    Ok(out)
}

pub fn verify(run: &Run, max_order: usize) -> Result<Verification, CliError> {
    Ok(run.analysis.verify(max_order)?)
}

// ---- report ----

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub kinds: Vec<String>,
    pub self_int: i64,
    pub field_dim: usize,
    pub m: u64,
    #[serde(rename = "M")]
    pub big_m: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<(usize, usize)>,
    pub geodesic: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitOut {
    #[serde(rename = "M_rho")]
    pub m_rho: u64,
    pub ell: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsDoc {
    pub e: Vec<u64>,
    #[serde(rename = "N")]
    pub n: Vec<u64>,
    #[serde(rename = "M_sigma")]
    pub big_m_sigma: Vec<u64>,
    #[serde(rename = "M_tau")]
    pub big_m_tau: Vec<u64>,
    #[serde(rename = "M_delta")]
    pub big_m_delta: Option<u64>,
    pub splitting: Vec<SplitOut>,
    pub ell: u64,
    pub c: i64,
    #[serde(rename = "Delta")]
    pub delta: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub formula: String,
    pub factors: Vec<(u64, i64)>,
    pub partial: bool,
    pub truncate: usize,
    pub expansion: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub v: usize,
    pub oracle: u64,
    pub formula: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub max_order: usize,
    pub oracle_dims: Vec<u64>,
    pub expansion: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub first_mismatch: Option<MismatchDoc>,
}

impl From<&Verification> for VerificationDoc {
    fn from(v: &Verification) -> Self {
        VerificationDoc {
            max_order: v.oracle.v_max,
            oracle_dims: v.oracle.dims.clone(),
            expansion: v.expansion.coeffs.clone(),
            matches: v.matches(),
            first_mismatch: v.first_mismatch.map(|(v, oracle, formula)| MismatchDoc { v, oracle, formula }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub case: String,
    pub n: Option<usize>,
    pub graph: GraphDoc,
    pub invariants: InvariantsDoc,
    pub series: SeriesDoc,
    pub verification: Option<VerificationDoc>,
}

fn case_tag(c: Case) -> &'static str {
    match c {
        Case::I => "I",
        Case::II => "II",
        Case::III => "III",
    }
}

pub fn report(run: &Run, verification: Option<&Verification>) -> ReportDoc {
    let a = &run.analysis;
    let g = &a.resolution.graph;
    let nd = &a.numerical;
    let vertices = g
        .vertices
        .iter()
        .map(|v| VertexDoc {
            id: v.id,
            kinds: v.kinds.iter().map(|k| k.to_string()).collect(),
            self_int: v.self_int,
            field_dim: v.field_dim,
            m: a.valuation.m[v.id],
            big_m: a.valuation.big_m[v.id],
        })
        .collect();
    ReportDoc {
        case: case_tag(a.case).into(),
        n: a.n_case3,
        graph: GraphDoc { vertices, edges: g.edges.clone(), geodesic: g.geodesic.clone() },
        invariants: InvariantsDoc {
            e: nd.e.clone(),
            n: nd.n.clone(),
            big_m_sigma: nd.big_m_sigma.clone(),
            big_m_tau: nd.big_m_tau.clone(),
            big_m_delta: nd.big_m_delta,
            splitting: nd.splitting.iter().map(|d| SplitOut { m_rho: d.m_rho, ell: d.ell }).collect(),
            ell: nd.ell_total,
            c: nd.c_conductor,
            delta: nd.delta,
        },
        series: SeriesDoc {
            formula: a.series.to_string(),
            // keep the order in which the product is written
            factors: a.series.factors.clone(),
            partial: a.series.partial,
            truncate: run.truncate,
            expansion: expand(&a.series, run.truncate).coeffs,
        },
        verification: verification.map(VerificationDoc::from),
    }
}

pub fn report_json(doc: &ReportDoc) -> String {
    serde_json::to_string_pretty(doc).expect("report serializes")
}

/// Plain-text summary printed by `analyze`.
pub fn summary(run: &Run) -> String {
    let a = &run.analysis;
    let nd = &a.numerical;
    let mut s = String::new();
    let _ = writeln!(s, "case: {}", case_tag(a.case));
    if let Some(n) = a.n_case3 {
        let _ = writeln!(s, "n: {n}");
    }
    let _ = writeln!(s, "vertices: {}", a.resolution.len());
    let _ = writeln!(s, "M_sigma: {:?}", nd.big_m_sigma);
    let _ = writeln!(s, "M_tau: {:?}", nd.big_m_tau);
    if !nd.splitting.is_empty() {
        let sp: Vec<String> = nd.splitting.iter().map(|d| format!("(M={}, ell={})", d.m_rho, d.ell)).collect();
        let _ = writeln!(s, "splitting: {}", sp.join(" "));
    }
    if let Some(md) = nd.big_m_delta {
        let _ = writeln!(s, "M_delta: {md}");
    }
    let _ = writeln!(s, "c = {}, Delta = {}, ell = {}", nd.c_conductor, nd.delta, nd.ell_total);
    let tail = if a.series.partial { "  (partial)" } else { "" };
    let _ = writeln!(s, "P(t) = {}{tail}", a.series);
    let _ = writeln!(s, "expansion to t^{}: {:?}", run.truncate, expand(&a.series, run.truncate).coeffs);
    s
}

pub fn verification_text(v: &Verification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "oracle:    {:?}", v.oracle.dims);
    let _ = writeln!(s, "expansion: {:?}", v.expansion.coeffs);
    match v.first_mismatch {
        None => {
            let _ = writeln!(s, "match for v <= {}", v.oracle.v_max);
        }
        Some((k, o, f)) => {
            let _ = writeln!(s, "MISMATCH at v = {k}: oracle {o}, formula {f}");
        }
    }
    s
}

// ---- DOT ----

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Vertices in display order: the geodesic from the initial vertex to δ, then the
/// remaining vertices by breadth-first search from the geodesic.
fn display_order(a: &Analysis) -> Vec<usize> {
    let g = &a.resolution.graph;
    let mut seen: BTreeSet<usize> = g.geodesic.iter().copied().collect();
    let mut order = g.geodesic.clone();
    let mut i = 0;
    while i < order.len() {
        let mut next = g.neighbors(order[i]);
        next.sort();
        for w in next {
            if seen.insert(w) {
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

pub fn dot(a: &Analysis) -> String {
    let g = &a.resolution.graph;
    let mut s = String::from("graph resolution {\n  node [shape=box];\n");
    for v in display_order(a) {
        let vx = &g.vertices[v];
        let kinds: Vec<String> = vx.kinds.iter().map(VertexKind::to_string).collect();
        let label = format!(
            "{} | m={} M={} [K:Q]={}",
            kinds.join(","),
            a.valuation.m[v],
            a.valuation.big_m[v],
            vx.field_dim
        );
        let _ = writeln!(s, "  v{v} [label=\"{}\", xlabel=\"{}\"];", dot_escape(&label), vx.self_int);
    }
    let mut edges = g.edges.clone();
    edges.sort();
    for (x, y) in edges {
        let _ = writeln!(s, "  v{x} -- v{y};");
    }
    s.push_str("  branch [shape=point, label=\"\"];\n");
    let _ = writeln!(s, "  v{} -- branch [dir=forward];", g.delta());
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = |s: &str| RatDoc::Str(s.into()).to_q().unwrap();
        assert_eq!(q("3/6"), Q::new(1.into(), 2.into()));
        assert_eq!(q("-7"), Q::from_integer((-7).into()));
        assert_eq!(RatDoc::Int(4).to_q().unwrap(), Q::from_integer(4.into()));
        assert!(matches!(RatDoc::Str("1/x".into()).to_q(), Err(CliError::Parse(_))));
    }

    #[test]
    fn modes() {
        let base = r#""ambient": {"var": "a", "min_poly": [0, 1]}, "branch": {"x_order": 1, "y_terms": []}"#;
        let m = |mode: &str| InputDoc::parse(&format!("{{{base}, \"mode\": {mode}}}")).map(|d| d.mode());
        assert_eq!(m("\"curve\"").unwrap(), Mode::Curve);
        assert_eq!(m(r#"{"divisorial": {"extra_steps": 2}}"#).unwrap(), Mode::Divisorial { extra_steps: 2 });
        assert_eq!(
            m(r#"{"case2": {"splitting": [{"M_rho": 3, "ell": 2}]}}"#).unwrap(),
            Mode::Case2 { splitting: vec![SplitDatum { m_rho: 3, ell: 2 }] }
        );
        assert!(m("\"surface\"").is_err());
        assert_eq!(InputDoc::parse(&format!("{{{base}}}")).unwrap().mode(), Mode::Curve);
    }

    #[test]
    fn generic_marker_and_unknown_marker() {
        let doc = |c: &str| {
            InputDoc::parse(&format!(
                r#"{{"ambient": {{"var": "z", "min_poly": [0, 1]}}, "branch": {{"x_order": 2, "y_terms": [{{"exp": 3, "coeff": {c}}}]}}}}"#
            ))
            .unwrap()
        };
        assert!(doc("\"generic\"").branch().unwrap().has_generic());
        assert!(matches!(doc("\"random\"").branch(), Err(CliError::Parse(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse(String::new()).exit_code(), 2);
        assert_eq!(CliError::Validation(String::new()).exit_code(), 3);
        let m = CliError::Mismatch { v: 0, oracle: 0, formula: 0, output: String::new() };
        assert_eq!(m.exit_code(), 4);
    }
}
