use super::blowup::{blow_up_step, Chart, ChartParam};
use super::graph::{CaseTag, QuotientGraph};
use super::{normalize, BranchParam, Coef, InfNearRecord, PlaneParam, PointCoord, ResolutionError};
use crate::exactfield::{span_close, AlgNum, Subfield};
use crate::linalg::congruence_lattice;
use crate::scalar::Scalar;
use crate::series::SeriesError;
use std::collections::BTreeSet;

/// A field jump: the center blown up at `center_step` lies outside the field of the
/// previous centers, so its host component `vertex` splits with degree `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub vertex: usize,
    pub center_step: usize,
    pub ell: usize,
}

/// Output of the resolution process: graph, records and the final position of the branch.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub graph: QuotientGraph,
    pub records: Vec<InfNearRecord>,
    /// Point of the strict transform on the last component.
    pub final_point: PointCoord,
    /// Intersection multiplicity of the strict transform with the last component there.
    pub final_contact: usize,
    pub splitting: Vec<Splitting>,
    /// Field generated by the Galois-invariant data of the branch.
    pub field_of_definition: Subfield,
    /// Vertex where the branch became smooth, transverse and field-saturated (Case I).
    pub delta_curve: usize,
    /// For each vertex, the component met at coordinate 0 of its first chart, if any.
    pub(crate) chart_one_other: Vec<Option<usize>>,
}

impl Resolution {
    pub fn delta(&self) -> usize {
        self.records.len() - 1
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn branch_mults(&self) -> Vec<usize> {
        self.records.iter().map(|r| r.branch_mult).collect()
    }

    pub fn field_dim_before(&self, step: usize) -> usize {
        if step == 0 {
            1
        } else {
            self.records[step - 1].field_after.dim()
        }
    }
}

/// Field of definition of x = τ^m, y = Σ c_i τ^i: generated by the monomials Π c_i^{k_i}
/// with Σ k_i·i ≡ 0 (mod m), which are exactly the expressions invariant under τ ↦ ζτ.
pub fn field_of_definition(p: &BranchParam) -> Result<Subfield, ResolutionError> {
    let base = Subfield::rationals(&p.ambient);
    let terms: Vec<(usize, AlgNum)> = p
        .support()
        .filter_map(|(e, c)| match c {
            Coef::Num(a) => Some((*e, a.clone())),
            Coef::Generic => None,
        })
        .collect();
    if terms.is_empty() {
        return Ok(base);
    }
    let exps: Vec<i64> = terms.iter().map(|(e, _)| *e as i64).collect();
    let mut gens = Vec::new();
    for k in congruence_lattice(&exps, p.x_order as i64) {
        let mut g = p.ambient.one();
        for ((_, c), &ki) in terms.iter().zip(&k) {
            g = g.mul(&c.powi(ki)?);
        }
        gens.push(g);
    }
    Ok(span_close(&gens, &base))
}

enum Policy {
    CaseI { target_dim: usize, extra: usize },
    CaseIII,
}

#[derive(Clone)]
struct Point {
    center: PointCoord,
    chart_zero: bool,
    other: Option<usize>,
    hosts: Vec<usize>,
}

fn step_cap(p: &BranchParam) -> usize {
    8 * p.degree() + 64
}

fn run<S: Scalar>(
    start: &PlaneParam<S>,
    p: &BranchParam,
    policy: &Policy,
    work: usize,
) -> Result<Resolution, ResolutionError> {
    let field_def = field_of_definition(p)?;
    let mut state = ChartParam { u: start.x.clone(), w: start.y.clone() };
    let mut cur = Point { center: PointCoord::Origin, chart_zero: true, other: None, hosts: Vec::new() };
    let mut field = Subfield::rationals(&p.ambient);
    let mut records: Vec<InfNearRecord> = Vec::new();
    let mut self_int: Vec<i64> = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut chart_one_other = Vec::new();
    let mut splitting = Vec::new();
    let mut delta_curve: Option<usize> = None;
    let mut extra_left = 0usize;
    let cap = step_cap(p);
    loop {
        if records.len() > cap {
            return Err(ResolutionError::NoTermination(cap));
        }
        let bu = blow_up_step(&state, work)?;
        let k = records.len();
        if let PointCoord::Finite(a) = &cur.center {
            if !field.contains(a) {
                let next = span_close(std::slice::from_ref(a), &field);
                splitting.push(Splitting { vertex: k - 1, center_step: k, ell: next.dim() / field.dim() });
                field = next;
            }
        }
        records.push(InfNearRecord {
            step: k,
            center: cur.center.clone(),
            branch_mult: bu.mult,
            field_after: field.clone(),
            host_components: cur.hosts.clone(),
        });
        self_int.push(-1);
        for &h in &cur.hosts {
            self_int[h] -= 1;
            edges.insert((h, k));
        }
        if let [a, b] = cur.hosts[..] {
            edges.remove(&(a.min(b), a.max(b)));
        }
        let one_other = if cur.chart_zero { cur.other } else { None };
        chart_one_other.push(one_other);
        let q = match bu.chart {
            Chart::One => {
                let zero = matches!(&bu.center, PointCoord::Finite(b) if b.is_zero());
                let mut hosts = vec![k];
                if zero {
                    hosts.extend(one_other);
                }
                Point { center: bu.center.clone(), chart_zero: zero, other: one_other, hosts }
            }
            Chart::Two => {
                let other = k.checked_sub(1);
                let mut hosts = vec![k];
                hosts.extend(other);
                Point { center: PointCoord::AtInfinity, chart_zero: true, other, hosts }
            }
        };
        let free = q.hosts.len() == 1;
        let stop = match policy {
            Policy::CaseIII => q.center == PointCoord::Generic,
            Policy::CaseI { target_dim, extra } => {
                if q.center == PointCoord::Generic {
                    return Err(ResolutionError::GenericCenter);
                }
                match delta_curve {
                    Some(_) => {
                        extra_left -= 1;
                        extra_left == 0
                    }
                    None => {
                        let in_field = match &q.center {
                            PointCoord::Finite(b) => field.contains(b),
                            _ => true,
                        };
                        if free && bu.contact == 1 && field.dim() == *target_dim && in_field {
                            delta_curve = Some(k);
                            extra_left = *extra;
                            *extra == 0
                        } else {
                            false
                        }
                    }
                }
            }
        };
        if stop {
            let n = records.len();
            let case = match policy {
                Policy::CaseI { .. } => CaseTag::I,
                Policy::CaseIII => CaseTag::III,
            };
            let n3 = matches!(policy, Policy::CaseIII).then_some(bu.contact);
            let dims: Vec<usize> = records.iter().map(|r| r.field_after.dim()).collect();
            let graph = QuotientGraph::build(&self_int, &edges, &dims, &splitting, n - 1, case, n3);
            return Ok(Resolution {
                graph,
                records,
                final_point: q.center,
                final_contact: bu.contact,
                splitting,
                field_of_definition: field_def,
                delta_curve: delta_curve.unwrap_or(n - 1),
                chart_one_other,
            });
        }
        state = bu.next;
        cur = q;
    }
}

/// Retries `f` with doubled relative precision while a series comes out too short.
pub(crate) fn with_precision<T>(
    start: usize,
    mut f: impl FnMut(usize) -> Result<T, ResolutionError>,
) -> Result<T, ResolutionError> {
    let mut work = start.max(4);
    loop {
        match f(work) {
            Err(ResolutionError::Series(SeriesError::TruncationTooShort { .. })) => {
                if work > 1 << 14 {
                    return Err(ResolutionError::PrecisionExhausted);
                }
                work *= 2;
            }
            r => return r,
        }
    }
}

/// Resolution of a branch; inputs with a generic coefficient go through Case III.
pub fn resolve(p: &BranchParam) -> Result<Resolution, ResolutionError> {
    resolve_divisorial(p, 0)
}

/// Resolution followed by `extra_steps` blow-ups at the point where the strict transform
/// meets the last component.
pub fn resolve_divisorial(p: &BranchParam, extra_steps: usize) -> Result<Resolution, ResolutionError> {
    let p = normalize(p)?;
    if p.has_generic() {
        return case_iii_reduce(&p);
    }
    let target_dim = field_of_definition(&p)?.dim();
    let start = p.plane_param()?;
    let policy = Policy::CaseI { target_dim, extra: extra_steps };
    with_precision(2 * p.degree() + 8, |w| run(&start, &p, &policy, w))
}

/// Blow up until the center on the current component becomes generic; the result carries
/// n, the contact of the strict transform with that component.
pub fn case_iii_reduce(p: &BranchParam) -> Result<Resolution, ResolutionError> {
    let p = normalize(p)?;
    let start = p.plane_param_generic();
    with_precision(2 * p.degree() + 8, |w| run(&start, &p, &Policy::CaseIII, w))
}
