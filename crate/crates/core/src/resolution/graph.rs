use super::process::Splitting;
use super::ResolutionError;
use crate::linalg::{inverse, Q};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Initial,
    DeadEnd(usize),
    Rupture(usize),
    Splitting(usize),
    Plain,
    Delta,
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::Initial => write!(f, "INITIAL"),
            VertexKind::DeadEnd(i) => write!(f, "DEAD_END({i})"),
            VertexKind::Rupture(i) => write!(f, "RUPTURE({i})"),
            VertexKind::Splitting(j) => write!(f, "SPLITTING({j})"),
            VertexKind::Plain => write!(f, "PLAIN"),
            VertexKind::Delta => write!(f, "DELTA"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    I,
    III,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub kinds: BTreeSet<VertexKind>,
    pub self_int: i64,
    pub field_dim: usize,
}

/// Dual graph of the quotient resolution. Vertex k is the component created by the k-th blow-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    pub geodesic: Vec<usize>,
    pub case: CaseTag,
    pub n_case3: Option<usize>,
}

impl QuotientGraph {
    pub(crate) fn build(
        self_int: &[i64],
        edges: &BTreeSet<(usize, usize)>,
        field_dims: &[usize],
        splitting: &[Splitting],
        delta: usize,
        case: CaseTag,
        n_case3: Option<usize>,
    ) -> Self {
        let n = self_int.len();
        let mut g = QuotientGraph {
            vertices: (0..n)
                .map(|id| Vertex { id, kinds: BTreeSet::new(), self_int: self_int[id], field_dim: field_dims[id] })
                .collect(),
            edges: edges.iter().copied().collect(),
            geodesic: Vec::new(),
            case,
            n_case3,
        };
        g.geodesic = g.path(0, delta);
        let on_geo: BTreeSet<usize> = g.geodesic.iter().copied().collect();
        let pos = |v: usize| g.geodesic.iter().position(|&x| x == v).expect("vertex on geodesic");
        let mut ends: Vec<(usize, usize, usize)> = Vec::new();
        for v in 0..n {
            if v != 0 && !on_geo.contains(&v) && g.neighbors(v).len() == 1 {
                let foot = g.foot(v, &on_geo);
                ends.push((pos(foot), v, foot));
            }
        }
        ends.sort();
        let tag = |g: &mut QuotientGraph, v: usize, k: VertexKind| {
            g.vertices[v].kinds.insert(k);
        };
        tag(&mut g, 0, VertexKind::Initial);
        tag(&mut g, 0, VertexKind::DeadEnd(0));
        for (i, &(_, leaf, foot)) in ends.iter().enumerate() {
            tag(&mut g, leaf, VertexKind::DeadEnd(i + 1));
            tag(&mut g, foot, VertexKind::Rupture(i + 1));
        }
        for (j, s) in splitting.iter().enumerate() {
            tag(&mut g, s.vertex, VertexKind::Splitting(j + 1));
        }
        tag(&mut g, delta, VertexKind::Delta);
        for v in g.vertices.iter_mut() {
            if v.kinds.is_empty() {
                v.kinds.insert(VertexKind::Plain);
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    }

    /// Geodesic vertex closest to `v`.
    fn foot(&self, v: usize, geo: &BTreeSet<usize>) -> usize {
        let mut seen = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if geo.contains(&x) {
                return x;
            }
            for u in self.neighbors(x) {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        unreachable!("graph is connected")
    }

    fn with_kind(&self, pick: impl Fn(&VertexKind) -> Option<usize>) -> Vec<usize> {
        let mut found: Vec<(usize, usize)> = self
            .vertices
            .iter()
            .flat_map(|v| v.kinds.iter().filter_map(&pick).map(move |i| (i, v.id)))
            .collect();
        found.sort();
        found.into_iter().map(|(_, v)| v).collect()
    }

    /// σ₀, σ₁, …, σ_g.
    pub fn dead_ends(&self) -> Vec<usize> {
        self.with_kind(|k| match k {
            VertexKind::DeadEnd(i) => Some(*i),
            _ => None,
        })
    }

    /// τ₁, …, τ_g.
    pub fn ruptures(&self) -> Vec<usize> {
        self.with_kind(|k| match k {
            VertexKind::Rupture(i) => Some(*i),
            _ => None,
        })
    }

    /// ρ₁, …, ρ_s.
    pub fn splitting_vertices(&self) -> Vec<usize> {
        self.with_kind(|k| match k {
            VertexKind::Splitting(j) => Some(*j),
            _ => None,
        })
    }

    pub fn delta(&self) -> usize {
        *self.geodesic.last().expect("nonempty graph")
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.len() && self.path_exists_to_all()
    }

    fn path_exists_to_all(&self) -> bool {
        let mut seen = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == self.len()
    }
}

/// Self-intersections on the diagonal, 1 for intersecting components.
pub fn intersection_matrix(g: &QuotientGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut e = vec![vec![0i64; n]; n];
    for v in &g.vertices {
        e[v.id][v.id] = v.self_int;
    }
    for &(a, b) in &g.edges {
        e[a][b] = 1;
        e[b][a] = 1;
    }
    e
}

/// −E⁻¹, whose entries are the intersection numbers of curvettes.
pub fn minus_inverse(e: &[Vec<i64>]) -> Result<Vec<Vec<Q>>, ResolutionError> {
    let m: Vec<Vec<Q>> = e.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
    let inv = inverse(&m).ok_or(ResolutionError::SingularMatrix)?;
    Ok(inv.into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect())
}
