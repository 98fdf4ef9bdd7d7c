use std::collections::{BTreeSet, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use super::{Certificate, Cover, Pair};
use crate::error::PathError;
use crate::graph::{DistanceMatrix, Graph};
use crate::grid::{Edge, GridSpec, Path, Vertex};

/// What the verifier needs from a host graph. Distances must be O(1) to keep
/// verification linear in the total path length.
pub trait Host {
    type V: Copy + Ord + Hash + Debug;

    fn contains(&self, v: Self::V) -> bool;
    fn edge_id(&self, a: Self::V, b: Self::V) -> Option<usize>;
    fn edge_count(&self) -> usize;
    fn distance(&self, a: Self::V, b: Self::V) -> Option<usize>;
}

impl Host for GridSpec {
    type V = Vertex;

    fn contains(&self, v: Vertex) -> bool {
        GridSpec::contains(self, v)
    }

    fn edge_id(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if self.is_edge(a, b) {
            Some(GridSpec::edge_id(self, Edge::new_unchecked(a, b)))
        } else {
            None
        }
    }

    fn edge_count(&self) -> usize {
        GridSpec::edge_count(self)
    }

    fn distance(&self, a: Vertex, b: Vertex) -> Option<usize> {
        Some(a.manhattan(b))
    }
}

/// A [`Graph`] together with its all-pairs distances.
pub struct GraphHost<'g> {
    pub graph: &'g Graph,
    pub distances: DistanceMatrix,
}

impl<'g> GraphHost<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        GraphHost {
            graph,
            distances: graph.distance_matrix(),
        }
    }
}

impl Host for GraphHost<'_> {
    type V = usize;

    fn contains(&self, v: usize) -> bool {
        self.graph.contains(v)
    }

    fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.graph.edge_id(a, b)
    }

    fn edge_count(&self) -> usize {
        self.graph.size()
    }

    fn distance(&self, a: usize, b: usize) -> Option<usize> {
        self.distances.get(a, b)
    }
}

/// Path validity: `Err` for an empty path, a vertex outside the host or a repeated vertex;
/// `Ok(false)` when consecutive vertices are not adjacent or the path is longer than the
/// distance between its ends.
pub fn path_is_geodesic<H: Host>(host: &H, path: &[H::V]) -> Result<bool, PathError> {
    let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
        return Err(PathError::Empty);
    };
    if let Some(v) = path.iter().find(|&&v| !host.contains(v)) {
        return Err(PathError::OutOfBounds(format!("{v:?}")));
    }
    let adjacent = path.windows(2).all(|w| host.edge_id(w[0], w[1]).is_some());
    // A walk as long as the distance between its ends cannot revisit a vertex.
    if adjacent && host.distance(first, last) == Some(path.len() - 1) {
        return Ok(true);
    }
    let mut seen = HashSet::with_capacity(path.len());
    if let Some(v) = path.iter().find(|&&v| !seen.insert(v)) {
        return Err(PathError::RepeatedVertex(format!("{v:?}")));
    }
    Ok(false)
}

/// Grid form of [`path_is_geodesic`].
pub fn is_geodesic(spec: GridSpec, path: &Path) -> Result<bool, PathError> {
    path_is_geodesic(&spec, path.vertices())
}

struct Inspection<V> {
    coverage: Vec<usize>,
    non_geodesic: Vec<usize>,
    foreign: Vec<usize>,
    duplicates: Vec<(V, V)>,
}

impl<V> Inspection<V> {
    fn uncovered(&self) -> impl Iterator<Item = usize> + '_ {
        self.coverage
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(i, _)| i)
    }
}

fn inspect<'a, H, I>(host: &H, set: &BTreeSet<H::V>, assignments: I) -> Inspection<H::V>
where
    H: Host,
    H::V: 'a,
    I: IntoIterator<Item = ((H::V, H::V), &'a [H::V])>,
{
    let mut out = Inspection {
        coverage: vec![0; host.edge_count()],
        non_geodesic: Vec::new(),
        foreign: Vec::new(),
        duplicates: Vec::new(),
    };
    let mut seen_pairs = HashSet::new();
    let mut reported = HashSet::new();
    for (idx, ((a, b), path)) in assignments.into_iter().enumerate() {
        let key = (a.min(b), a.max(b));
        if !seen_pairs.insert(key) && reported.insert(key) {
            out.duplicates.push(key);
        }
        let ends_match = match (path.first(), path.last()) {
            (Some(&s), Some(&t)) => (s.min(t), s.max(t)) == key,
            _ => false,
        };
        if a == b || !set.contains(&a) || !set.contains(&b) || !ends_match {
            out.foreign.push(idx);
        }
        if !matches!(path_is_geodesic(host, path), Ok(true)) {
            out.non_geodesic.push(idx);
        }
        for w in path.windows(2) {
            if host.contains(w[0]) && host.contains(w[1]) {
                if let Some(e) = host.edge_id(w[0], w[1]) {
                    out.coverage[e] += 1;
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyStats {
    pub covered_edges: usize,
    pub total_edges: usize,
    /// Entry `i - 1` is `Σ_P |E_i(P)|`, the number of path/edge incidences on the vertical
    /// edges of column `i`.
    pub column_vertical_coverage: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub uncovered_edges: Vec<Edge>,
    /// Indices into `Certificate::assignments`.
    pub non_geodesic_paths: Vec<usize>,
    pub duplicate_pairs: Vec<Pair>,
    /// Indices of assignments whose pair is not two distinct members of `S`, or whose path
    /// does not join the pair.
    pub foreign_endpoints: Vec<usize>,
    pub stats: VerifyStats,
}

/// Checks a grid certificate against the definition. Defects are collected, not fail-fast.
pub fn verify(c: &Certificate) -> VerifyReport {
    let spec = c.spec;
    let ins = inspect(
        &spec,
        &c.set,
        c.assignments
            .iter()
            .map(|a| ((a.pair.lo(), a.pair.hi()), a.path.vertices())),
    );
    let uncovered_edges: Vec<Edge> = ins.uncovered().map(|id| spec.edge_at(id)).collect();
    let h = spec.horizontal_edge_count();
    let mut column_vertical_coverage = vec![0; spec.n()];
    for (id, &count) in ins.coverage.iter().enumerate().skip(h) {
        column_vertical_coverage[(id - h) % spec.n()] += count;
    }
    let stats = VerifyStats {
        covered_edges: spec.edge_count() - uncovered_edges.len(),
        total_edges: spec.edge_count(),
        column_vertical_coverage,
    };
    let valid = uncovered_edges.is_empty()
        && ins.non_geodesic.is_empty()
        && ins.duplicates.is_empty()
        && ins.foreign.is_empty();
    VerifyReport {
        valid,
        uncovered_edges,
        non_geodesic_paths: ins.non_geodesic,
        duplicate_pairs: ins
            .duplicates
            .into_iter()
            .map(|(a, b)| Pair::new(a, b))
            .collect(),
        foreign_endpoints: ins.foreign,
        stats,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub valid: bool,
    pub uncovered_edges: Vec<usize>,
    pub non_geodesic_paths: Vec<usize>,
    pub duplicate_pairs: Vec<(usize, usize)>,
    pub foreign_endpoints: Vec<usize>,
}

/// [`verify`] for id-based covers on an arbitrary graph.
pub fn verify_cover(g: &Graph, cover: &Cover) -> CoverReport {
    let host = GraphHost::new(g);
    let ins = inspect(
        &host,
        &cover.set,
        cover.paths.iter().map(|p| {
            let ends = match (p.first(), p.last()) {
                (Some(&a), Some(&b)) => (a, b),
                _ => (usize::MAX, usize::MAX),
            };
            (ends, p.as_slice())
        }),
    );
    let uncovered_edges: Vec<usize> = ins.uncovered().collect();
    CoverReport {
        valid: uncovered_edges.is_empty()
            && ins.non_geodesic.is_empty()
            && ins.duplicates.is_empty()
            && ins.foreign.is_empty(),
        uncovered_edges,
        non_geodesic_paths: ins.non_geodesic,
        duplicate_pairs: ins.duplicates,
        foreign_endpoints: ins.foreign,
    }
}

/// `E_i(P)`: the vertical edges of column `i` that lie on `p`.
pub fn column_vertical_edges(p: &Path, i: usize) -> BTreeSet<Edge> {
    p.edges().filter(|e| e.is_vertical() && e.u().x == i).collect()
}

/// `Σ_P |E_i(P)| − (m − 1)` over the certificate's assignments.
pub fn redundancy(c: &Certificate, i: usize) -> i64 {
    let used: usize = c
        .assignments
        .iter()
        .map(|a| column_vertical_edges(&a.path, i).len())
        .sum();
    used as i64 - (c.spec.m() as i64 - 1)
}
