//! Strong edge geodetic certificates: a vertex set plus at most one geodesic per pair.

mod json;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

pub use json::{from_json, to_json};
pub use verify::{
    column_vertical_edges, is_geodesic, redundancy, verify, verify_cover, CoverReport, Host,
    VerifyReport, VerifyStats,
};

use crate::grid::{GridSpec, Path, Vertex};

/// Unordered vertex pair stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: Vertex,
    hi: Vertex,
}

impl Pair {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Pair { lo: a, hi: b }
        } else {
            Pair { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Pair {
        Pair::new(f(self.lo), f(self.hi))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub pair: Pair,
    pub path: Path,
}

impl Assignment {
    /// Pair taken from the path's endpoints.
    pub fn from_path(path: Path) -> Self {
        let pair = Pair::new(
            path.first().expect("non-empty path"),
            path.last().expect("non-empty path"),
        );
        Assignment { pair, path }
    }
}

/// A grid certificate. Fields are public so that defective certificates can be built and
/// diagnosed; [`verify`] decides validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub spec: GridSpec,
    pub set: BTreeSet<Vertex>,
    pub assignments: Vec<Assignment>,
}

impl Certificate {
    pub fn new(spec: GridSpec) -> Self {
        Certificate {
            spec,
            set: BTreeSet::new(),
            assignments: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.assignments.iter().map(|a| a.pair)
    }

    pub fn uses_pair(&self, a: Vertex, b: Vertex) -> bool {
        let p = Pair::new(a, b);
        self.pairs().any(|q| q == p)
    }

    /// Rows and columns exchanged.
    pub fn transposed(&self) -> Certificate {
        Certificate {
            spec: self.spec.transposed(),
            set: self.set.iter().map(|v| v.transposed()).collect(),
            assignments: self
                .assignments
                .iter()
                .map(|a| Assignment {
                    pair: a.pair.map(Vertex::transposed),
                    path: a.path.map(Vertex::transposed),
                })
                .collect(),
        }
    }

    /// Members of `S` in column `x`, as row indices.
    pub fn column_members(&self, x: usize) -> BTreeSet<usize> {
        self.set.iter().filter(|v| v.x == x).map(|v| v.y).collect()
    }
}

/// Id-based certificate on an arbitrary [`Graph`](crate::graph::Graph). Each path's pair is
/// given by its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cover {
    pub set: BTreeSet<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl Cover {
    /// Grid certificate for a cover found on `grid_graph(spec)`.
    pub fn to_certificate(&self, spec: GridSpec) -> Certificate {
        Certificate {
            spec,
            set: self.set.iter().map(|&id| spec.vertex_at(id)).collect(),
            assignments: self
                .paths
                .iter()
                .map(|p| {
                    Assignment::from_path(Path::new(p.iter().map(|&id| spec.vertex_at(id)).collect()))
                })
                .collect(),
        }
    }

    pub fn from_certificate(c: &Certificate) -> Cover {
        let spec = c.spec;
        Cover {
            set: c.set.iter().map(|&v| spec.vertex_id(v)).collect(),
            paths: c
                .assignments
                .iter()
                .map(|a| a.path.vertices().iter().map(|&v| spec.vertex_id(v)).collect())
                .collect(),
        }
    }
}
