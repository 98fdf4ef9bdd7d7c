//! Constructive strong edge geodetic sets on grids.
//!
//! Every builder works on a [`Draft`]: a vertex set plus a map from unordered pairs to
//! geodesics, which makes the "one path per pair" rule structural. Column covers are
//! [`staircase_geodesic`]s that turn in the column they cover.

mod alg1;
mod general;
mod rows;

use std::collections::{BTreeMap, BTreeSet};

pub use alg1::{algorithm1, algorithm1_star, algorithm1_with_anchors};
pub use general::{construct_general, construct_general_corners};
pub use rows::{construct_p2, construct_p3, construct_p4};

use crate::certificate::{Assignment, Certificate, Pair};
use crate::error::{FormulaError, GridError};
use crate::formulas;
use crate::grid::{row_geodesic, staircase_geodesic, GridSpec, Path, Vertex};

/// `n = k² + h` with `0 ≤ h ≤ 2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub k: u64,
    pub h: u64,
}

pub fn decompose(n: u64) -> Result<Decomposition, FormulaError> {
    if n == 0 {
        return Err(FormulaError::Zero);
    }
    let k = n.isqrt();
    Ok(Decomposition { k, h: n - k * k })
}

/// Anchor vertices: `a[i-1]` is `a_i` in row 1, `b[i-1]` is `b_i` in the last row, and `c`
/// is the extra vertex some constructions add.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnchorSet {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub c: Option<Vertex>,
}

impl AnchorSet {
    /// 1-based access to `a_i`.
    pub fn a(&self, i: usize) -> Vertex {
        self.a[i - 1]
    }

    /// 1-based access to `b_i`.
    pub fn b(&self, i: usize) -> Vertex {
        self.b[i - 1]
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Draft {
    spec: GridSpec,
    set: BTreeSet<Vertex>,
    paths: BTreeMap<Pair, Path>,
}

impl Draft {
    pub(crate) fn new(spec: GridSpec) -> Self {
        Draft {
            spec,
            set: BTreeSet::new(),
            paths: BTreeMap::new(),
        }
    }

    pub(crate) fn add_vertex(&mut self, v: Vertex) {
        assert!(self.spec.contains(v), "{v} outside {}", self.spec);
        self.set.insert(v);
    }

    /// Drops `v` together with every path that ends at it.
    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        self.set.remove(&v);
        self.paths.retain(|pair, _| !pair.contains(v));
    }

    pub(crate) fn has_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.paths.contains_key(&Pair::new(a, b))
    }

    /// Adds a path for a pair that has none yet.
    pub(crate) fn connect(&mut self, path: Path) {
        let (a, b) = (path.first().unwrap(), path.last().unwrap());
        assert!(a != b, "degenerate pair at {a}");
        assert!(
            self.set.contains(&a) && self.set.contains(&b),
            "pair {a}-{b} not in S"
        );
        let pair = Pair::new(a, b);
        assert!(self.paths.insert(pair, path).is_none(), "pair {pair} used twice");
    }

    /// Swaps the path of a pair that already has one.
    pub(crate) fn reroute(&mut self, path: Path) {
        let pair = Pair::new(path.first().unwrap(), path.last().unwrap());
        assert!(self.paths.insert(pair, path).is_some(), "pair {pair} was unused");
    }

    pub(crate) fn disconnect(&mut self, a: Vertex, b: Vertex) {
        let pair = Pair::new(a, b);
        assert!(self.paths.remove(&pair).is_some(), "pair {pair} was unused");
    }

    fn staircase(&self, a: Vertex, b: Vertex, column: usize) -> Path {
        staircase_geodesic(self.spec, a, b, column)
            .unwrap_or_else(|e| panic!("column {column} not reachable from {a}-{b}: {e}"))
    }

    pub(crate) fn cover_column(&mut self, a: Vertex, b: Vertex, column: usize) {
        let p = self.staircase(a, b, column);
        self.connect(p);
    }

    pub(crate) fn recover_column(&mut self, a: Vertex, b: Vertex, column: usize) {
        let p = self.staircase(a, b, column);
        self.reroute(p);
    }

    pub(crate) fn through_row(&self, a: Vertex, b: Vertex, row: usize) -> Path {
        row_geodesic(self.spec, a, b, row)
            .unwrap_or_else(|e| panic!("row {row} not reachable from {a}-{b}: {e}"))
    }

    /// Straight segment between two vertices of the same row or column.
    pub(crate) fn connect_straight(&mut self, a: Vertex, b: Vertex) {
        debug_assert!(a.x == b.x || a.y == b.y);
        let p = self.staircase(a, b, a.x);
        self.connect(p);
    }

    /// Adds all vertices and paths of `other`, which must live on the same grid after
    /// `embed` and share no pair with `self`.
    pub(crate) fn absorb(&mut self, other: Draft, embed: impl Fn(Vertex) -> Vertex) {
        for v in other.set {
            self.add_vertex(embed(v));
        }
        for (_, path) in other.paths {
            self.connect(path.map(&embed));
        }
    }

    pub(crate) fn into_certificate(self) -> Certificate {
        Certificate {
            spec: self.spec,
            set: self.set,
            assignments: self
                .paths
                .into_iter()
                .map(|(pair, path)| Assignment { pair, path })
                .collect(),
        }
    }
}

/// Builder selection for [`construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Optimal builder when a side is at most 4, else the better general bound.
    Auto,
    /// Vertical edges only.
    Alg1,
    /// Vertical edges only, all four corners in `S`.
    Alg1Star,
    P2,
    P3,
    P4,
    /// Outer rows plus a rotated cover of the inner band.
    General,
    /// Corner-sharing vertical and horizontal passes.
    Corners,
}

fn need_rows(n: usize, m: usize, rows: usize) -> Result<(), GridError> {
    if m != rows {
        return Err(GridError::Unsupported {
            n,
            m,
            reason: "this builder needs a fixed number of rows",
        });
    }
    Ok(())
}

/// Runs the selected builder on `P_n □ P_m`.
pub fn construct(method: Method, n: usize, m: usize) -> Result<Certificate, GridError> {
    match method {
        Method::Alg1 => algorithm1(n, m),
        Method::Alg1Star => algorithm1_star(n, m),
        Method::P2 => need_rows(n, m, 2).and_then(|_| construct_p2(n)),
        Method::P3 => need_rows(n, m, 3).and_then(|_| construct_p3(n)),
        Method::P4 => need_rows(n, m, 4).and_then(|_| construct_p4(n)),
        Method::General => construct_general(n, m),
        Method::Corners => construct_general_corners(n, m),
        Method::Auto => construct_auto(n, m),
    }
}

fn exact_builder(n: usize, rows: usize) -> Result<Certificate, GridError> {
    match rows {
        2 => construct_p2(n),
        3 => construct_p3(n),
        _ => construct_p4(n),
    }
}

fn construct_auto(n: usize, m: usize) -> Result<Certificate, GridError> {
    if n < 2 || m < 2 {
        return Err(GridError::Unsupported {
            n,
            m,
            reason: "both sides must be at least 2",
        });
    }
    if m <= 4 {
        return exact_builder(n, m);
    }
    if n <= 4 {
        return Ok(exact_builder(m, n)?.transposed());
    }
    let (_, source, transposed) =
        formulas::best_general_upper(n as u64, m as u64).expect("dimensions are valid");
    let (a, b) = if transposed { (m, n) } else { (n, m) };
    let c = match source {
        formulas::UpperSource::CornerSharing => construct_general_corners(a, b)?,
        _ => construct_general(a, b)?,
    };
    Ok(if transposed { c.transposed() } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        assert_eq!(decompose(20), Ok(Decomposition { k: 4, h: 4 }));
        assert_eq!(decompose(24), Ok(Decomposition { k: 4, h: 8 }));
        assert_eq!(decompose(9), Ok(Decomposition { k: 3, h: 0 }));
        assert_eq!(decompose(0), Err(FormulaError::Zero));
    }

    #[test]
    fn decomposition_range() {
        for n in 1..5000u64 {
            let d = decompose(n).unwrap();
            assert_eq!(d.k * d.k + d.h, n);
            assert!(d.h <= 2 * d.k);
        }
    }
}
