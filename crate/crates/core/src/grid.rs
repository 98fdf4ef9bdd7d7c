//! Grid graphs `P_n □ P_m` with 1-based `(column, row)` coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GridError;

/// Dimensions of a grid: `n` columns and `m` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGridSpec", into = "RawGridSpec")]
pub struct GridSpec {
    n: usize,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct RawGridSpec {
    n: usize,
    m: usize,
}

impl TryFrom<RawGridSpec> for GridSpec {
    type Error = GridError;

    fn try_from(raw: RawGridSpec) -> Result<Self, Self::Error> {
        GridSpec::new(raw.n, raw.m)
    }
}

impl From<GridSpec> for RawGridSpec {
    fn from(spec: GridSpec) -> Self {
        RawGridSpec { n: spec.n, m: spec.m }
    }
}

impl GridSpec {
    pub fn new(n: usize, m: usize) -> Result<Self, GridError> {
        if n == 0 || m == 0 {
            return Err(GridError::ZeroDimension { n, m });
        }
        Ok(GridSpec { n, m })
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.m
    }

    pub fn horizontal_edge_count(&self) -> usize {
        self.m * (self.n - 1)
    }

    pub fn vertical_edge_count(&self) -> usize {
        self.n * (self.m - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.horizontal_edge_count() + self.vertical_edge_count()
    }

    /// The same grid with rows and columns exchanged.
    pub fn transposed(&self) -> GridSpec {
        GridSpec { n: self.m, m: self.n }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v.x) && (1..=self.m).contains(&v.y)
    }

    /// Row-major id, `(1,1)` is 0.
    pub fn vertex_id(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v));
        (v.y - 1) * self.n + (v.x - 1)
    }

    pub fn vertex_at(&self, id: usize) -> Vertex {
        Vertex::new(id % self.n + 1, id / self.n + 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(|id| self.vertex_at(id))
    }

    /// Corners in the order `(1,1), (1,m), (n,1), (n,m)`.
    pub fn corners(&self) -> [Vertex; 4] {
        [
            Vertex::new(1, 1),
            Vertex::new(1, self.m),
            Vertex::new(self.n, 1),
            Vertex::new(self.n, self.m),
        ]
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && u.manhattan(v) == 1
    }

    /// Dense edge index: horizontal edges row by row, then vertical edges.
    pub fn edge_id(&self, e: Edge) -> usize {
        let Edge { u, v } = e;
        if u.y == v.y {
            (u.y - 1) * (self.n - 1) + (u.x - 1)
        } else {
            self.horizontal_edge_count() + (u.y - 1) * self.n + (u.x - 1)
        }
    }

    pub fn edge_at(&self, id: usize) -> Edge {
        let h = self.horizontal_edge_count();
        if id < h {
            let (y, x) = (id / (self.n - 1) + 1, id % (self.n - 1) + 1);
            Edge::new_unchecked(Vertex::new(x, y), Vertex::new(x + 1, y))
        } else {
            let id = id - h;
            let (y, x) = (id / self.n + 1, id % self.n + 1);
            Edge::new_unchecked(Vertex::new(x, y), Vertex::new(x, y + 1))
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count()).map(|id| self.edge_at(id))
    }

    /// Vertical edges `(i,y)(i,y+1)` of column `i`, bottom to top.
    pub fn column_edges(&self, i: usize) -> Vec<Edge> {
        if i == 0 || i > self.n {
            return Vec::new();
        }
        (1..self.m)
            .map(|y| Edge::new_unchecked(Vertex::new(i, y), Vertex::new(i, y + 1)))
            .collect()
    }

    /// Grid distance, `|Δx| + |Δy|`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        u.manhattan(v)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P_{} x P_{}", self.n, self.m)
    }
}

/// A grid vertex; `x` is the column, `y` the row. Ordering is lexicographic by `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub const fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }

    pub fn manhattan(self, other: Vertex) -> usize {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }

    pub fn transposed(self) -> Vertex {
        Vertex::new(self.y, self.x)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An undirected grid edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Canonicalizes the endpoint order. Fails unless the endpoints are grid neighbours.
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, GridError> {
        if a.manhattan(b) != 1 {
            return Err(GridError::NotAdjacent(a, b));
        }
        Ok(Self::new_unchecked(a, b))
    }

    pub(crate) fn new_unchecked(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn is_vertical(&self) -> bool {
        self.u.x == self.v.x
    }

    pub fn is_horizontal(&self) -> bool {
        self.u.y == self.v.y
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u, self.v)
    }
}

/// An ordered vertex sequence. Validity (adjacency, no repeats) is checked by the verifier,
/// not on construction, so that defective certificates can still be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// Edges between consecutive grid-adjacent vertices. Non-adjacent steps are skipped.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices
            .windows(2)
            .filter_map(|w| Edge::new(w[0], w[1]).ok())
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Path {
        Path::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

fn walk_row(out: &mut Vec<Vertex>, y: usize, from_x: usize, to_x: usize) {
    let last = *out.last().expect("walk starts from a vertex");
    debug_assert_eq!(last, Vertex::new(from_x, y));
    if from_x < to_x {
        out.extend((from_x + 1..=to_x).map(|x| Vertex::new(x, y)));
    } else {
        out.extend((to_x..from_x).rev().map(|x| Vertex::new(x, y)));
    }
}

fn walk_column(out: &mut Vec<Vertex>, x: usize, from_y: usize, to_y: usize) {
    let last = *out.last().expect("walk starts from a vertex");
    debug_assert_eq!(last, Vertex::new(x, from_y));
    if from_y < to_y {
        out.extend((from_y + 1..=to_y).map(|y| Vertex::new(x, y)));
    } else {
        out.extend((to_y..from_y).rev().map(|y| Vertex::new(x, y)));
    }
}

fn between(a: usize, b: usize, t: usize) -> bool {
    a.min(b) <= t && t <= a.max(b)
}

/// Geodesic that runs along the row of `from` to `turn_column`, along that column to the row
/// of `to`, then along the row of `to`.
///
/// When `from` and `to` lie in rows 1 and `m`, the path contains every vertical edge of
/// `turn_column`.
pub fn staircase_geodesic(
    spec: GridSpec,
    from: Vertex,
    to: Vertex,
    turn_column: usize,
) -> Result<Path, GridError> {
    for v in [from, to] {
        if !spec.contains(v) {
            return Err(GridError::OutOfBounds { vertex: v, spec });
        }
    }
    if !between(from.x, to.x, turn_column) {
        return Err(GridError::TurnOutsideSpan {
            turn: turn_column,
            from,
            to,
        });
    }
    let mut out = vec![from];
    walk_row(&mut out, from.y, from.x, turn_column);
    walk_column(&mut out, turn_column, from.y, to.y);
    walk_row(&mut out, to.y, turn_column, to.x);
    Ok(Path::new(out))
}

/// Transposed counterpart of [`staircase_geodesic`]: along the column of `from` to
/// `turn_row`, along that row to the column of `to`, then along the column of `to`.
pub fn row_geodesic(
    spec: GridSpec,
    from: Vertex,
    to: Vertex,
    turn_row: usize,
) -> Result<Path, GridError> {
    for v in [from, to] {
        if !spec.contains(v) {
            return Err(GridError::OutOfBounds { vertex: v, spec });
        }
    }
    if !between(from.y, to.y, turn_row) {
        return Err(GridError::TurnOutsideSpan {
            turn: turn_row,
            from,
            to,
        });
    }
    let mut out = vec![from];
    walk_column(&mut out, from.x, from.y, turn_row);
    walk_row(&mut out, turn_row, from.x, to.x);
    walk_column(&mut out, to.x, turn_row, to.y);
    Ok(Path::new(out))
}
