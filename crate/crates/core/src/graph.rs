//! Simple undirected graphs on integer vertex ids, used by the exact solver.

use std::collections::{HashMap, VecDeque};

use crate::error::{GraphError, GridError};
use crate::grid::GridSpec;

/// A geodesic as a sequence of vertex ids.
pub type IdPath = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph on `order` vertices. Edge ids follow the input order.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); order];
        let mut canonical = Vec::with_capacity(edges.len());
        let mut edge_index = HashMap::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(GraphError::NoSuchVertex(v));
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let key = (a.min(b), a.max(b));
            if edge_index.insert(key, canonical.len()).is_some() {
                return Err(GraphError::MultiEdge(key.0, key.1));
            }
            canonical.push(key);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: canonical,
            edge_index,
        })
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Self::from_edges(order, &edges).expect("path edges are simple")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let order = self.order();
        let mut rows = Vec::with_capacity(order);
        for v in 0..order {
            rows.push(self.bfs(v));
        }
        DistanceMatrix { order, rows }
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    order: usize,
    rows: Vec<Vec<Option<usize>>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.rows[u][v]
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// `P_n □ P_m` with row-major ids from `(1,1)`. Edge ids match [`GridSpec::edge_id`].
pub fn grid_graph(spec: GridSpec) -> Graph {
    let edges: Vec<(usize, usize)> = spec
        .edges()
        .map(|e| (spec.vertex_id(e.u()), spec.vertex_id(e.v())))
        .collect();
    Graph::from_edges(spec.vertex_count(), &edges).expect("grid edges are simple")
}

/// Convenience wrapper that validates the dimensions first.
pub fn grid_graph_checked(n: usize, m: usize) -> Result<Graph, GridError> {
    Ok(grid_graph(GridSpec::new(n, m)?))
}

/// Shortest-path length between `u` and `v`.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<usize, GraphError> {
    for w in [u, v] {
        if !g.contains(w) {
            return Err(GraphError::NoSuchVertex(w));
        }
    }
    g.bfs(u)[v].ok_or(GraphError::Unreachable(u, v))
}

/// Lazily walks all `u,v`-geodesics in lexicographic order of their id sequences.
pub struct Geodesics<'g> {
    graph: &'g Graph,
    to_target: Vec<Option<usize>>,
    target: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
    done: bool,
}

impl<'g> Geodesics<'g> {
    pub fn new(graph: &'g Graph, u: usize, v: usize) -> Result<Self, GraphError> {
        for w in [u, v] {
            if !graph.contains(w) {
                return Err(GraphError::NoSuchVertex(w));
            }
        }
        let to_target = graph.bfs(v);
        if to_target[u].is_none() {
            return Err(GraphError::Unreachable(u, v));
        }
        Ok(Geodesics {
            graph,
            to_target,
            target: v,
            path: vec![u],
            cursor: vec![0],
            done: false,
        })
    }

    fn descends(&self, from: usize, to: usize) -> bool {
        matches!((self.to_target[from], self.to_target[to]), (Some(a), Some(b)) if b + 1 == a)
    }
}

impl Iterator for Geodesics<'_> {
    type Item = IdPath;

    fn next(&mut self) -> Option<IdPath> {
        if self.done {
            return None;
        }
        loop {
            let top = *self.path.last()?;
            if top == self.target {
                let found = self.path.clone();
                self.path.pop();
                self.cursor.pop();
                if self.path.is_empty() {
                    self.done = true;
                }
                return Some(found);
            }
            let neighbors = self.graph.neighbors(top);
            let depth = self.cursor.len() - 1;
            let mut advanced = false;
            while self.cursor[depth] < neighbors.len() {
                let w = neighbors[self.cursor[depth]];
                self.cursor[depth] += 1;
                if self.descends(top, w) {
                    self.path.push(w);
                    self.cursor.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.path.pop();
                self.cursor.pop();
                if self.path.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// All `u,v`-geodesics, or an error if there are more than `limit` of them.
pub fn enumerate_geodesics(
    g: &Graph,
    u: usize,
    v: usize,
    limit: Option<usize>,
) -> Result<Vec<IdPath>, GraphError> {
    if u == v {
        return Err(GraphError::SameEndpoints(u));
    }
    let mut out = Vec::new();
    for path in Geodesics::new(g, u, v)? {
        if let Some(limit) = limit {
            if out.len() == limit {
                return Err(GraphError::TooManyGeodesics { u, v, limit });
            }
        }
        out.push(path);
    }
    Ok(out)
}
