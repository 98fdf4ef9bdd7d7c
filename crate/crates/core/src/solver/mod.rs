//! Exhaustive search for the strong edge geodetic number of small graphs.
//!
//! A vertex set is tested by covering edges one at a time: the uncovered edge with the fewest
//! remaining `(pair, geodesic)` options is branched on, and the branch dies as soon as some
//! edge has none. Sizes are tried in increasing order; within a size, subsets are tried in
//! lexicographic order, one per orbit of the supplied symmetry group.

mod search;

use std::time::Duration;

use serde::Serialize;

use crate::certificate::{Certificate, Cover};
use crate::error::SolveError;
use crate::formulas;
use crate::graph::{grid_graph, Graph};
use crate::grid::{GridSpec, Vertex};
use search::{Control, Problem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_geodesics_per_pair: usize,
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_geodesics_per_pair: 1 << 16,
            max_nodes: 1 << 40,
            time_limit: Duration::from_secs(600),
        }
    }
}

impl SearchBudget {
    fn validate(&self) -> Result<(), SolveError> {
        if self.max_geodesics_per_pair == 0 {
            return Err(SolveError::InvalidBudget("max_geodesics_per_pair"));
        }
        if self.max_nodes == 0 {
            return Err(SolveError::InvalidBudget("max_nodes"));
        }
        if self.time_limit.is_zero() {
            return Err(SolveError::InvalidBudget("time_limit"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub subsets: u64,
    pub elapsed_ms: u128,
}

impl SearchStats {
    fn of(ctl: &Control) -> Self {
        SearchStats {
            nodes: ctl.nodes(),
            subsets: ctl.subsets(),
            elapsed_ms: ctl.elapsed().as_millis(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    pub witness: Cover,
    /// Largest size for which no strong edge geodetic set exists, as established by this
    /// search. Equals `value - 1` after a complete run.
    pub infeasibility_checked_at: Option<usize>,
    pub stats: SearchStats,
}

fn check_graph(g: &Graph) -> Result<(), SolveError> {
    if g.size() == 0 || !g.is_connected() {
        return Err(SolveError::Degenerate);
    }
    if g.size() > 128 {
        return Err(SolveError::TooManyEdges(g.size()));
    }
    Ok(())
}

fn inconclusive(
    reason: crate::error::Exhausted,
    proven: Option<usize>,
    best: Option<usize>,
) -> SolveError {
    SolveError::Inconclusive {
        reason,
        proven_infeasible: proven,
        best_found: best,
    }
}

/// Finds geodesics between pairs of `set` that together cover every edge of `g`, or proves
/// that none exist.
pub fn feasible_cover(
    g: &Graph,
    set: &[usize],
    budget: &SearchBudget,
) -> Result<Option<Cover>, SolveError> {
    budget.validate()?;
    if let Some(&v) = set.iter().find(|&&v| !g.contains(v)) {
        return Err(SolveError::NoSuchVertex(v));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() < 2 {
        return Err(SolveError::SetTooSmall(sorted.len()));
    }
    check_graph(g)?;
    let problem = Problem::new(g, budget);
    let ctl = Control::new(budget);
    match problem.cover(&sorted, &ctl) {
        Ok(Some(chosen)) => Ok(Some(problem.to_cover(&sorted, &chosen))),
        Ok(None) => Ok(None),
        Err(e) => Err(inconclusive(e, None, None)),
    }
}

/// Smallest size of a strong edge geodetic set of `g`, searched in `[lower_hint, upper_hint]`
/// and always backed by an exhaustive proof one size below the answer.
pub fn exact_sge(
    g: &Graph,
    lower_hint: Option<usize>,
    upper_hint: Option<usize>,
    budget: &SearchBudget,
) -> Result<ExactResult, SolveError> {
    exact_with_symmetries(g, &[], lower_hint, upper_hint, budget)
}

pub(crate) fn exact_with_symmetries(
    g: &Graph,
    symmetries: &[Vec<usize>],
    lower_hint: Option<usize>,
    upper_hint: Option<usize>,
    budget: &SearchBudget,
) -> Result<ExactResult, SolveError> {
    budget.validate()?;
    check_graph(g)?;
    let problem = Problem::new(g, budget);
    let ctl = Control::new(budget);
    let upper = upper_hint.unwrap_or(g.order()).min(g.order());
    let start = lower_hint.unwrap_or(2).clamp(2, upper.max(2));
    // A single vertex has no pairs, so size 1 never covers an edge.
    let mut proven = if start == 2 { Some(1) } else { None };

    let mut found = None;
    for s in start..=upper {
        match problem.first_feasible(s, symmetries, &ctl) {
            Ok(Some(cover)) => {
                found = Some((s, cover));
                break;
            }
            Ok(None) => proven = Some(s),
            Err(e) => return Err(inconclusive(e, proven, None)),
        }
    }
    let Some((mut value, mut witness)) = found else {
        return Err(SolveError::UpperHintTooSmall(upper));
    };
    while proven != Some(value - 1) {
        match problem.first_feasible(value - 1, symmetries, &ctl) {
            Ok(Some(cover)) => {
                value -= 1;
                witness = cover;
                if value == 2 {
                    proven = Some(1);
                }
            }
            Ok(None) => proven = Some(value - 1),
            Err(e) => return Err(inconclusive(e, proven, Some(value))),
        }
    }
    Ok(ExactResult {
        value,
        witness,
        infeasibility_checked_at: proven,
        stats: SearchStats::of(&ctl),
    })
}

/// Vertex permutations of `P_n □ P_m` (as ids) generated by the two reflections, plus the
/// transpose when the grid is square. The identity comes first.
pub fn grid_automorphisms(spec: GridSpec) -> Vec<Vec<usize>> {
    let (n, m) = (spec.n(), spec.m());
    let mut maps: Vec<Box<dyn Fn(Vertex) -> Vertex>> = vec![
        Box::new(|v| v),
        Box::new(move |v: Vertex| Vertex::new(n + 1 - v.x, v.y)),
        Box::new(move |v: Vertex| Vertex::new(v.x, m + 1 - v.y)),
        Box::new(move |v: Vertex| Vertex::new(n + 1 - v.x, m + 1 - v.y)),
    ];
    if n == m {
        maps.push(Box::new(|v: Vertex| v.transposed()));
        maps.push(Box::new(move |v: Vertex| Vertex::new(n + 1 - v.y, v.x)));
        maps.push(Box::new(move |v: Vertex| Vertex::new(v.y, n + 1 - v.x)));
        maps.push(Box::new(move |v: Vertex| Vertex::new(n + 1 - v.y, n + 1 - v.x)));
    }
    maps.iter()
        .map(|f| spec.vertices().map(|v| spec.vertex_id(f(v))).collect())
        .collect()
}

/// [`exact_sge`] on a grid, using its symmetries and the closed-form bounds as hints.
/// The witness is returned as a grid certificate.
pub fn exact_sge_grid(
    n: usize,
    m: usize,
    budget: &SearchBudget,
) -> Result<(ExactResult, Certificate), SolveError> {
    let spec = GridSpec::new(n, m)?;
    let g = grid_graph(spec);
    let lower = if n >= 2 && m >= 2 {
        formulas::convex_cut_lower_bound(n as u64, m as u64).ok().map(|v| v as usize)
    } else {
        None
    };
    let result = exact_with_symmetries(&g, &grid_automorphisms(spec), lower, None, budget)?;
    let certificate = result.witness.to_certificate(spec);
    Ok((result, certificate))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    ProvenInfeasible,
    FeasibleWitness(Certificate),
    Inconclusive(crate::error::Exhausted),
}

/// Exhaustively decides whether `P_n □ P_m` has a strong edge geodetic set of exactly
/// `size` vertices.
pub fn nonexistence_check(
    n: usize,
    m: usize,
    size: usize,
    budget: &SearchBudget,
) -> Result<Verdict, SolveError> {
    budget.validate()?;
    let spec = GridSpec::new(n, m)?;
    let g = grid_graph(spec);
    check_graph(&g)?;
    if size < 2 {
        return Ok(Verdict::ProvenInfeasible);
    }
    let problem = Problem::new(&g, budget);
    let ctl = Control::new(budget);
    Ok(
        match problem.first_feasible(size, &grid_automorphisms(spec), &ctl) {
            Ok(Some(cover)) => Verdict::FeasibleWitness(cover.to_certificate(spec)),
            Ok(None) => Verdict::ProvenInfeasible,
            Err(e) => Verdict::Inconclusive(e),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify, verify_cover};
    use crate::error::Exhausted;

    fn cycle4() -> Graph {
        grid_graph(GridSpec::new(2, 2).unwrap())
    }

    #[test]
    fn four_cycle_with_three_vertices() {
        let g = cycle4();
        let cover = feasible_cover(&g, &[0, 1, 2], &SearchBudget::default())
            .unwrap()
            .expect("feasible");
        assert!(verify_cover(&g, &cover).valid);
    }

    #[test]
    fn four_cycle_pairs_fail() {
        let g = cycle4();
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(feasible_cover(&g, &[a, b], &SearchBudget::default()), Ok(None));
            }
        }
    }

    #[test]
    fn whole_path_graph() {
        let g = Graph::path(6);
        let all: Vec<usize> = (0..6).collect();
        assert!(feasible_cover(&g, &all, &SearchBudget::default()).unwrap().is_some());
    }

    #[test]
    fn small_exact_values() {
        let (r, c) = exact_sge_grid(2, 2, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.infeasibility_checked_at, Some(2));
        assert!(verify(&c).valid);
        let (r, c) = exact_sge_grid(4, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.infeasibility_checked_at, Some(4));
        assert!(verify(&c).valid);
    }

    #[test]
    fn generic_graph_without_hints() {
        let r = exact_sge(&Graph::path(5), None, None, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.infeasibility_checked_at, Some(1));
    }

    #[test]
    fn hint_above_answer_is_walked_back() {
        let g = grid_graph(GridSpec::new(3, 2).unwrap());
        let r = exact_sge(&g, Some(5), None, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.infeasibility_checked_at, Some(3));
    }

    #[test]
    fn tiny_node_budget_is_inconclusive() {
        let budget = SearchBudget {
            max_nodes: 3,
            ..SearchBudget::default()
        };
        let err = exact_sge_grid(4, 4, &budget).unwrap_err();
        assert!(matches!(
            err,
            SolveError::Inconclusive {
                reason: Exhausted::Nodes,
                ..
            }
        ));
    }

    #[test]
    fn automorphisms_are_permutations() {
        for (n, m, count) in [(3, 2, 4), (3, 3, 8), (4, 4, 8)] {
            let spec = GridSpec::new(n, m).unwrap();
            let syms = grid_automorphisms(spec);
            assert_eq!(syms.len(), count);
            let g = grid_graph(spec);
            for s in &syms {
                let mut sorted = s.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..n * m).collect::<Vec<_>>());
                for &(a, b) in g.edges() {
                    assert!(g.edge_id(s[a], s[b]).is_some());
                }
            }
        }
    }

    #[test]
    fn nonexistence_examples() {
        let b = SearchBudget::default();
        assert_eq!(nonexistence_check(4, 3, 4, &b), Ok(Verdict::ProvenInfeasible));
        assert_eq!(nonexistence_check(3, 4, 4, &b), Ok(Verdict::ProvenInfeasible));
        match nonexistence_check(4, 2, 4, &b).unwrap() {
            Verdict::FeasibleWitness(c) => assert!(verify(&c).valid),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let b = SearchBudget::default();
        assert_eq!(feasible_cover(&cycle4(), &[0], &b), Err(SolveError::SetTooSmall(1)));
        assert_eq!(feasible_cover(&cycle4(), &[0, 9], &b), Err(SolveError::NoSuchVertex(9)));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(exact_sge(&disconnected, None, None, &b), Err(SolveError::Degenerate));
        let zero = SearchBudget {
            max_nodes: 0,
            ..b
        };
        assert!(matches!(exact_sge(&cycle4(), None, None, &zero), Err(SolveError::InvalidBudget(_))));
    }
}
