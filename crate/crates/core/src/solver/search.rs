use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use super::SearchBudget;
use crate::certificate::Cover;
use crate::error::Exhausted;
use crate::graph::{enumerate_geodesics, Graph};

/// `(u, v, g)`: the `g`-th `u,v`-geodesic.
type Choice = (usize, usize, usize);

const CHUNK: usize = 4096;

/// Shared limits and counters for one solver call.
pub(crate) struct Control {
    nodes: AtomicU64,
    subsets: AtomicU64,
    max_nodes: u64,
    deadline: Instant,
    started: Instant,
    stopped: AtomicBool,
}

impl Control {
    pub fn new(budget: &SearchBudget) -> Self {
        let started = Instant::now();
        Control {
            nodes: AtomicU64::new(0),
            subsets: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            deadline: started + budget.time_limit,
            started,
            stopped: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> Result<(), Exhausted> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            return Err(Exhausted::Nodes);
        }
        if n.is_multiple_of(1024) && (self.stopped.load(Ordering::Relaxed) || Instant::now() > self.deadline)
        {
            self.stopped.store(true, Ordering::Relaxed);
            return Err(Exhausted::Time);
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn subsets(&self) -> u64 {
        self.subsets.load(Ordering::Relaxed)
    }

    pub fn elapsed(&self) -> std::time::Duration {
        self.started.elapsed()
    }
}

/// Immutable problem description shared by all workers: the graph plus per-pair geodesic
/// edge masks, computed on first use.
pub(crate) struct Problem<'g> {
    graph: &'g Graph,
    full: u128,
    geodesic_limit: usize,
    masks: Vec<OnceLock<Result<Vec<u128>, Exhausted>>>,
}

impl<'g> Problem<'g> {
    /// The caller guarantees at most 128 edges.
    pub fn new(graph: &'g Graph, budget: &SearchBudget) -> Self {
        let e = graph.size();
        let full = if e == 128 { u128::MAX } else { (1u128 << e) - 1 };
        let order = graph.order();
        Problem {
            graph,
            full,
            geodesic_limit: budget.max_geodesics_per_pair,
            masks: (0..order * order).map(|_| OnceLock::new()).collect(),
        }
    }

    fn geodesics(&self, u: usize, v: usize) -> Result<Vec<Vec<usize>>, Exhausted> {
        enumerate_geodesics(self.graph, u, v, Some(self.geodesic_limit))
            .map_err(|_| Exhausted::Geodesics)
    }

    fn pair_masks(&self, u: usize, v: usize) -> Result<&[u128], Exhausted> {
        let slot = &self.masks[u * self.graph.order() + v];
        let masks = slot.get_or_init(|| {
            self.geodesics(u, v).map(|paths| {
                paths
                    .iter()
                    .map(|p| {
                        p.windows(2).fold(0u128, |acc, w| {
                            acc | 1u128 << self.graph.edge_id(w[0], w[1]).expect("geodesic step")
                        })
                    })
                    .collect()
            })
        });
        match masks {
            Ok(m) => Ok(m),
            Err(e) => Err(*e),
        }
    }

    /// Searches for a path assignment over the sorted vertex set `set`. Returns the chosen
    /// `(u, v, geodesic index)` triples.
    pub fn cover(
        &self,
        set: &[usize],
        ctl: &Control,
    ) -> Result<Option<Vec<Choice>>, Exhausted> {
        ctl.subsets.fetch_add(1, Ordering::Relaxed);
        let mut pairs = Vec::new();
        let mut masks = Vec::new();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                pairs.push((u, v));
                masks.push(self.pair_masks(u, v)?);
            }
        }
        let edges = self.graph.size();
        let mut options: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges];
        let mut reach = 0u128;
        for (p, list) in masks.iter().enumerate() {
            for (g, &mask) in list.iter().enumerate() {
                reach |= mask;
                let mut rest = mask;
                while rest != 0 {
                    options[rest.trailing_zeros() as usize].push((p, g));
                    rest &= rest - 1;
                }
            }
        }
        if reach != self.full {
            return Ok(None);
        }
        let mut dfs = Dfs {
            options,
            masks,
            full: self.full,
            used: vec![false; pairs.len()],
            chosen: Vec::new(),
            ctl,
        };
        if !dfs.run(0)? {
            return Ok(None);
        }
        Ok(Some(
            dfs.chosen
                .into_iter()
                .map(|(p, g)| (pairs[p].0, pairs[p].1, g))
                .collect(),
        ))
    }

    pub fn to_cover(&self, set: &[usize], chosen: &[Choice]) -> Cover {
        Cover {
            set: set.iter().copied().collect(),
            paths: chosen
                .iter()
                .map(|&(u, v, g)| {
                    let mut all = self.geodesics(u, v).expect("already enumerated once");
                    all.swap_remove(g)
                })
                .collect(),
        }
    }

    /// First feasible `s`-subset in lexicographic order among orbit representatives under
    /// `symmetries` (vertex permutations).
    pub fn first_feasible(
        &self,
        s: usize,
        symmetries: &[Vec<usize>],
        ctl: &Control,
    ) -> Result<Option<Cover>, Exhausted> {
        let mut subsets = Combinations::new(self.graph.order(), s);
        loop {
            let chunk: Vec<Vec<usize>> = subsets
                .by_ref()
                .filter(|c| is_canonical(c, symmetries))
                .take(CHUNK)
                .collect();
            if chunk.is_empty() {
                return Ok(None);
            }
            let hit = chunk.par_iter().find_map_first(|set| match self.cover(set, ctl) {
                Ok(Some(chosen)) => Some(Ok((set.clone(), chosen))),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            });
            match hit {
                Some(Ok((set, chosen))) => return Ok(Some(self.to_cover(&set, &chosen))),
                Some(Err(e)) => return Err(e),
                None => {}
            }
        }
    }
}

struct Dfs<'a> {
    options: Vec<Vec<(usize, usize)>>,
    masks: Vec<&'a [u128]>,
    full: u128,
    used: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    ctl: &'a Control,
}

impl Dfs<'_> {
    fn run(&mut self, covered: u128) -> Result<bool, Exhausted> {
        self.ctl.tick()?;
        if covered == self.full {
            return Ok(true);
        }
        let mut best: Option<(usize, usize)> = None;
        let mut rest = self.full & !covered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let count = self.options[e].iter().filter(|(p, _)| !self.used[*p]).count();
            if count == 0 {
                return Ok(false);
            }
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((e, count));
            }
        }
        let (edge, _) = best.expect("some edge is uncovered");
        let mut branches: Vec<(usize, usize, u32)> = self.options[edge]
            .iter()
            .filter(|(p, _)| !self.used[*p])
            .map(|&(p, g)| (p, g, (self.masks[p][g] & !covered).count_ones()))
            .collect();
        branches.sort_by_key(|b| std::cmp::Reverse(b.2));
        for (p, g, _) in branches {
            self.used[p] = true;
            self.chosen.push((p, g));
            if self.run(covered | self.masks[p][g])? {
                return Ok(true);
            }
            self.chosen.pop();
            self.used[p] = false;
        }
        Ok(false)
    }
}

fn is_canonical(set: &[usize], symmetries: &[Vec<usize>]) -> bool {
    let mut image = Vec::with_capacity(set.len());
    symmetries.iter().all(|sigma| {
        image.clear();
        image.extend(set.iter().map(|&v| sigma[v]));
        image.sort_unstable();
        image.as_slice() >= set
    })
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            current: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        match (0..k).rev().find(|&i| self.current[i] < self.n - k + i) {
            Some(i) => {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}
