//! Exact longest-cycle search.
//!
//! [`longest_cycle_exact`] is a branch-and-bound DFS over partial paths:
//! each candidate cycle class is anchored at its smallest vertex, branches
//! are pruned when the path plus everything still reachable cannot beat the
//! incumbent, and a branch dies as soon as the anchor can no longer be
//! re-entered. [`brute_force_longest_cycle`] enumerates every simple cycle
//! with no pruning at all and exists solely as an independent oracle.

use crate::bitset::VertexSet;
use crate::cycle::CycleState;
use crate::graph::FullereneGraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Limits for one exact search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
    /// Stop as soon as a cycle at least this long is found.
    pub target_length: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            node_limit: 100_000_000,
            time_limit: Duration::from_secs(60),
            target_length: None,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(nodes: u64) -> Self {
        Self {
            node_limit: nodes,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Longest cycle found, `None` when no simple cycle avoids the
    /// forbidden set (an over-constrained instance, not an error).
    pub cycle: Option<CycleState>,
    /// True iff the result is proven longest: the search space was
    /// exhausted or the incumbent already spans every allowed vertex.
    pub optimal: bool,
    /// True iff the search stopped because `target_length` was reached.
    pub reached_target: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph order {n} exceeds the solver capacity {max}")]
    TooLarge { n: usize, max: usize },
}

/// Longest simple cycle avoiding `forbidden`, within `budget`.
pub fn longest_cycle_exact(
    g: &FullereneGraph,
    forbidden: &[usize],
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    let n = g.n();
    if n <= 64 {
        Ok(Searcher::<1>::run(g, forbidden, budget))
    } else if n <= 128 {
        Ok(Searcher::<2>::run(g, forbidden, budget))
    } else if n <= 256 {
        Ok(Searcher::<4>::run(g, forbidden, budget))
    } else {
        Err(SearchError::TooLarge { n, max: 256 })
    }
}

struct Searcher<const W: usize> {
    adj_mask: Vec<VertexSet<W>>,
    adj_sorted: Vec<[usize; 3]>,
    anchor: usize,
    allowed_here: VertexSet<W>,
    visited: VertexSet<W>,
    path: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    node_limit: u64,
    deadline: Instant,
    nodes: u64,
    stopped: bool,
    done: bool,
    bfs_stack: Vec<usize>,
}

impl<const W: usize> Searcher<W> {
    fn run(g: &FullereneGraph, forbidden: &[usize], budget: &SearchBudget) -> SearchOutcome {
        let started = Instant::now();
        let n = g.n();
        let mut allowed = VertexSet::<W>::first_n(n);
        for &v in forbidden {
            allowed.remove(v);
        }
        let max_possible = allowed.len();
        let target = budget.target_length.unwrap_or(usize::MAX).min(max_possible);

        let adj_mask: Vec<VertexSet<W>> = (0..n)
            .map(|v| {
                let mut m = VertexSet::empty();
                for w in g.neighbors(v) {
                    m.insert(w);
                }
                m
            })
            .collect();
        let adj_sorted: Vec<[usize; 3]> = (0..n)
            .map(|v| {
                let mut a = g.neighbors(v);
                a.sort_unstable();
                a
            })
            .collect();

        let mut s = Searcher {
            adj_mask,
            adj_sorted,
            anchor: 0,
            allowed_here: VertexSet::empty(),
            visited: VertexSet::empty(),
            path: Vec::with_capacity(n),
            best: Vec::new(),
            target,
            node_limit: budget.node_limit,
            deadline: started + budget.time_limit,
            nodes: 0,
            stopped: false,
            done: false,
            bfs_stack: Vec::with_capacity(n),
        };

        for a in 0..n {
            if s.done || s.stopped {
                break;
            }
            if !allowed.contains(a) {
                continue;
            }
            // cycles whose smallest vertex is `a`
            s.anchor = a;
            s.allowed_here = allowed;
            for low in 0..a {
                s.allowed_here.remove(low);
            }
            if s.allowed_here.len() <= s.best.len() {
                break; // later anchors allow even fewer vertices
            }
            s.visited = VertexSet::empty();
            s.visited.insert(a);
            s.path.clear();
            s.path.push(a);
            s.extend(a);
        }
        // breaking out of the anchor loop above is fine: anchors run in
        // ascending order, so the remaining classes cannot beat the bound
        let exhausted = !s.stopped && !s.done;
        let reached_target = s.best.len() >= target && budget.target_length.is_some();
        let optimal = exhausted || s.best.len() == max_possible;
        SearchOutcome {
            cycle: (s.best.len() >= 5)
                .then(|| CycleState::new(g, s.best.clone()).expect("search yields valid cycles")),
            optimal,
            reached_target,
            nodes: s.nodes,
            elapsed: started.elapsed(),
        }
    }

    fn extend(&mut self, v: usize) {
        self.nodes += 1;
        if self.nodes >= self.node_limit
            || (self.nodes.is_multiple_of(8192) && Instant::now() >= self.deadline)
        {
            self.stopped = true;
            return;
        }

        // close the cycle if possible; each cycle is seen once because the
        // second vertex must be smaller than the closing one
        if self.path.len() >= 5
            && self.adj_mask[v].contains(self.anchor)
            && self.path[1] < v
            && self.path.len() > self.best.len()
        {
            self.best = self.path.clone();
            if self.best.len() >= self.target {
                self.done = true;
                return;
            }
        }

        let mut free = self.allowed_here;
        free.subtract(&self.visited);

        // everything a continuation could still pick up
        let reach = self.reachable_via(v, &free);
        if self.path.len() + reach.len() <= self.best.len() {
            return;
        }
        // the cycle must eventually re-enter the anchor
        let mut closers = self.adj_mask[self.anchor];
        closers.intersect_with(&reach);
        if closers.is_empty() && !self.adj_mask[v].contains(self.anchor) {
            return;
        }

        for w in self.adj_sorted[v] {
            if free.contains(w) {
                self.visited.insert(w);
                self.path.push(w);
                self.extend(w);
                self.path.pop();
                self.visited.remove(w);
                if self.stopped || self.done {
                    return;
                }
            }
        }
    }

    /// Vertices reachable from `v` through `free` (excluding `v` itself).
    fn reachable_via(&mut self, v: usize, free: &VertexSet<W>) -> VertexSet<W> {
        let mut seen = VertexSet::empty();
        self.bfs_stack.clear();
        for w in self.adj_sorted[v] {
            if free.contains(w) {
                seen.insert(w);
                self.bfs_stack.push(w);
            }
        }
        while let Some(u) = self.bfs_stack.pop() {
            for w in self.adj_sorted[u] {
                if free.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    self.bfs_stack.push(w);
                }
            }
        }
        seen
    }
}

/// Exhaustively enumerate every simple cycle avoiding `forbidden` and return
/// a longest one. No pruning: this is the independent oracle the exact
/// solver is checked against, so it must stay plainly correct. Exponential;
/// callers keep n at or below about 30.
pub fn brute_force_longest_cycle(g: &FullereneGraph, forbidden: &[usize]) -> Option<CycleState> {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &v in forbidden {
        blocked[v] = true;
    }
    let adj_sorted: Vec<[usize; 3]> = (0..n)
        .map(|v| {
            let mut a = g.neighbors(v);
            a.sort_unstable();
            a
        })
        .collect();

    struct Enumerator<'a> {
        adj: &'a [[usize; 3]],
        blocked: &'a [bool],
        anchor: usize,
        visited: Vec<bool>,
        path: Vec<usize>,
        best: Vec<usize>,
    }

    impl Enumerator<'_> {
        fn extend(&mut self, v: usize) {
            if self.path.len() >= 5
                && self.path[1] < v
                && self.adj[v].contains(&self.anchor)
                && self.path.len() > self.best.len()
            {
                self.best = self.path.clone();
            }
            for w in self.adj[v] {
                if w > self.anchor && !self.blocked[w] && !self.visited[w] {
                    self.visited[w] = true;
                    self.path.push(w);
                    self.extend(w);
                    self.path.pop();
                    self.visited[w] = false;
                }
            }
        }
    }

    let mut e = Enumerator {
        adj: &adj_sorted,
        blocked: &blocked,
        anchor: 0,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        best: Vec::new(),
    };
    for (a, &blk) in blocked.iter().enumerate() {
        if blk {
            continue;
        }
        e.anchor = a;
        e.visited[a] = true;
        e.path.push(a);
        e.extend(a);
        e.path.pop();
        e.visited[a] = false;
    }
    (e.best.len() >= 5).then(|| CycleState::new(g, e.best).expect("oracle yields valid cycles"))
}

/// Seeded heuristic: start from a random face boundary and grow it with
/// the local-search movers. Deterministic for a fixed seed; no optimality
/// claim.
pub fn heuristic_long_cycle(g: &FullereneGraph, seed: u64) -> CycleState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let face = rng.gen_range(0..g.num_faces());
    let start = CycleState::new(g, g.face(face).boundary.clone())
        .expect("face boundaries are valid cycles");
    crate::reroute::improve_until_stable(g, &start, 1)
}
