//! Simple cycles stored in canonical form.

use crate::graph::FullereneGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle of length {0} is shorter than the girth bound 5")]
    TooShort(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(usize),
    #[error("consecutive cycle vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("edge set does not form a single simple cycle")]
    NotACycle,
}

/// A simple cycle: cyclic vertex order plus vertex / edge membership flags.
///
/// The stored order is canonical: rotated so the smallest vertex id leads
/// and reflected so its smaller neighbor comes second, which makes equal
/// cycles compare equal and keeps solver output reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleState {
    order: Vec<usize>,
    on_cycle: Vec<bool>,
    edge_on: Vec<bool>,
}

impl CycleState {
    pub fn new(g: &FullereneGraph, order: Vec<usize>) -> Result<Self, CycleError> {
        if order.len() < 5 {
            return Err(CycleError::TooShort(order.len()));
        }
        let mut on_cycle = vec![false; g.n()];
        for &v in &order {
            if v >= g.n() {
                return Err(CycleError::VertexOutOfRange(v));
            }
            if on_cycle[v] {
                return Err(CycleError::RepeatedVertex(v));
            }
            on_cycle[v] = true;
        }
        let mut edge_on = vec![false; g.num_edges()];
        for i in 0..order.len() {
            let (u, v) = (order[i], order[(i + 1) % order.len()]);
            match g.edge_id(u, v) {
                Some(e) => edge_on[e] = true,
                None => return Err(CycleError::NotAdjacent(u, v)),
            }
        }
        Ok(Self {
            order: canonical_order(&order),
            on_cycle,
            edge_on,
        })
    }

    /// Rebuild a cycle from an undirected edge membership vector.
    pub fn from_edge_set(g: &FullereneGraph, edge_on: &[bool]) -> Result<Self, CycleError> {
        assert_eq!(edge_on.len(), g.num_edges());
        let mut degree = vec![0usize; g.n()];
        let mut count = 0;
        for (e, &on) in edge_on.iter().enumerate() {
            if on {
                let (u, v) = g.edge_endpoints(e);
                degree[u] += 1;
                degree[v] += 1;
                count += 1;
            }
        }
        if count == 0 || degree.iter().any(|&d| d != 0 && d != 2) {
            return Err(CycleError::NotACycle);
        }
        let start = g
            .edges()
            .iter()
            .zip(edge_on)
            .find(|(_, &on)| on)
            .map(|((u, _), _)| *u)
            .unwrap();
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = g
                .neighbors(cur)
                .into_iter()
                .find(|&w| w != prev && g.edge_id(cur, w).is_some_and(|e| edge_on[e]));
            let Some(next) = next else {
                return Err(CycleError::NotACycle);
            };
            if next == start {
                break;
            }
            prev = cur;
            cur = next;
            order.push(cur);
            if order.len() > count {
                return Err(CycleError::NotACycle);
            }
        }
        if order.len() != count {
            return Err(CycleError::NotACycle); // more than one component
        }
        Self::new(g, order)
    }

    /// Number of vertices on the cycle (never zero: construction
    /// requires at least five).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.on_cycle[v]
    }

    pub fn contains_edge(&self, g: &FullereneGraph, u: usize, v: usize) -> bool {
        g.edge_id(u, v).is_some_and(|e| self.edge_on[e])
    }

    pub fn edge_flags(&self) -> &[bool] {
        &self.edge_on
    }

    pub fn is_hamiltonian(&self, g: &FullereneGraph) -> bool {
        self.len() == g.n()
    }

    /// Independent invariant check that rewalks the stored order against the
    /// graph. Used by tests and after reroute moves.
    pub fn check_invariants(&self, g: &FullereneGraph) -> Result<(), CycleError> {
        let rebuilt = Self::new(g, self.order.clone())?;
        if rebuilt.edge_on != self.edge_on || rebuilt.on_cycle != self.on_cycle {
            return Err(CycleError::NotACycle);
        }
        if self.on_cycle.iter().filter(|&&b| b).count() != self.order.len()
            || self.edge_on.iter().filter(|&&b| b).count() != self.order.len()
        {
            return Err(CycleError::NotACycle);
        }
        Ok(())
    }
}

/// Rotate/reflect a cyclic vertex sequence so the smallest id leads and its
/// smaller neighbor follows.
pub fn canonical_order(order: &[usize]) -> Vec<usize> {
    let m = order.len();
    let lead = (0..m).min_by_key(|&i| order[i]).unwrap();
    let forward: Vec<usize> = (0..m).map(|i| order[(lead + i) % m]).collect();
    let backward: Vec<usize> = (0..m).map(|i| order[(lead + m - i) % m]).collect();
    if forward[1..] <= backward[1..] {
        forward
    } else {
        backward
    }
}
