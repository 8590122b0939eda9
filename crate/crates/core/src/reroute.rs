//! Cycle-improvement moves.
//!
//! Two movers: [`face_segment_swap`] replaces the cycle's path along one
//! face by the longer complementary boundary path when all its interior
//! vertices are white, and [`bounded_local_reroute`] exhaustively rebuilds
//! the cycle inside a bounded neighborhood of a flagged region, keeping
//! everything outside fixed. [`improve_until_stable`] drives both until no
//! move improves the cycle.

use crate::classify::{color, violations};
use crate::cycle::{CycleError, CycleState};
use crate::discharge::{apply_rules, audit_final, initial_charges};
use crate::graph::FullereneGraph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    SegmentSwap,
    BoundedLocal,
}

/// An edge-diff that strictly lengthens a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RerouteMove {
    pub kind: MoveKind,
    /// faces the move was derived from
    pub region: Vec<usize>,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
    pub delta: i64,
}

/// Apply a move to the cycle it was generated for.
pub fn apply_move(
    g: &FullereneGraph,
    c: &CycleState,
    mv: &RerouteMove,
) -> Result<CycleState, CycleError> {
    let mut flags = c.edge_flags().to_vec();
    for &(u, v) in &mv.removed {
        let e = g.edge_id(u, v).ok_or(CycleError::NotAdjacent(u, v))?;
        flags[e] = false;
    }
    for &(u, v) in &mv.added {
        let e = g.edge_id(u, v).ok_or(CycleError::NotAdjacent(u, v))?;
        flags[e] = true;
    }
    let next = CycleState::from_edge_set(g, &flags)?;
    if next.len() as i64 != c.len() as i64 + mv.delta {
        return Err(CycleError::NotACycle);
    }
    Ok(next)
}

/// The swap along one face: if the cycle meets the face boundary in a
/// single contiguous path P and the complementary boundary path Q has only
/// white interior vertices and more vertices than P, replace P by Q.
pub fn face_segment_swap(g: &FullereneGraph, c: &CycleState, face: usize) -> Option<RerouteMove> {
    let f = g.face(face);
    let k = f.len();
    let on: Vec<bool> = (0..k)
        .map(|i| {
            let (u, v) = f.edge(i);
            c.contains_edge(g, u, v)
        })
        .collect();
    let m = on.iter().filter(|&&b| b).count();
    if m == 0 || m == k {
        return None;
    }
    // the on-cycle boundary edges must form one contiguous run
    let start = (0..k).find(|&i| !on[(i + k - 1) % k] && on[i])?;
    if (0..m).any(|j| !on[(start + j) % k]) {
        return None; // more than one run
    }
    // P runs from boundary[start] over m edges; Q is the rest
    if k <= 2 * m {
        return None; // Q would not be longer than P
    }
    let q_interior: Vec<usize> = (1..k - m)
        .map(|j| f.boundary[(start + m + j) % k])
        .collect();
    if q_interior.iter().any(|&v| c.contains_vertex(v)) {
        return None;
    }
    let removed: Vec<(usize, usize)> = (0..m).map(|j| f.edge((start + j) % k)).collect();
    let added: Vec<(usize, usize)> = (m..k).map(|j| f.edge((start + j) % k)).collect();
    Some(RerouteMove {
        kind: MoveKind::SegmentSwap,
        region: vec![face],
        removed,
        added,
        delta: (k - 2 * m) as i64,
    })
}

/// Exhaustive reroute inside a neighborhood: consider every cycle that
/// differs from `c` only on edges whose endpoints lie within graph
/// distance `radius` of the region's faces, and return a longest strictly
/// improving replacement if one exists.
pub fn bounded_local_reroute(
    g: &FullereneGraph,
    c: &CycleState,
    region: &[usize],
    radius: usize,
) -> Option<RerouteMove> {
    assert!(radius <= 3, "radius {radius} exceeds the complexity guard");
    let mut sources: Vec<usize> = region
        .iter()
        .flat_map(|&f| g.face(f).boundary.iter().copied())
        .collect();
    sources.sort_unstable();
    sources.dedup();
    let dist = g.distances_from(&sources);
    let in_scope = |v: usize| dist[v] as usize <= radius;
    let scope_edge: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(u, v)| in_scope(u) && in_scope(v))
        .collect();

    let fixed: Vec<usize> = (0..g.num_edges())
        .filter(|&e| c.edge_flags()[e] && !scope_edge[e])
        .collect();
    let best_edges = if fixed.len() == c.len() {
        return None; // nothing of the cycle is in scope
    } else if fixed.is_empty() {
        search_free(g, c, &scope_edge)
    } else {
        search_with_arcs(g, c, &scope_edge, &fixed)
    }?;

    let next = CycleState::from_edge_set(g, &best_edges).ok()?;
    let delta = next.len() as i64 - c.len() as i64;
    debug_assert!(delta > 0);
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for (e, (&was, &now)) in c.edge_flags().iter().zip(&best_edges).enumerate() {
        match (was, now) {
            (true, false) => removed.push(g.edge_endpoints(e)),
            (false, true) => added.push(g.edge_endpoints(e)),
            _ => {}
        }
    }
    Some(RerouteMove {
        kind: MoveKind::BoundedLocal,
        region: region.to_vec(),
        removed,
        added,
        delta,
    })
}

/// Fixed part of the cycle, contracted to one walkable unit.
struct Arc {
    ends: [usize; 2],
    vertex_count: usize,
    edges: Vec<usize>,
}

fn build_arcs(g: &FullereneGraph, fixed: &[usize]) -> (Vec<Arc>, Vec<bool>, Vec<usize>) {
    let n = g.n();
    let mut fixed_deg = vec![0u8; n];
    let mut fixed_at: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];
    for &e in fixed {
        let (u, v) = g.edge_endpoints(e);
        for w in [u, v] {
            fixed_at[w][fixed_deg[w] as usize] = e;
            fixed_deg[w] += 1;
        }
    }
    let mut on_arc = vec![false; n];
    let mut terminal_arc = vec![usize::MAX; n];
    let mut used_edge = vec![false; g.num_edges()];
    let mut arcs = Vec::new();
    for &e0 in fixed {
        if used_edge[e0] {
            continue;
        }
        let (a, _) = g.edge_endpoints(e0);
        // walk to one end of this arc, then collect it end to end
        let mut t = a;
        let mut prev_edge = usize::MAX;
        loop {
            let next = (0..fixed_deg[t] as usize)
                .map(|i| fixed_at[t][i])
                .find(|&e| e != prev_edge);
            match next {
                Some(e) if fixed_deg[t] == 2 || prev_edge == usize::MAX => {
                    if fixed_deg[t] == 1 && prev_edge != usize::MAX {
                        break;
                    }
                    let (u, v) = g.edge_endpoints(e);
                    let step = if u == t { v } else { u };
                    if step == a && prev_edge != usize::MAX {
                        break; // fixed edges form a full cycle; caller filtered this
                    }
                    prev_edge = e;
                    t = step;
                }
                _ => break,
            }
        }
        // t is a terminal; walk the arc collecting edges and vertices
        let start = t;
        let mut edges = Vec::new();
        let mut count = 1;
        on_arc[t] = true;
        let mut prev_edge = usize::MAX;
        let mut cur = t;
        loop {
            let next = (0..fixed_deg[cur] as usize)
                .map(|i| fixed_at[cur][i])
                .find(|&e| e != prev_edge && !used_edge[e]);
            let Some(e) = next else { break };
            used_edge[e] = true;
            edges.push(e);
            let (u, v) = g.edge_endpoints(e);
            cur = if u == cur { v } else { u };
            on_arc[cur] = true;
            count += 1;
            prev_edge = e;
        }
        terminal_arc[start] = arcs.len();
        terminal_arc[cur] = arcs.len();
        arcs.push(Arc {
            ends: [start, cur],
            vertex_count: count,
            edges,
        });
    }
    (arcs, on_arc, terminal_arc)
}

/// Search for the longest cycle through all fixed arcs, using only scope
/// edges in between. Returns its edge set if it beats the current cycle.
fn search_with_arcs(
    g: &FullereneGraph,
    c: &CycleState,
    scope_edge: &[bool],
    fixed: &[usize],
) -> Option<Vec<bool>> {
    let n = g.n();
    let (arcs, on_arc, terminal_arc) = build_arcs(g, fixed);
    let interior: Vec<bool> = (0..n)
        .map(|v| on_arc[v] && terminal_arc[v] == usize::MAX)
        .collect();
    let free_total = (0..n)
        .filter(|&v| {
            !on_arc[v]
                && g.neighbors(v)
                    .iter()
                    .any(|&w| g.edge_id(v, w).is_some_and(|e| scope_edge[e]))
        })
        .count();
    let arc_vertex_total: usize = arcs.iter().map(|a| a.vertex_count).sum();

    struct Walker<'x> {
        g: &'x FullereneGraph,
        scope_edge: &'x [bool],
        arcs: &'x [Arc],
        terminal_arc: &'x [usize],
        interior: &'x [bool],
        arc_used: Vec<bool>,
        visited: Vec<bool>,
        walk_edges: Vec<usize>,
        start: usize,
        count: usize,
        free_used: usize,
        arcs_left: usize,
        arc_vertices_left: usize,
        free_total: usize,
        best_len: usize,
        best: Option<Vec<usize>>,
    }

    impl Walker<'_> {
        fn step(&mut self, cur: usize) {
            let ub = self.count + (self.free_total - self.free_used) + self.arc_vertices_left;
            if ub <= self.best_len {
                return;
            }
            let mut neigh = self.g.neighbors(cur);
            neigh.sort_unstable();
            for w in neigh {
                let Some(e) = self.g.edge_id(cur, w) else {
                    continue;
                };
                if !self.scope_edge[e] {
                    continue;
                }
                if w == self.start {
                    if self.arcs_left == 0 && self.count > self.best_len {
                        let mut edges = self.walk_edges.clone();
                        edges.push(e);
                        self.best_len = self.count;
                        self.best = Some(edges);
                    }
                    continue;
                }
                if self.interior[w] || self.visited[w] {
                    continue;
                }
                let a = self.terminal_arc[w];
                if a != usize::MAX {
                    if self.arc_used[a] {
                        continue;
                    }
                    // enter the arc at w, leave at the other end
                    let other = if self.arcs[a].ends[0] == w {
                        self.arcs[a].ends[1]
                    } else {
                        self.arcs[a].ends[0]
                    };
                    self.arc_used[a] = true;
                    self.visited[w] = true;
                    self.visited[other] = true;
                    self.walk_edges.push(e);
                    self.count += self.arcs[a].vertex_count;
                    self.arcs_left -= 1;
                    self.arc_vertices_left -= self.arcs[a].vertex_count;
                    self.step(other);
                    self.arc_vertices_left += self.arcs[a].vertex_count;
                    self.arcs_left += 1;
                    self.count -= self.arcs[a].vertex_count;
                    self.walk_edges.pop();
                    self.visited[other] = false;
                    self.visited[w] = false;
                    self.arc_used[a] = false;
                } else {
                    self.visited[w] = true;
                    self.walk_edges.push(e);
                    self.count += 1;
                    self.free_used += 1;
                    self.step(w);
                    self.free_used -= 1;
                    self.count -= 1;
                    self.walk_edges.pop();
                    self.visited[w] = false;
                }
            }
        }
    }

    let mut w = Walker {
        g,
        scope_edge,
        arcs: &arcs,
        terminal_arc: &terminal_arc,
        interior: &interior,
        arc_used: vec![false; arcs.len()],
        visited: vec![false; n],
        walk_edges: Vec::new(),
        start: arcs[0].ends[0],
        count: arcs[0].vertex_count,
        free_used: 0,
        arcs_left: arcs.len() - 1,
        arc_vertices_left: arc_vertex_total - arcs[0].vertex_count,
        free_total,
        best_len: c.len(),
        best: None,
    };
    w.arc_used[0] = true;
    w.visited[arcs[0].ends[0]] = true;
    w.visited[arcs[0].ends[1]] = true;
    w.step(arcs[0].ends[1]);

    let walk = w.best?;
    let mut flags = vec![false; g.num_edges()];
    for arc in &arcs {
        for &e in &arc.edges {
            flags[e] = true;
        }
    }
    for e in walk {
        flags[e] = true;
    }
    Some(flags)
}

/// No part of the cycle is fixed: exhaustive longest-cycle search over the
/// scope edges alone, anchored per cycle class at its smallest vertex.
fn search_free(g: &FullereneGraph, c: &CycleState, scope_edge: &[bool]) -> Option<Vec<bool>> {
    let n = g.n();

    struct Dfs<'x> {
        g: &'x FullereneGraph,
        scope_edge: &'x [bool],
        anchor: usize,
        visited: Vec<bool>,
        path_edges: Vec<usize>,
        path_len: usize,
        second: usize,
        best_len: usize,
        best: Option<Vec<usize>>,
    }

    impl Dfs<'_> {
        fn extend(&mut self, cur: usize) {
            let mut neigh = self.g.neighbors(cur);
            neigh.sort_unstable();
            for w in neigh {
                let Some(e) = self.g.edge_id(cur, w) else {
                    continue;
                };
                if !self.scope_edge[e] {
                    continue;
                }
                if w == self.anchor {
                    if self.path_len >= 5 && self.second < cur && self.path_len > self.best_len {
                        let mut edges = self.path_edges.clone();
                        edges.push(e);
                        self.best_len = self.path_len;
                        self.best = Some(edges);
                    }
                    continue;
                }
                if w < self.anchor || self.visited[w] {
                    continue;
                }
                self.visited[w] = true;
                self.path_edges.push(e);
                self.path_len += 1;
                if self.path_len == 2 {
                    self.second = w;
                }
                self.extend(w);
                self.path_len -= 1;
                self.path_edges.pop();
                self.visited[w] = false;
            }
        }
    }

    let mut dfs = Dfs {
        g,
        scope_edge,
        anchor: 0,
        visited: vec![false; n],
        path_edges: Vec::new(),
        path_len: 1,
        second: usize::MAX,
        best_len: c.len(),
        best: None,
    };
    for a in 0..n {
        dfs.anchor = a;
        dfs.second = usize::MAX;
        dfs.visited[a] = true;
        dfs.extend(a);
        dfs.visited[a] = false;
    }
    let edges = dfs.best?;
    let mut flags = vec![false; g.num_edges()];
    for e in edges {
        flags[e] = true;
    }
    Some(flags)
}

/// Regions worth rerouting: faces named by the structural checks plus the
/// overloaded faces from the charge audit together with their neighbors.
pub fn flagged_regions(g: &FullereneGraph, c: &CycleState) -> Vec<Vec<usize>> {
    let coloring = color(g, c);
    let viol = violations(g, &coloring);
    let mut regions: Vec<Vec<usize>> = Vec::new();
    for &f in viol.white_pentagons.iter().chain(&viol.excess_faces) {
        regions.push(vec![f]);
    }
    for path in &viol.white_paths {
        let mut faces: Vec<usize> = Vec::new();
        for pair in path.windows(2) {
            let (fa, fb) = g.edge_faces(pair[0], pair[1]);
            faces.push(fa);
            faces.push(fb);
        }
        faces.sort_unstable();
        faces.dedup();
        regions.push(faces);
    }
    let ledger = apply_rules(g, c, &coloring, initial_charges(g, c, &coloring));
    let audit = audit_final(g, c, &coloring, &ledger, false);
    regions.extend(audit.witness_regions);
    regions.sort();
    regions.dedup();
    regions
}

/// Alternate segment swaps over every face with bounded reroutes over the
/// flagged regions until neither improves the cycle. Length never
/// decreases and strictly grows with every applied move, so this
/// terminates after at most n improvements.
pub fn improve_until_stable(g: &FullereneGraph, c: &CycleState, radius: usize) -> CycleState {
    let mut cur = c.clone();
    loop {
        let mut improved = false;
        loop {
            let mut swapped = false;
            for f in 0..g.num_faces() {
                if let Some(mv) = face_segment_swap(g, &cur, f) {
                    cur = apply_move(g, &cur, &mv).expect("segment swap moves are valid");
                    swapped = true;
                    improved = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let mut rerouted = false;
        for region in flagged_regions(g, &cur) {
            if let Some(mv) = bounded_local_reroute(g, &cur, &region, radius) {
                cur = apply_move(g, &cur, &mv).expect("bounded reroute moves are valid");
                rerouted = true;
                improved = true;
                break;
            }
        }
        if !improved && !rerouted {
            break;
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::nanotube;
    use crate::search::{longest_cycle_exact, SearchBudget};

    fn solve(g: &FullereneGraph, forbidden: &[usize]) -> CycleState {
        let out = longest_cycle_exact(g, forbidden, &SearchBudget::default()).unwrap();
        assert!(out.optimal);
        out.cycle.unwrap()
    }

    #[test]
    fn hamiltonian_cycle_admits_no_swap() {
        let g = nanotube(0);
        let c = solve(&g, &[]);
        for f in 0..g.num_faces() {
            assert!(face_segment_swap(&g, &c, f).is_none());
        }
    }

    #[test]
    fn white_pentagon_swap_gains_one() {
        // forbidding {5,14} on nanotube(1) puts both whites on pentagon 0
        let g = nanotube(1);
        let c = solve(&g, &[5, 14]);
        assert_eq!(c.len(), 28);
        let mv = face_segment_swap(&g, &c, 0).expect("swap on the white pentagon");
        assert_eq!(mv.delta, 1);
        assert_eq!(mv.removed.len(), 2);
        assert_eq!(mv.added.len(), 3);
        let longer = apply_move(&g, &c, &mv).unwrap();
        assert_eq!(longer.len(), 29);
        longer.check_invariants(&g).unwrap();
    }

    #[test]
    fn white_path_hexagon_swap_gains_two() {
        // hexagon 7 of nanotube(1) with the consecutive trio {6,7,8} white
        let g = nanotube(1);
        let c = solve(&g, &[6, 7, 8]);
        assert_eq!(c.len(), 27);
        let mv = face_segment_swap(&g, &c, 7).expect("swap on the white hexagon");
        assert_eq!(mv.delta, 2);
        let longer = apply_move(&g, &c, &mv).unwrap();
        assert_eq!(longer.len(), 29);
    }

    #[test]
    fn bounded_reroute_matches_the_swap() {
        let g = nanotube(1);
        let c = solve(&g, &[6, 7, 8]);
        let mv = bounded_local_reroute(&g, &c, &[7], 1).expect("local improvement");
        assert!(mv.delta >= 2);
        let longer = apply_move(&g, &c, &mv).unwrap();
        assert_eq!(longer.len() as i64, c.len() as i64 + mv.delta);
        longer.check_invariants(&g).unwrap();
    }

    #[test]
    fn bounded_reroute_improves_the_white_pentagon_region() {
        let g = nanotube(1);
        let c = solve(&g, &[5, 14]);
        let mv = bounded_local_reroute(&g, &c, &[0], 1).expect("improvement near pentagon 0");
        assert!(mv.delta >= 1);
        let longer = apply_move(&g, &c, &mv).unwrap();
        longer.check_invariants(&g).unwrap();
    }

    #[test]
    fn bounded_reroute_none_on_hamiltonian() {
        let g = nanotube(0);
        let c = solve(&g, &[]);
        for radius in [1usize, 2] {
            assert!(bounded_local_reroute(&g, &c, &[0], radius).is_none());
        }
    }

    #[test]
    fn improve_until_stable_is_identity_on_hamiltonian() {
        let g = nanotube(1);
        let c = solve(&g, &[]);
        let improved = improve_until_stable(&g, &c, 1);
        assert_eq!(improved, c);
    }

    #[test]
    fn improve_until_stable_recovers_shortcuts() {
        let g = nanotube(1);
        let c = solve(&g, &[5, 14]);
        let improved = improve_until_stable(&g, &c, 1);
        assert!(improved.len() >= 29);
        improved.check_invariants(&g).unwrap();
    }

    #[test]
    fn audit_flagged_region_is_improvable() {
        // the constrained 36-cycle that overloads hexagon 11 with two
        // Rule B transfers: rerouting around the flagged region recovers
        // a hamiltonian cycle, so the overload really certifies slack
        let g = nanotube(2);
        let c = solve(&g, &[12, 13, 17, 27]);
        assert_eq!(c.len(), 36);
        let regions = flagged_regions(&g, &c);
        let region = regions
            .iter()
            .find(|r| r.contains(&11))
            .expect("overloaded face flagged");
        let mv = bounded_local_reroute(&g, &c, region, 2).expect("improvement found");
        assert_eq!(mv.delta, 4);
        let better = apply_move(&g, &c, &mv).unwrap();
        assert_eq!(better.len(), 40);
        better.check_invariants(&g).unwrap();
    }

    #[test]
    fn face_boundary_grows_to_long_cycle() {
        // local search alone carries a single face boundary a long way
        let g = nanotube(2);
        let c = CycleState::new(&g, g.face(0).boundary.clone()).unwrap();
        let improved = improve_until_stable(&g, &c, 1);
        assert!(improved.len() >= 33, "reached only {}", improved.len());
    }
}
