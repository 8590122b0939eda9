//! Charge assignment and redistribution.
//!
//! Every white vertex starts with 3 units of charge and sends 1 unit to
//! each of its three incident faces, so white faces start with 2 units,
//! single-white faces with 1 and black faces with none. Two transfer rules
//! then move charge from white faces onto black hexagons across shared
//! edges. All arithmetic is in integer half-units (1 unit = 2 half-units),
//! so conservation is a bit-exact assertion, never a tolerance.

use crate::classify::{FaceClass, FaceColoring};
use crate::cycle::CycleState;
use crate::graph::FullereneGraph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    A,
    B,
}

/// One transfer recorded by the rule matcher.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: Rule,
    /// white face giving charge
    pub donor: usize,
    /// black hexagon receiving it
    pub receiver: usize,
    /// boundary index of the shared edge on the receiver
    pub edge_index: usize,
    pub half_units: i64,
}

/// Per-face charge in half-units plus the log of every transfer.
#[derive(Debug, Clone, Serialize)]
pub struct ChargeLedger {
    pub face_charge: Vec<i64>,
    pub rule_log: Vec<RuleApplication>,
    /// 6 half-units per white vertex
    pub total_initial: i64,
}

impl ChargeLedger {
    pub fn total(&self) -> i64 {
        self.face_charge.iter().sum()
    }
}

/// Distribute the initial charge: 2 half-units to a face per white vertex
/// on its boundary.
pub fn initial_charges(
    g: &FullereneGraph,
    _c: &CycleState,
    coloring: &FaceColoring,
) -> ChargeLedger {
    let face_charge: Vec<i64> = g
        .faces()
        .iter()
        .map(|f| 2 * coloring.face_whites(f.id).len() as i64)
        .collect();
    ChargeLedger {
        face_charge,
        rule_log: Vec::new(),
        total_initial: 6 * coloring.white_count() as i64,
    }
}

/// Apply Rules A and B everywhere they match.
///
/// For every black hexagon `f0 = v1..v6` and boundary index `i`, with
/// `f_i` the face across the edge `v_i v_{i+1}`:
///
/// * Rule A: the path `v_{i-1} v_i v_{i+1} v_{i+2}` lies on the cycle and
///   `f_i` is white — `f_i` gives 1 half-unit to `f0`.
/// * Rule B: the edge `v_i v_{i+1}` lies on the cycle, neither flanking
///   boundary edge does, and `f_i` is white — `f_i` gives 2 half-units.
///
/// The premises read only the cycle and the coloring, never the charges,
/// so every transfer is computed from the same pre-state and the scan
/// order cannot matter. Black pentagons are never receivers.
pub fn apply_rules(
    g: &FullereneGraph,
    c: &CycleState,
    coloring: &FaceColoring,
    mut ledger: ChargeLedger,
) -> ChargeLedger {
    let mut transfers: Vec<RuleApplication> = Vec::new();
    for f0 in g.faces() {
        if !f0.is_hexagon() || coloring.face_class(f0.id) != FaceClass::Black {
            continue;
        }
        let k = f0.len();
        for i in 0..k {
            let donor = f0.neighbors[i];
            if coloring.face_class(donor) != FaceClass::White {
                continue;
            }
            let prev = f0.edge((i + k - 1) % k);
            let this = f0.edge(i);
            let next = f0.edge((i + 1) % k);
            let on = |(u, v): (usize, usize)| c.contains_edge(g, u, v);
            let rule = if on(prev) && on(this) && on(next) {
                Some((Rule::A, 1))
            } else if on(this) && !on(prev) && !on(next) {
                Some((Rule::B, 2))
            } else {
                None
            };
            if let Some((rule, half_units)) = rule {
                debug_assert!(f0.is_hexagon() && coloring.face_class(f0.id) == FaceClass::Black);
                transfers.push(RuleApplication {
                    rule,
                    donor,
                    receiver: f0.id,
                    edge_index: i,
                    half_units,
                });
            }
        }
    }
    for t in &transfers {
        ledger.face_charge[t.donor] -= t.half_units;
        ledger.face_charge[t.receiver] += t.half_units;
    }
    ledger.rule_log.extend(transfers);
    ledger
}

/// Outcome of the final-charge audit.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub longest_claim: bool,
    pub white_count: usize,
    pub total_halfunits: i64,
    pub expected_halfunits: i64,
    pub conservation_ok: bool,
    pub face_final: Vec<i64>,
    pub max_charge: i64,
    /// faces holding more than 2 half-units
    pub over_faces: Vec<usize>,
    /// white faces not holding exactly 2 half-units
    pub white_face_deviations: Vec<usize>,
    /// for each violating face: the face plus its neighbors, the region a
    /// reroute search should target
    pub witness_regions: Vec<Vec<usize>>,
    pub passed: bool,
}

/// Check conservation and the per-face charge bounds.
///
/// With `longest_claim` set, a face over 2 half-units or a white face off
/// exactly 2 is evidence the cycle is improvable and fails the audit; for
/// constrained or heuristic cycles the same findings are informative flags.
pub fn audit_final(
    g: &FullereneGraph,
    _c: &CycleState,
    coloring: &FaceColoring,
    ledger: &ChargeLedger,
    longest_claim: bool,
) -> AuditReport {
    let total: i64 = ledger.total();
    let expected = ledger.total_initial;
    let conservation_ok = total == expected;
    let max_charge = ledger.face_charge.iter().copied().max().unwrap_or(0);
    let over_faces: Vec<usize> = (0..g.num_faces())
        .filter(|&f| ledger.face_charge[f] > 2)
        .collect();
    let white_face_deviations: Vec<usize> = (0..g.num_faces())
        .filter(|&f| coloring.face_class(f) == FaceClass::White && ledger.face_charge[f] != 2)
        .collect();
    let witness_regions: Vec<Vec<usize>> = over_faces
        .iter()
        .chain(if longest_claim {
            white_face_deviations.iter()
        } else {
            [].iter()
        })
        .map(|&f| {
            let mut region = vec![f];
            region.extend(g.face(f).neighbors.iter().copied());
            region.sort_unstable();
            region.dedup();
            region
        })
        .collect();
    let passed = conservation_ok
        && (!longest_claim || (over_faces.is_empty() && white_face_deviations.is_empty()));
    AuditReport {
        longest_claim,
        white_count: coloring.white_count(),
        total_halfunits: total,
        expected_halfunits: expected,
        conservation_ok,
        face_final: ledger.face_charge.clone(),
        max_charge,
        over_faces,
        white_face_deviations,
        witness_regions,
        passed,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("bound derivation requires an audit that passed with the longest claim")]
    AuditNotConclusive,
}

/// The counting chain from the audited charges to the cycle-length bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub face_count: usize,
    pub white_count: usize,
    /// total charge, 6 half-units per white vertex
    pub charge_halfunits: i64,
    /// 2 half-units per face
    pub budget_halfunits: i64,
    /// 6w <= 2f
    pub charge_within_budget: bool,
    /// floor(f / 3)
    pub white_max: usize,
    /// n - floor((n + 4) / 6), the certified lower bound on cycle length
    pub bound: usize,
    pub actual_length: usize,
    pub bound_satisfied: bool,
}

/// The guaranteed cycle-length lower bound for an n-vertex fullerene.
pub fn length_bound(n: usize) -> usize {
    n - (n + 4) / 6
}

/// Chain the audited charges into the white-vertex and length bounds.
pub fn derive_bound(g: &FullereneGraph, audit: &AuditReport) -> Result<BoundReport, BoundError> {
    if !audit.passed || !audit.longest_claim {
        return Err(BoundError::AuditNotConclusive);
    }
    let n = g.n();
    let f = g.num_faces();
    let w = audit.white_count;
    let charge = audit.total_halfunits;
    let budget = 2 * f as i64;
    let bound = length_bound(n);
    let actual = n - w;
    Ok(BoundReport {
        n,
        face_count: f,
        white_count: w,
        charge_halfunits: charge,
        budget_halfunits: budget,
        charge_within_budget: charge <= budget,
        white_max: f / 3,
        bound,
        actual_length: actual,
        bound_satisfied: actual >= bound,
    })
}
