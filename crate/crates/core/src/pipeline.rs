//! The per-instance verification pipeline: solve, color, structural
//! checks, discharge, audit, bound. Produces one report row per graph with
//! a fixed CSV schema and a richer JSON form carrying the charge map, the
//! rule log and the bound chain.

use crate::classify::{
    check_max_two_whites_per_face, check_no_white_p3, check_no_white_pentagon, classify_pattern,
    color,
};
use crate::cycle::CycleState;
use crate::discharge::{
    apply_rules, audit_final, derive_bound, initial_charges, length_bound, AuditReport, BoundReport,
};
use crate::graph::FullereneGraph;
use crate::reroute::{bounded_local_reroute, flagged_regions, RerouteMove};
use crate::search::{brute_force_longest_cycle, longest_cycle_exact, SearchBudget, SearchError};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub budget: SearchBudget,
    pub forbidden: Vec<usize>,
    /// reroute radius used to find witness moves on flagged instances
    pub radius: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: SearchBudget::default(),
            forbidden: Vec::new(),
            radius: 1,
        }
    }
}

/// One row of a verification run.
///
/// The first fifteen fields are the CSV schema, in column order; the rest
/// only appear in the JSON form.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub graph_id: String,
    pub n: usize,
    pub f: usize,
    pub pentagons: usize,
    pub length: usize,
    pub optimal: bool,
    pub w: usize,
    pub p3_ok: bool,
    pub pentagon_ok: bool,
    pub two_white_ok: bool,
    pub max_charge_halfunits: i64,
    pub conserved: bool,
    pub bound: usize,
    pub bound_ok: bool,
    pub ms: u64,

    pub forbidden: Vec<usize>,
    pub longest_claim: bool,
    pub patterns_feasible: bool,
    pub search_nodes: u64,
    pub cycle: Vec<usize>,
    pub audit: Option<AuditReport>,
    pub bound_chain: Option<BoundReport>,
    /// improving moves found near flagged regions of non-optimal cycles
    pub witness_moves: Vec<RerouteMove>,
}

impl InstanceReport {
    /// True when this instance counts against the exit code: a cycle that
    /// is claimed longest must satisfy every audit and the bound.
    pub fn acceptable(&self) -> bool {
        if !self.longest_claim {
            return self.conserved;
        }
        self.p3_ok
            && self.pentagon_ok
            && self.two_white_ok
            && self.conserved
            && self.audit.as_ref().is_some_and(|a| a.passed)
            && self.bound_ok
            && self.patterns_feasible
    }
}

pub const CSV_HEADER: &str = "graph_id,n,f,pentagons,length,optimal,w,p3_ok,pentagon_ok,\
two_white_ok,max_charge_halfunits,conserved,bound,bound_ok,ms";

pub fn to_csv(reports: &[InstanceReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.graph_id,
            r.n,
            r.f,
            r.pentagons,
            r.length,
            r.optimal,
            r.w,
            r.p3_ok,
            r.pentagon_ok,
            r.two_white_ok,
            r.max_charge_halfunits,
            r.conserved,
            r.bound,
            r.bound_ok,
            r.ms
        ));
    }
    out
}

pub fn to_json(reports: &[InstanceReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// Run the whole pipeline on one graph.
pub fn verify_instance(
    g: &FullereneGraph,
    graph_id: &str,
    opts: &VerifyOptions,
) -> Result<InstanceReport, SearchError> {
    let started = Instant::now();
    let outcome = longest_cycle_exact(g, &opts.forbidden, &opts.budget)?;
    let bound = length_bound(g.n());
    let base = InstanceReport {
        graph_id: graph_id.to_string(),
        n: g.n(),
        f: g.num_faces(),
        pentagons: g.pentagon_count(),
        length: 0,
        optimal: outcome.optimal,
        w: g.n(),
        p3_ok: true,
        pentagon_ok: true,
        two_white_ok: true,
        max_charge_halfunits: 0,
        conserved: true,
        bound,
        bound_ok: false,
        ms: 0,
        forbidden: opts.forbidden.clone(),
        longest_claim: false,
        patterns_feasible: true,
        search_nodes: outcome.nodes,
        cycle: Vec::new(),
        audit: None,
        bound_chain: None,
        witness_moves: Vec::new(),
    };
    let Some(c) = outcome.cycle else {
        // over-constrained: no cycle at all
        return Ok(InstanceReport {
            ms: started.elapsed().as_millis() as u64,
            ..base
        });
    };

    let coloring = color(g, &c);
    let longest_claim = outcome.optimal && opts.forbidden.is_empty();
    let p3 = check_no_white_p3(g, &coloring);
    let pentagon = check_no_white_pentagon(g, &coloring);
    let two_white = check_max_two_whites_per_face(g, &coloring);
    let patterns_feasible = g
        .faces()
        .iter()
        .all(|f| classify_pattern(g, f.id, &coloring, &c).longest_feasible);

    let ledger = apply_rules(g, &c, &coloring, initial_charges(g, &c, &coloring));
    let audit = audit_final(g, &c, &coloring, &ledger, longest_claim);
    let bound_chain = derive_bound(g, &audit).ok();

    let witness_moves = if longest_claim {
        Vec::new()
    } else {
        flagged_regions(g, &c)
            .into_iter()
            .filter_map(|region| bounded_local_reroute(g, &c, &region, opts.radius))
            .collect()
    };

    Ok(InstanceReport {
        length: c.len(),
        w: coloring.white_count(),
        p3_ok: p3.is_none(),
        pentagon_ok: pentagon.is_none(),
        two_white_ok: two_white.is_none(),
        max_charge_halfunits: audit.max_charge,
        conserved: audit.conservation_ok,
        bound_ok: c.len() >= bound,
        ms: started.elapsed().as_millis() as u64,
        longest_claim,
        patterns_feasible,
        cycle: c.order().to_vec(),
        audit: Some(audit),
        bound_chain,
        witness_moves,
        ..base
    })
}

/// Verify a corpus; instances run in parallel, report order follows input
/// order.
pub fn verify_corpus(
    graphs: &[(String, FullereneGraph)],
    opts: &VerifyOptions,
) -> Result<Vec<InstanceReport>, SearchError> {
    graphs
        .par_iter()
        .map(|(id, g)| verify_instance(g, id, opts))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleComparison {
    pub graph_id: String,
    pub forbidden: Vec<usize>,
    pub solver_length: usize,
    pub solver_optimal: bool,
    pub oracle_length: usize,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheckReport {
    pub comparisons: Vec<OracleComparison>,
    pub pass: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum OracleCheckError {
    #[error("graph {graph_id} has {n} vertices, above the oracle limit {limit}")]
    OverLimit {
        graph_id: String,
        n: usize,
        limit: usize,
    },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Compare the exact solver against the brute-force oracle, optionally on
/// every single-forbidden-vertex subinstance as well. `inject_fault`
/// deliberately corrupts one solver answer to exercise the failure path.
pub fn oracle_check(
    graphs: &[(String, FullereneGraph)],
    limit: usize,
    each_forbidden: bool,
    inject_fault: bool,
) -> Result<OracleCheckReport, OracleCheckError> {
    for (id, g) in graphs {
        if g.n() > limit {
            return Err(OracleCheckError::OverLimit {
                graph_id: id.clone(),
                n: g.n(),
                limit,
            });
        }
    }
    let mut jobs: Vec<(String, &FullereneGraph, Vec<usize>)> = Vec::new();
    for (id, g) in graphs {
        jobs.push((id.clone(), g, Vec::new()));
        if each_forbidden {
            for v in 0..g.n() {
                jobs.push((id.clone(), g, vec![v]));
            }
        }
    }
    let mut comparisons: Vec<OracleComparison> = jobs
        .par_iter()
        .map(|(id, g, forbidden)| {
            let solver = longest_cycle_exact(g, forbidden, &SearchBudget::default())?;
            let solver_length = solver.cycle.as_ref().map_or(0, CycleState::len);
            let oracle_length = brute_force_longest_cycle(g, forbidden).map_or(0, |c| c.len());
            Ok(OracleComparison {
                graph_id: id.clone(),
                forbidden: forbidden.clone(),
                solver_length,
                solver_optimal: solver.optimal,
                oracle_length,
                agree: solver.optimal && solver_length == oracle_length,
            })
        })
        .collect::<Result<_, SearchError>>()?;
    if inject_fault {
        if let Some(first) = comparisons.first_mut() {
            first.solver_length += 1;
            first.agree = false;
        }
    }
    let pass = comparisons.iter().all(|c| c.agree);
    Ok(OracleCheckReport { comparisons, pass })
}
