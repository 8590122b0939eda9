//! Command-line pipeline over the fullerene library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fullerene_core::generate;
use fullerene_core::graph::FullereneGraph;
use fullerene_core::io;
use fullerene_core::pipeline::{self, oracle_check, verify_corpus, VerifyOptions};
use fullerene_core::search::{heuristic_long_cycle, longest_cycle_exact, SearchBudget};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "fullerene",
    version,
    about = "Fullerene graphs: generation, longest cycles, charge audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Nanotube,
    Buckyball,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    PlanarCode,
    Json,
}

#[derive(Args)]
struct BudgetArgs {
    /// search-tree node limit per instance
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// wall-clock limit per instance, seconds
    #[arg(long, default_value_t = 60)]
    budget_secs: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            node_limit: self.budget_nodes,
            time_limit: Duration::from_secs(self.budget_secs),
            target_length: None,
        }
    }
}

fn parse_forbidden(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad vertex id {s:?}: {e}"))
        })
        .collect()
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated fullerene to a file
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// hexagon ring count (nanotube family only)
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_enum, default_value = "planar-code")]
        format: FileFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check every fullerene invariant of the graphs in a file
    Validate { input: PathBuf },
    /// Find longest cycles (exact by default, heuristic with --heuristic)
    Solve {
        input: PathBuf,
        /// comma-separated vertex ids to exclude from the cycle
        #[arg(long, default_value = "")]
        forbid: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// run the seeded local-search heuristic instead of the exact solver
        #[arg(long)]
        heuristic: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Full pipeline: solve, color, structural checks, discharge, audit,
    /// bound; writes <out>.json and <out>.csv
    Verify {
        input: PathBuf,
        #[arg(long, default_value = "")]
        forbid: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// reroute radius for witness searches on flagged instances
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// output path prefix
        #[arg(long, default_value = "report")]
        out: PathBuf,
    },
    /// Compare the exact solver against the brute-force cycle enumerator
    OracleCheck {
        input: PathBuf,
        #[arg(long, default_value_t = 30)]
        n_limit: usize,
        /// also check every single-forbidden-vertex subinstance
        #[arg(long)]
        each_forbidden: bool,
        /// deliberately corrupt one answer (exercises the failure path)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn load(path: &Path, require_fullerene: bool) -> Result<Vec<(String, FullereneGraph)>, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let graphs = io::load_graphs(&bytes, require_fullerene)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".to_string());
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("{stem}#{i}"), g))
        .collect())
}

fn cmd_generate(family: Family, k: usize, format: FileFormat, out: &Path) -> Result<(), String> {
    let g = match family {
        Family::Nanotube => generate::nanotube(k),
        Family::Buckyball => generate::buckyball(),
    };
    let bytes = match format {
        FileFormat::PlanarCode => {
            io::encode_planar_code(std::slice::from_ref(&g)).map_err(|e| e.to_string())?
        }
        FileFormat::Json => io::encode_json(std::slice::from_ref(&g)),
    };
    std::fs::write(out, bytes).map_err(|e| format!("{}: {e}", out.display()))?;
    println!("wrote n={} fullerene to {}", g.n(), out.display());
    Ok(())
}

fn cmd_validate(input: &Path) -> Result<bool, String> {
    let graphs = load(input, false)?;
    let mut all_ok = true;
    for (id, g) in &graphs {
        let report = g.validate();
        println!("{id}: n={} f={}", g.n(), g.num_faces());
        for line in report.lines() {
            println!("  {line}");
        }
        all_ok &= report.all_ok();
    }
    Ok(all_ok)
}

fn cmd_solve(
    input: &Path,
    forbid: &[usize],
    budget: &SearchBudget,
    heuristic: bool,
    seed: u64,
) -> Result<(), String> {
    let graphs = load(input, true)?;
    for (id, g) in &graphs {
        if heuristic {
            let c = heuristic_long_cycle(g, seed);
            println!("{id}: heuristic length {} (seed {seed})", c.len());
            println!("  cycle: {:?}", c.order());
        } else {
            let out = longest_cycle_exact(g, forbid, budget).map_err(|e| e.to_string())?;
            match out.cycle {
                Some(c) => {
                    println!(
                        "{id}: length {} optimal={} nodes={} in {:?}",
                        c.len(),
                        out.optimal,
                        out.nodes,
                        out.elapsed
                    );
                    println!("  cycle: {:?}", c.order());
                }
                None => println!(
                    "{id}: no cycle avoids the forbidden set (optimal={})",
                    out.optimal
                ),
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    input: &Path,
    forbid: Vec<usize>,
    budget: SearchBudget,
    radius: usize,
    out: &Path,
) -> Result<bool, String> {
    let graphs = load(input, true)?;
    let opts = VerifyOptions {
        budget,
        forbidden: forbid,
        radius,
    };
    let reports = verify_corpus(&graphs, &opts).map_err(|e| e.to_string())?;
    let json_path = out.with_extension("json");
    let csv_path = out.with_extension("csv");
    std::fs::write(&json_path, pipeline::to_json(&reports))
        .map_err(|e| format!("{}: {e}", json_path.display()))?;
    std::fs::write(&csv_path, pipeline::to_csv(&reports))
        .map_err(|e| format!("{}: {e}", csv_path.display()))?;
    let mut ok = true;
    for r in &reports {
        println!(
            "{}: n={} length={} optimal={} w={} checks[p3={} pent={} two_white={}] \
max_charge={}hu conserved={} bound={} bound_ok={} ({} ms)",
            r.graph_id,
            r.n,
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
        );
        if !r.optimal {
            println!("  note: budget exhausted before optimality; findings are informative");
        }
        for m in &r.witness_moves {
            println!(
                "  improvable near faces {:?}: +{} vertices via local reroute",
                m.region, m.delta
            );
        }
        ok &= r.acceptable();
    }
    println!(
        "report written to {} and {}",
        json_path.display(),
        csv_path.display()
    );
    Ok(ok)
}

fn cmd_oracle_check(
    input: &Path,
    n_limit: usize,
    each_forbidden: bool,
    inject_fault: bool,
) -> Result<bool, String> {
    let graphs = load(input, true)?;
    let report =
        oracle_check(&graphs, n_limit, each_forbidden, inject_fault).map_err(|e| e.to_string())?;
    for c in report.comparisons.iter().filter(|c| !c.agree) {
        println!(
            "MISMATCH {} forbidden={:?}: solver {} (optimal={}) vs oracle {}",
            c.graph_id, c.forbidden, c.solver_length, c.solver_optimal, c.oracle_length
        );
    }
    println!(
        "oracle check: {} instances, {}",
        report.comparisons.len(),
        if report.pass { "pass" } else { "FAIL" }
    );
    Ok(report.pass)
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate {
            family,
            k,
            format,
            out,
        } => cmd_generate(family, k, format, &out).map(|()| true),
        Command::Validate { input } => cmd_validate(&input),
        Command::Solve {
            input,
            forbid,
            budget,
            heuristic,
            seed,
        } => {
            let forbid = parse_forbidden(&forbid)?;
            cmd_solve(&input, &forbid, &budget.budget(), heuristic, seed).map(|()| true)
        }
        Command::Verify {
            input,
            forbid,
            budget,
            radius,
            out,
        } => {
            if radius > 3 {
                return Err("--radius must be at most 3".to_string());
            }
            let forbid = parse_forbidden(&forbid)?;
            cmd_verify(&input, forbid, budget.budget(), radius, &out)
        }
        Command::OracleCheck {
            input,
            n_limit,
            each_forbidden,
            inject_fault,
        } => cmd_oracle_check(&input, n_limit, each_forbidden, inject_fault),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
