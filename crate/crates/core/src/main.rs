//! Thin command-line shell over the library: graph generation, the case
//! table, the exact solver, criticality verification and format conversion.
//! Every run that writes a report embeds a manifest with digests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 budget
//! exhausted.

use clap::{Args, Parser, Subcommand};
use crosscrit::manifest::{digest, RunManifest};
use crosscrit::solver::{SolveStatus, SolverBudget};
use crosscrit::{
    enumerate_table1, exact_cr, proofcheck, verify_criticality, FamilyParams, WeightedMultigraph,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "crosscrit", version, about = "crossing-critical graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member or calibration graph
    Gen(GenArgs),
    /// Emit the 20-row case table; --golden diffs against the frozen copy
    Table1(Table1Args),
    /// Exact crossing number of a small graph
    Solve(SolveArgs),
    /// Criticality verification report for a family member
    Verify(VerifyArgs),
    /// Convert a graph file between formats
    Export(ExportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// g13 | g13k | g13p | kochol | k33 | thm3
    #[arg(long)]
    family: String,
    /// half-integer parameters, e.g. 1,0.5,0.5,1 (for g13p)
    #[arg(long)]
    ks: Option<String>,
    /// wedge count (for g13k)
    #[arg(long)]
    k: Option<u32>,
    /// tile count (for kochol)
    #[arg(long, default_value_t = 4)]
    tiles: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    #[arg(long, default_value_t = 8)]
    d: u32,
    #[arg(long, default_value_t = 13)]
    c: u32,
    /// output path; .dot selects DOT, anything else JSON. stdout if absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Table1Args {
    /// exit nonzero unless the computed table matches the frozen copy
    #[arg(long)]
    golden: bool,
    /// print JSON instead of aligned text
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// cap on the weighted crossing count explored
    #[arg(long = "max-k", default_value_t = 4)]
    max_k: u64,
    /// time budget in seconds
    #[arg(long, default_value_t = 60)]
    time: u64,
    #[arg(long, default_value_t = 0xc0ffee)]
    seed: u64,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// half-integer parameters of the family member
    #[arg(long)]
    ks: String,
    #[arg(long, default_value_t = 13)]
    c: u64,
    /// total time budget in seconds (default from CROSSCRIT_BUDGET_SECS)
    #[arg(long = "budget-sec")]
    budget_sec: Option<u64>,
    #[arg(long, default_value_t = 0xc0ffee)]
    seed: u64,
    /// worker threads for the per-edge searches
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// dot | json | edges
    #[arg(long)]
    fmt: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Table1(args) => cmd_table1(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| e.to_string()),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn fail_invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INVALID_INPUT)
}

fn cmd_gen(args: GenArgs) -> ExitCode {
    let graph: Result<WeightedMultigraph, String> = match args.family.as_str() {
        "g13" => Ok(crosscrit::build_g13()),
        "k33" => Ok(crosscrit::build_k33()),
        "kochol" => crosscrit::build_kochol(args.tiles).map_err(|e| e.to_string()),
        "g13k" => match args.k {
            Some(k) => crosscrit::build_g13_k(k).map_err(|e| e.to_string()),
            None => Err("g13k requires --k".into()),
        },
        "g13p" => match &args.ks {
            Some(ks) => FamilyParams::parse(ks)
                .and_then(|p| crosscrit::build_g13_family(&p).map(|m| m.graph))
                .map_err(|e| e.to_string()),
            None => Err("g13p requires --ks".into()),
        },
        "thm3" => crosscrit::theorem3_construct(args.q, args.d, args.c)
            .map(|(g, _)| g)
            .map_err(|e| e.to_string()),
        other => Err(format!("unknown family {other}")),
    };
    let graph = match graph {
        Ok(g) => g,
        Err(e) => return fail_invalid(e),
    };
    let dot = args
        .out
        .as_ref()
        .map(|p| p.extension().map(|e| e == "dot").unwrap_or(false))
        .unwrap_or(false);
    let content = if dot { graph.to_dot() } else { graph.to_json() };
    match write_output(&args.out, &content) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_invalid(e),
    }
}

fn cmd_table1(args: Table1Args) -> ExitCode {
    let rows = enumerate_table1();
    if args.golden {
        let problems = proofcheck::diff_against_golden(&rows);
        if !problems.is_empty() {
            for p in &problems {
                eprintln!("golden mismatch: {p}");
            }
            return ExitCode::from(EXIT_VERIFY_FAILED);
        }
    }
    let content = if args.json {
        serde_json::to_string_pretty(&rows).expect("serializable rows")
    } else {
        proofcheck::table1_text(&rows)
    };
    match write_output(&args.out, &content) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_invalid(e),
    }
}

fn cmd_solve(args: SolveArgs) -> ExitCode {
    let started = Instant::now();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail_invalid(format!("{}: {e}", args.input.display())),
    };
    let graph = match WeightedMultigraph::from_json(&text) {
        Ok(g) => g,
        Err(e) => return fail_invalid(e),
    };
    let budget = SolverBudget {
        max_crossings: args.max_k,
        time_limit: Duration::from_secs(args.time),
        seed: args.seed,
        ..Default::default()
    };
    let result = exact_cr(&graph, &budget);
    let mut manifest = RunManifest::new(
        "solve",
        vec![
            format!("--in {}", args.input.display()),
            format!("--max-k {}", args.max_k),
            format!("--time {}", args.time),
        ],
        args.seed,
        args.time,
    );
    manifest.input_digest = Some(digest(text.as_bytes()));
    manifest.finish(started);
    let report = serde_json::json!({
        "manifest": manifest,
        "lower_bound": result.lower_bound,
        "upper_bound": result.upper_bound,
        "status": match result.status {
            SolveStatus::Exact => "exact",
            SolveStatus::BoundsOnly => "bounds-only",
            SolveStatus::Timeout => "timeout",
        },
        "nodes": result.nodes,
        "witness": result.witness.as_ref().map(|w| w.to_json_value()),
    });
    let mut content = serde_json::to_string_pretty(&report).expect("report");
    let out_digest = digest(content.as_bytes());
    content = content.replacen(
        "\"output_digest\": null",
        &format!("\"output_digest\": \"{out_digest}\""),
        1,
    );
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, &content) {
            return fail_invalid(e);
        }
    } else {
        println!("{content}");
    }
    match result.status {
        SolveStatus::Exact => ExitCode::SUCCESS,
        _ => ExitCode::from(EXIT_BUDGET),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let started = Instant::now();
    let params = match FamilyParams::parse(&args.ks) {
        Ok(p) => p,
        Err(e) => return fail_invalid(e),
    };
    let budget_secs = args
        .budget_sec
        .or_else(|| {
            std::env::var("CROSSCRIT_BUDGET_SECS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(600);
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    let budget = SolverBudget {
        time_limit: Duration::from_secs(budget_secs.max(1) / 4 + 1),
        seed: args.seed,
        restarts: 4000,
        ..Default::default()
    };
    let report = match verify_criticality(&params, args.c, &budget) {
        Ok(r) => r,
        Err(e) => return fail_invalid(e),
    };
    let passed = report.criticality_verified_at_desk_scale;
    let mut manifest = RunManifest::new(
        "verify",
        vec![format!("--ks {}", args.ks), format!("--c {}", args.c)],
        args.seed,
        budget_secs,
    );
    manifest.finish(started);
    let out = serde_json::json!({ "manifest": manifest, "report": report });
    let content = serde_json::to_string_pretty(&out).expect("report");
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, &content) {
            return fail_invalid(e);
        }
    } else {
        println!("{content}");
    }
    if passed {
        ExitCode::SUCCESS
    } else if started.elapsed() > Duration::from_secs(budget_secs) {
        ExitCode::from(EXIT_BUDGET)
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn cmd_export(args: ExportArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail_invalid(format!("{}: {e}", args.input.display())),
    };
    let graph = match WeightedMultigraph::from_json(&text) {
        Ok(g) => g,
        Err(e) => return fail_invalid(e),
    };
    let content = match args.fmt.as_str() {
        "dot" => graph.to_dot(),
        "json" => graph.to_json(),
        "edges" => graph.to_edge_list(),
        other => return fail_invalid(format!("unknown format {other}")),
    };
    match write_output(&args.out, &content) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail_invalid(e),
    }
}
