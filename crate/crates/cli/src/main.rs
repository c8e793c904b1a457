//! `vcw`: vertex-coloring edge-weightings from the command line.
//!
//! Subcommands: `solve` dispatches the constructive strategies and falls
//! back to the exhaustive oracle, `verify` checks a weighting file, `realize`
//! hits a prescribed group coloring, `oracle` brute-forces existence,
//! `census` sweeps all small connected bipartite graphs, `gen` writes family
//! graphs. Exit codes: 0 solved / proper / exists, 1 certified negative,
//! 2 unknown or error.

mod formats;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use vcw_core::{
    brute_force_weighting, census_jsonl_line, census_split, census_splits, census_summary_csv,
    realize_group_coloring, realize_parity, solve, verify_weighting, CensusOptions, CensusRow,
    Error, FamilySpec, Graph, SolveOptions, SolveStatus, StrategyKind,
};

#[derive(Parser)]
#[command(name = "vcw", version, about = "vertex-coloring 2-edge-weighting toolkit")]
struct Cli {
    /// Reject randomized runs that rely on the implicit default seed
    #[arg(long, global = true)]
    ci: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a vertex-coloring 2-edge-weighting and report the strategy used
    Solve(SolveArgs),
    /// Check a weighting file against a graph
    Verify(VerifyArgs),
    /// Realize a prescribed group coloring by edge weights
    Realize(RealizeArgs),
    /// Exhaustively decide whether a k-edge-weighting exists
    Oracle(OracleArgs),
    /// Sweep all small connected bipartite graphs and record outcomes
    Census(CensusArgs),
    /// Write a graph from a family spec
    Gen(GenArgs),
}

/// Exactly one graph source: a file or a family spec.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list or JSON graph file
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Family spec, e.g. Kmn:3,5 C:6 Q:3 theta:3,3,3 regbip:r=3,n=5,seed=7
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Seed for randomized fallbacks (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Local search restarts
    #[arg(long, default_value_t = 200)]
    restarts: u32,
    /// Local search flips per restart, as a multiple of the edge count
    #[arg(long, default_value_t = 10)]
    flip_factor: u32,
    /// Largest exhaustive enumeration the solver may attempt
    #[arg(long, default_value_t = 1 << 24)]
    oracle_budget: u64,
    /// Run exactly one strategy instead of the dispatch order
    #[arg(long, value_name = "STRATEGY")]
    force: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Weighting file, one `u v w` line per edge
    #[arg(long, value_name = "FILE")]
    weights: PathBuf,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Targets file: {"group": "Z2", "targets": {"0": [1], ...}}
    #[arg(long, value_name = "FILE")]
    targets: PathBuf,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Number of weight values
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Largest enumeration to attempt
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Largest vertex count to sweep
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(2..=9))]
    max_n: u8,
    #[arg(long, default_value_t = 1 << 24)]
    oracle_budget: u64,
    /// Seed threaded through every solve
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; output is identical for any value
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// JSON-lines output file (default stdout)
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Also write a `key,count` summary CSV here
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Family spec, e.g. Kmn:3,5 C:6 Q:3 theta:3,3,3 randbip:m=3,n=4,p=0.5
    #[arg(long, value_name = "SPEC")]
    family: String,
    /// Seed for randomized families that do not pin their own
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// edgelist or json
    #[arg(long, default_value = "edgelist")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args, cli.ci),
        Command::Verify(args) => cmd_verify(args),
        Command::Realize(args) => cmd_realize(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Census(args) => cmd_census(args, cli.ci),
        Command::Gen(args) => cmd_gen(args, cli.ci),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("vcw: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(source: &GraphSource, seed: u64) -> Result<Graph, String> {
    match (&source.input, &source.gen) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            formats::parse_graph(&text)
        }
        (None, Some(spec)) => FamilySpec::parse(spec)
            .and_then(|f| f.build(seed))
            .map_err(|e| e.to_string()),
        _ => unreachable!("clap enforces exactly one source"),
    }
}

fn effective_seed(seed: Option<u64>, ci: bool) -> Result<u64, String> {
    if ci && seed.is_none() {
        return Err("--ci requires an explicit --seed".into());
    }
    Ok(seed.unwrap_or(0))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn emit_json<T: serde::Serialize>(output: Option<&PathBuf>, dto: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(dto).map_err(|e| e.to_string())?;
    text.push('\n');
    emit(output, &text)
}

fn cmd_solve(args: SolveArgs, ci: bool) -> Result<u8, String> {
    let seed = effective_seed(args.seed, ci)?;
    let g = load_graph(&args.source, seed)?;
    let force = args
        .force
        .as_deref()
        .map(|s| StrategyKind::parse(s).ok_or_else(|| format!("unknown strategy {s:?}")))
        .transpose()?;
    let opts = SolveOptions {
        seed,
        restarts: args.restarts,
        flip_factor: args.flip_factor,
        oracle_budget: args.oracle_budget,
        force,
    };
    let report = solve(&g, &opts);
    emit_json(args.output.as_ref(), &formats::solve_report_dto(&g, &report))?;
    Ok(match report.status {
        SolveStatus::Solved => 0,
        SolveStatus::NoWeightingExists => 1,
        SolveStatus::Unknown => 2,
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let g = load_graph(&args.source, 0)?;
    let text = fs::read_to_string(&args.weights)
        .map_err(|e| format!("{}: {e}", args.weights.display()))?;
    let w = formats::parse_weights(&g, &text)?;
    let outcome = verify_weighting(&g, &w).map_err(|e| e.to_string())?;
    emit_json(args.output.as_ref(), &formats::verify_dto(&outcome))?;
    Ok(if outcome.ok { 0 } else { 1 })
}

fn cmd_realize(args: RealizeArgs) -> Result<u8, String> {
    let g = load_graph(&args.source, 0)?;
    let text = fs::read_to_string(&args.targets)
        .map_err(|e| format!("{}: {e}", args.targets.display()))?;
    let (spec, targets) = formats::parse_targets(&g, &text)?;
    let result = if spec.is_binary() {
        realize_parity(&g, &targets)
    } else {
        realize_group_coloring(&g, &targets)
    };
    match result {
        Ok(real) => {
            let name = spec
                .moduli()
                .iter()
                .map(|m| format!("Z{m}"))
                .collect::<Vec<_>>()
                .join("x");
            emit_json(args.output.as_ref(), &formats::realize_dto(&g, &name, &real))?;
            Ok(0)
        }
        // these two are proofs of impossibility, not failures to find
        Err(e @ (Error::InfeasibleSum | Error::InfeasibleParity)) => {
            eprintln!("vcw: no realization exists: {e}");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, String> {
    let g = load_graph(&args.source, 0)?;
    let outcome = brute_force_weighting(&g, args.k, args.budget).map_err(|e| e.to_string())?;
    let exists = outcome.witness.is_some();
    emit_json(args.output.as_ref(), &formats::oracle_dto(&g, &outcome))?;
    Ok(if exists { 0 } else { 1 })
}

fn cmd_census(args: CensusArgs, ci: bool) -> Result<u8, String> {
    let seed = effective_seed(args.seed, ci)?;
    let opts = CensusOptions {
        max_n: args.max_n as usize,
        oracle_budget: args.oracle_budget,
        solve: SolveOptions {
            seed,
            ..SolveOptions::default()
        },
    };
    let jobs = args.jobs.max(1);
    let splits = census_splits(opts.max_n);
    let slots: Mutex<Vec<Option<Vec<CensusRow>>>> = Mutex::new(vec![None; splits.len()]);
    let next = AtomicUsize::new(0);
    let failure: Mutex<Option<String>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(splits.len()).max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= splits.len() {
                    break;
                }
                let (a, b) = splits[i];
                match census_split(a, b, &opts) {
                    Ok(rows) => slots.lock().unwrap()[i] = Some(rows),
                    Err(e) => {
                        *failure.lock().unwrap() = Some(e.to_string());
                        break;
                    }
                }
            });
        }
    });
    if let Some(msg) = failure.into_inner().unwrap() {
        return Err(msg);
    }
    // merged in split order, so any --jobs value emits identical bytes
    let rows: Vec<CensusRow> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every split ran"))
        .flatten()
        .collect();
    let mut text = String::new();
    for row in &rows {
        text.push_str(&census_jsonl_line(row));
        text.push('\n');
    }
    emit(args.output.as_ref(), &text)?;
    if let Some(path) = &args.summary {
        fs::write(path, census_summary_csv(&rows))
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(0)
}

fn cmd_gen(args: GenArgs, ci: bool) -> Result<u8, String> {
    let seed = effective_seed(args.seed, ci)?;
    let g = FamilySpec::parse(&args.family)
        .and_then(|f| f.build(seed))
        .map_err(|e| e.to_string())?;
    let text = match args.format.as_str() {
        "edgelist" => g.to_edge_list(),
        "json" => formats::graph_json(&g),
        other => return Err(format!("unknown format {other:?}, expected edgelist or json")),
    };
    emit(args.output.as_ref(), &text)?;
    Ok(0)
}
