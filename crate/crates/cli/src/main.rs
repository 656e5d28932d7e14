mod problem;

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, ensure, Context, Result};
use bcolor_core::bmcp::{check_multicoloring, group_by_origin, lift_solution};
use bcolor_core::coloring::first_violation;
use bcolor_core::io::{read_solution, write_solution};
use bcolor_core::oracle::{minimum_span, DEFAULT_VERTEX_LIMIT};
use bcolor_core::report::{
    ablation_rows, read_best_known, summarize, write_ablation_csv, write_bench_csv, write_runs_csv, RunRecord,
};
use bcolor_core::{greedy_ub, solve, CriteriaMask, GreedyOrder, RunResult, SolverConfig};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use problem::{load, Problem};

/// Variable neighborhood search for bandwidth coloring and multicoloring.
#[derive(Parser)]
#[command(name = "bcolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and write the best coloring found.
    Solve(SolveArgs),
    /// Repeat seeded runs over instances and report best, mean and hit counts.
    Bench(BenchArgs),
    /// Run every on/off combination of the three ordering criteria.
    Ablate(AblateArgs),
    /// Check a solution file against an instance.
    Verify(VerifyArgs),
    /// Exact minimum span of a small instance.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct Multicolor {
    /// Treat instances as multicoloring problems.
    #[arg(long)]
    bmcp: bool,
    /// Distance between colors of the same vertex when no self-loop line gives one.
    #[arg(long, default_value_t = 1)]
    loop_default: u32,
}

#[derive(Args)]
struct Solver {
    /// Wall-clock budget per run, in seconds.
    #[arg(long, default_value_t = 60.0)]
    time_limit: f64,
    /// Stop after this many shake/descent iterations.
    #[arg(long)]
    max_iters: Option<u64>,
    #[arg(long, default_value_t = 2)]
    kmin: usize,
    #[arg(long, default_value_t = 20)]
    kmax: usize,
    /// Probability of moving to an equally good candidate.
    #[arg(long, default_value_t = 0.5)]
    pmove: f64,
    /// Base seed; run i of a batch uses seed + i.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Start the search at this many colors instead of the greedy bound.
    #[arg(long)]
    start_k: Option<u32>,
    /// Vertex order for the greedy start: id or weight.
    #[arg(long, default_value = "id")]
    greedy_order: GreedyOrder,
}

impl Solver {
    fn config(&self, criteria: CriteriaMask) -> Result<SolverConfig> {
        let time_limit = Duration::try_from_secs_f64(self.time_limit)
            .with_context(|| format!("invalid --time-limit {}", self.time_limit))?;
        let config = SolverConfig {
            k_min: self.kmin,
            k_max: self.kmax,
            time_limit,
            max_iterations: self.max_iters,
            p_move: self.pmove,
            criteria,
            seed: self.seed,
            greedy_order: self.greedy_order,
            start_k: self.start_k,
            target_span: None,
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Vertex weights file; implies --bmcp.
    #[arg(long)]
    weights: Option<PathBuf>,
    #[command(flatten)]
    multicolor: Multicolor,
    #[command(flatten)]
    solver: Solver,
    /// Ordering criteria as three bits: conflicts, mid-distance, geometric mean.
    #[arg(long, default_value = "111")]
    criteria: CriteriaMask,
    /// Stop as soon as this span is reached.
    #[arg(long)]
    target: Option<u32>,
    /// Solution file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the improvement trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct Batch {
    /// Instance file; repeat for several.
    #[arg(long = "instance", required = true)]
    instances: Vec<PathBuf>,
    /// Weights file per instance, in the same order; implies --bmcp.
    #[arg(long = "weights")]
    weights: Vec<PathBuf>,
    #[command(flatten)]
    multicolor: Multicolor,
    #[command(flatten)]
    solver: Solver,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    /// CSV of `instance,best` reference spans.
    #[arg(long)]
    best_known: Option<PathBuf>,
    /// Report CSV; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-run CSV log.
    #[arg(long)]
    runs_out: Option<PathBuf>,
    /// Omit timing columns, making reports reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Stop each run once it reaches the reference span.
    #[arg(long)]
    stop_at_best: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    batch: Batch,
    #[arg(long, default_value = "111")]
    criteria: CriteriaMask,
}

#[derive(Args)]
struct AblateArgs {
    #[command(flatten)]
    batch: Batch,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    solution: PathBuf,
    #[arg(long)]
    weights: Option<PathBuf>,
    #[command(flatten)]
    multicolor: Multicolor,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    weights: Option<PathBuf>,
    #[command(flatten)]
    multicolor: Multicolor,
    /// Largest span to try; defaults to the greedy bound.
    #[arg(long)]
    max_span: Option<u32>,
    /// Refuse instances with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    max_vertices: usize,
    /// Write the optimal coloring here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Ablate(a) => cmd_ablate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

/// Lifts a multicoloring solution and checks it against the original
/// constraints; single-coloring results pass through.
fn check_result(problem: &Problem, result: &RunResult) -> Result<()> {
    if let Some((instance, map)) = &problem.bmcp {
        let mc = lift_solution(&problem.graph, map, &result.best_coloring)?;
        if let Some(v) = check_multicoloring(instance, &mc)? {
            bail!("lifted multicoloring is infeasible: {v}");
        }
        ensure!(mc.span() == result.k_star, "lifted span differs from k*");
    }
    Ok(())
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode> {
    let problem = load(
        &a.instance,
        a.weights.as_ref(),
        a.multicolor.bmcp,
        a.multicolor.loop_default,
    )?;
    let mut config = a.solver.config(a.criteria)?;
    config.target_span = a.target;
    let result = solve(&problem.graph, &config)?;
    check_result(&problem, &result)?;

    let mut out = output(a.out.as_deref())?;
    out.write_all(write_solution(&result.best_coloring, &problem.name).as_bytes())?;
    out.flush()?;

    if let Some(path) = &a.trace {
        let trace = serde_json::json!({
            "instance": problem.name,
            "seed": config.seed,
            "criteria": config.criteria.to_string(),
            "greedy_span": result.greedy_span,
            "k_star": result.k_star,
            "iterations": result.iterations,
            "elapsed_secs": result.elapsed.as_secs_f64(),
            "improvements": result.trace,
        });
        fs::write(path, serde_json::to_string_pretty(&trace)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    eprintln!(
        "{}: k*={} greedy={} time_to_best={:.3}s elapsed={:.3}s iterations={} seed={}",
        problem.name,
        result.k_star,
        result.greedy_span,
        result.elapsed_to_best.as_secs_f64(),
        result.elapsed.as_secs_f64(),
        result.iterations,
        config.seed
    );
    Ok(ExitCode::SUCCESS)
}

struct Loaded {
    problems: Vec<Problem>,
    best_known: BTreeMap<String, u32>,
}

fn load_batch(b: &Batch) -> Result<Loaded> {
    ensure!(b.runs > 0, "--runs must be positive");
    ensure!(b.jobs > 0, "--jobs must be positive");
    ensure!(
        b.weights.is_empty() || b.weights.len() == b.instances.len(),
        "got {} --weights for {} --instance",
        b.weights.len(),
        b.instances.len()
    );
    let problems = b
        .instances
        .iter()
        .enumerate()
        .map(|(i, p)| load(p, b.weights.get(i), b.multicolor.bmcp, b.multicolor.loop_default))
        .collect::<Result<Vec<_>>>()?;
    let best_known = match &b.best_known {
        Some(p) => read_best_known(File::open(p).with_context(|| format!("cannot read {}", p.display()))?)?,
        None => BTreeMap::new(),
    };
    if b.best_known.is_some() {
        for p in problems.iter().filter(|p| !best_known.contains_key(&p.name)) {
            eprintln!("warning: no reference span for {}", p.name);
        }
    }
    Ok(Loaded { problems, best_known })
}

/// Runs every `(instance, variant, run)` job and returns records sorted in
/// that order regardless of scheduling.
fn run_batch(b: &Batch, loaded: &Loaded, variants: &[CriteriaMask]) -> Result<Vec<RunRecord>> {
    let mut jobs = Vec::new();
    for (p, problem) in loaded.problems.iter().enumerate() {
        let mut config = b.solver.config(CriteriaMask::ALL)?;
        if b.stop_at_best {
            config.target_span = loaded.best_known.get(&problem.name).copied();
        }
        for &variant in variants {
            for run in 0..b.runs {
                let seed = b.solver.seed.wrapping_add(run as u64);
                let config = SolverConfig {
                    criteria: variant,
                    seed,
                    ..config.clone()
                };
                jobs.push((p, variant, run, config));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(b.jobs).build()?;
    let mut records = pool.install(|| {
        jobs.par_iter()
            .map(|(p, variant, run, config)| {
                let problem = &loaded.problems[*p];
                let result = solve(&problem.graph, config)?;
                check_result(problem, &result)?;
                Ok((
                    *p,
                    RunRecord {
                        instance: problem.name.clone(),
                        variant: *variant,
                        run: *run,
                        seed: config.seed,
                        k_star: result.k_star,
                        greedy_span: result.greedy_span,
                        time_to_best: result.elapsed_to_best.as_secs_f64(),
                        iterations_to_best: result.iterations_to_best,
                        iterations: result.iterations,
                    },
                ))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    records.sort_by_key(|(p, r)| (*p, r.variant.to_string(), r.run));
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

fn write_runs(b: &Batch, records: &[RunRecord]) -> Result<()> {
    if let Some(path) = &b.runs_out {
        write_runs_csv(output(Some(path))?, records, !b.no_timing)?;
    }
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<ExitCode> {
    let b = &a.batch;
    let loaded = load_batch(b)?;
    let records = run_batch(b, &loaded, &[a.criteria])?;
    let rows: Vec<_> = loaded
        .problems
        .iter()
        .map(|p| {
            let runs: Vec<_> = records.iter().filter(|r| r.instance == p.name).cloned().collect();
            summarize(&p.name, p.n, p.m, &runs, loaded.best_known.get(&p.name).copied())
        })
        .collect();
    write_bench_csv(output(b.out.as_deref())?, &rows, !b.no_timing)?;
    write_runs(b, &records)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ablate(a: AblateArgs) -> Result<ExitCode> {
    let b = &a.batch;
    let loaded = load_batch(b)?;
    let records = run_batch(b, &loaded, &CriteriaMask::variants())?;
    write_ablation_csv(output(b.out.as_deref())?, &ablation_rows(&records))?;
    write_runs(b, &records)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let problem = load(
        &a.instance,
        a.weights.as_ref(),
        a.multicolor.bmcp,
        a.multicolor.loop_default,
    )?;
    let text = fs::read_to_string(&a.solution).with_context(|| format!("cannot read {}", a.solution.display()))?;
    let solution = read_solution(&text, problem.graph.n()).with_context(|| format!("in {}", a.solution.display()))?;
    let coloring = solution.coloring;
    let violation = match &problem.bmcp {
        Some((instance, map)) => {
            check_multicoloring(instance, &group_by_origin(map, &coloring)?)?.map(|v| v.to_string())
        }
        None => first_violation(&problem.graph, &coloring)?.map(|v| v.to_string()),
    };
    match violation {
        Some(v) => {
            println!("infeasible: {v}");
            Ok(ExitCode::from(1))
        }
        None => {
            println!("feasible span {}", coloring.span());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_oracle(a: OracleArgs) -> Result<ExitCode> {
    let problem = load(
        &a.instance,
        a.weights.as_ref(),
        a.multicolor.bmcp,
        a.multicolor.loop_default,
    )?;
    let max_span = a
        .max_span
        .unwrap_or_else(|| greedy_ub(&problem.graph, GreedyOrder::Id).span());
    match minimum_span(&problem.graph, max_span, a.max_vertices)? {
        Some(coloring) => {
            println!("minimum span {}", coloring.span());
            if let Some(path) = &a.out {
                fs::write(path, write_solution(&coloring, &problem.name))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
        }
        None => println!("none <= {max_span}"),
    }
    Ok(ExitCode::SUCCESS)
}
