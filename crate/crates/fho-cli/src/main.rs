//! `fho` — command-line front-end for the Fuzzy Hunter Optimizer.
//!
//! Subcommands: `list` (problem catalog), `solve` (one problem, replicated),
//! `bench` (the 10-function benchmark suite, optionally plus the engineering
//! trio), `levy-check` (step-sampler tail diagnostics), and `oracle-check`
//! (re-evaluation of recorded best-known solutions).
//!
//! Exit codes: 0 success, 1 usage error (bad flags, unknown problem),
//! 2 numerical or I/O failure during a run.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use fho::core::{DriftSign, FhoConfig};
use fho::error::{FhoError, Result};
use fho::geometry::{RadiiMode, RadiiSpec, VisibilityRadii};
use fho::harness::{
    oracle_check, run_experiment, run_suite, ExperimentSpec, ExperimentStats, OutputSet,
};
use fho::problems::{catalog, problem_by_name, PenaltyStrategy, DEFAULT_FEASIBILITY_TOLERANCE};
use fho::stochastic::{hill_estimate, levy_step, survival_curve, LevyParams, RngStream};

#[derive(Parser)]
#[command(
    name = "fho",
    version,
    about = "Fuzzy Hunter Optimizer: Lévy-walk metaheuristic with fuzzy visibility"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the problem catalog (name, dimension, bounds, constraints,
    /// known optimum)
    List {
        /// Emit the catalog as a JSON array instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Solve one catalog problem with replicated, seeded runs
    Solve {
        /// Problem name (see `fho list`)
        problem: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run the 10-function benchmark suite (30-D, 30 replicates by default)
    Bench {
        /// Also run the cantilever, pressure-vessel, and spring problems
        #[arg(long)]
        include_engineering: bool,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Draw Lévy steps and report tail-index and symmetry diagnostics
    LevyCheck {
        /// Number of steps to draw
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        /// Stability index of the sampler, in (0, 2]
        #[arg(long, default_value_t = FhoConfig::default().beta)]
        beta: f64,
        /// Seed for the sample stream
        #[arg(long, default_value_t = FhoConfig::default().seed)]
        seed: u64,
        /// Directory for the log-log survival-curve CSV
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the diagnostics as JSON
        #[arg(long)]
        json: bool,
    },
    /// Re-evaluate the recorded best-known engineering solutions
    OracleCheck {
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
}

/// Run-shaping flags shared by `solve` and `bench`. Every default equals
/// the library's config default.
#[derive(Args)]
struct RunOpts {
    /// Base seed; replicate k runs on child stream k
    #[arg(long, default_value_t = FhoConfig::default().seed)]
    seed: u64,

    /// Number of hunters (at least 2)
    #[arg(long, default_value_t = FhoConfig::default().population)]
    population: usize,

    /// Number of sweeps per run (at least 1)
    #[arg(long, default_value_t = FhoConfig::default().max_iterations)]
    iterations: usize,

    /// Number of independent replicates
    #[arg(long, default_value_t = 30)]
    replicates: usize,

    /// Drift weight applied to the visibility-gated pull
    #[arg(long, default_value_t = FhoConfig::default().w)]
    w: f64,

    /// Lévy stability index, in (0, 2]
    #[arg(long, default_value_t = FhoConfig::default().beta)]
    beta: f64,

    /// Lévy scale as a fraction of each dimension's range
    #[arg(long, default_value_t = FhoConfig::default().step_scale)]
    step_scale: f64,

    /// Recipe for the visibility radii
    #[arg(long, value_enum, default_value_t = RadiiModeArg::Practical)]
    radii_mode: RadiiModeArg,

    /// Explicit full-visibility radius (needs --r-zero too; overrides
    /// --radii-mode)
    #[arg(long)]
    r_full: Option<f64>,

    /// Explicit zero-visibility radius (needs --r-full too; overrides
    /// --radii-mode)
    #[arg(long)]
    r_zero: Option<f64>,

    /// Drift direction relative to the food source
    #[arg(long, value_enum, default_value_t = DriftSignArg::TowardFood)]
    drift_sign: DriftSignArg,

    /// Constraint handling for constrained problems [default: the
    /// problem's documented pairing]
    #[arg(long, value_enum)]
    penalty: Option<PenaltyArg>,

    /// Weight of every additive-penalty term
    #[arg(long, default_value_t = 1.0)]
    penalty_weight: f64,

    /// Dimension override for the scalable benchmarks f1-f10 [default:
    /// each problem's own]
    #[arg(long)]
    dimension: Option<usize>,

    /// Threads running replicates concurrently (never changes results)
    #[arg(long, default_value_t = 1)]
    workers: usize,

    /// Directory to write artifact files (summary CSV, histories JSON,
    /// solutions JSON)
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report the sample standard deviation (divide by N-1) instead of the
    /// population one
    #[arg(long)]
    sample_std: bool,

    /// Emit results as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RadiiModeArg {
    /// r_full = 0.01 and r_zero = 0.1 of the box diameter
    Practical,
    /// r_zero = 10^-n of the box diameter, r_full = 0.8 r_zero
    DimensionScaled,
}

impl From<RadiiModeArg> for RadiiMode {
    fn from(arg: RadiiModeArg) -> Self {
        match arg {
            RadiiModeArg::Practical => RadiiMode::Practical,
            RadiiModeArg::DimensionScaled => RadiiMode::DimensionScaled,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DriftSignArg {
    /// Hunters drift toward the incumbent best
    TowardFood,
    /// Hunters drift away from it (contrast experiments)
    AwayFromFood,
}

impl From<DriftSignArg> for DriftSign {
    fn from(arg: DriftSignArg) -> Self {
        match arg {
            DriftSignArg::TowardFood => DriftSign::TowardFood,
            DriftSignArg::AwayFromFood => DriftSign::AwayFromFood,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PenaltyArg {
    /// Add weighted violation magnitudes to the objective
    Additive,
    /// Rank infeasible points by satisfied-constraint count
    FeasibilityCount,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                FhoError::Parameter(_) | FhoError::UnknownProblem { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List { json } => {
            list(json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { problem, opts } => solve(&problem, &opts),
        Command::Bench {
            include_engineering,
            opts,
        } => bench(include_engineering, &opts),
        Command::LevyCheck {
            samples,
            beta,
            seed,
            out,
            json,
        } => {
            levy_check(samples, beta, seed, out.as_deref(), json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck { json } => oracle(json),
    }
}

fn list(json: bool) -> Result<()> {
    let entries = catalog();
    if json {
        println!("{}", serde_json::to_string_pretty(&entries)?);
        return Ok(());
    }
    println!(
        "{:<16} {:>4}  {:<28} {:>11}  known optimum",
        "problem", "dim", "box", "constraints"
    );
    for e in entries {
        let optimum = e
            .known_optimum
            .map_or_else(|| "-".to_string(), |v| format!("{v}"));
        println!(
            "{:<16} {:>4}  {:<28} {:>11}  {}",
            e.name,
            e.dimension,
            format_box(&e.lower, &e.upper),
            e.constraints,
            optimum
        );
    }
    Ok(())
}

fn format_box(lower: &[f64], upper: &[f64]) -> String {
    let uniform = lower.windows(2).all(|w| w[0] == w[1])
        && upper.windows(2).all(|w| w[0] == w[1]);
    if uniform && lower.len() > 1 {
        format!("[{}, {}]^{}", lower[0], upper[0], lower.len())
    } else {
        lower
            .iter()
            .zip(upper)
            .map(|(lo, hi)| format!("[{lo}, {hi}]"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Builds the optimizer config from the shared flags.
fn build_config(opts: &RunOpts) -> Result<FhoConfig> {
    let radii = match (opts.r_full, opts.r_zero) {
        (None, None) => RadiiSpec::Mode(opts.radii_mode.into()),
        (Some(full), Some(zero)) => RadiiSpec::Explicit(VisibilityRadii::new(full, zero)?),
        _ => {
            return Err(FhoError::Parameter(
                "--r-full and --r-zero must be given together".into(),
            ))
        }
    };
    Ok(FhoConfig {
        w: opts.w,
        beta: opts.beta,
        step_scale: opts.step_scale,
        drift_sign: opts.drift_sign.into(),
        radii,
        population: opts.population,
        max_iterations: opts.iterations,
        seed: opts.seed,
        ..FhoConfig::default()
    })
}

/// Builds the penalty strategy when one was requested on the command line;
/// `None` defers to the problem's documented default pairing.
fn build_penalty(opts: &RunOpts, problem_name: &str, dimension: Option<usize>) -> Result<Option<PenaltyStrategy>> {
    let Some(arg) = opts.penalty else {
        return Ok(None);
    };
    let problem = problem_by_name(problem_name, dimension)?;
    Ok(Some(match arg {
        PenaltyArg::Additive => PenaltyStrategy::uniform_additive(
            opts.penalty_weight,
            problem.constraint_count(),
            problem.equality_count(),
        ),
        PenaltyArg::FeasibilityCount => PenaltyStrategy::feasibility_count(),
    }))
}

fn build_spec(problem: &str, opts: &RunOpts, outputs: OutputSet) -> Result<ExperimentSpec> {
    Ok(ExperimentSpec {
        problem: problem.to_string(),
        dimension: opts.dimension,
        config: build_config(opts)?,
        replicates: opts.replicates,
        outputs,
        penalty: build_penalty(opts, problem, opts.dimension)?,
        sample_std: opts.sample_std,
    })
}

fn solve(problem: &str, opts: &RunOpts) -> Result<ExitCode> {
    let spec = build_spec(problem, opts, OutputSet::all())?;
    let stats = run_experiment(&spec, opts.out.as_deref(), opts.workers)?;
    if opts.json {
        println!("{}", serde_json::to_string_pretty(&stats)?);
    } else {
        print_stats(&stats);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_stats(stats: &ExperimentStats) {
    println!("problem:        {} ({}-D)", stats.problem, stats.dimension);
    println!(
        "replicates:     {} (population {}, {} iterations, seed {})",
        stats.replicates, stats.population, stats.iterations, stats.seed
    );
    println!("min:            {:.10e}", stats.min);
    println!("mean:           {:.10e}", stats.mean);
    println!("std:            {:.10e}", stats.std);
    println!("best position:  {}", format_vector(&stats.best_solution));
    match (&stats.best_feasible_fitness, &stats.best_feasible_solution) {
        (Some(fitness), Some(position)) => {
            println!("best feasible:  {:.10e}", fitness);
            println!("  at position:  {}", format_vector(position));
            if let Ok(p) = problem_by_name(&stats.problem, Some(stats.dimension)) {
                let report =
                    fho::problems::constraint_report(&p, position, DEFAULT_FEASIBILITY_TOLERANCE);
                println!(
                    "  constraints:  {} (max violation {:.3e})",
                    format_vector(&report.values),
                    report.max_violation
                );
            }
        }
        _ => {
            if let Ok(p) = problem_by_name(&stats.problem, Some(stats.dimension)) {
                if p.constraint_count() > 0 {
                    println!(
                        "best feasible:  none (no replicate feasible at {:.0e})",
                        DEFAULT_FEASIBILITY_TOLERANCE
                    );
                }
            }
        }
    }
}

fn format_vector(values: &[f64]) -> String {
    let body = values
        .iter()
        .map(|v| format!("{v:.6e}"))
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{body}]")
}

fn bench(include_engineering: bool, opts: &RunOpts) -> Result<ExitCode> {
    let mut names: Vec<&str> = vec!["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10"];
    if include_engineering {
        names.extend(["cantilever", "pressure-vessel", "spring"]);
    }
    let outputs = OutputSet {
        summary: true,
        histories: false,
        solutions: true,
    };
    let specs: Vec<ExperimentSpec> = names
        .iter()
        .map(|name| build_spec(name, opts, outputs))
        .collect::<Result<_>>()?;
    let outcome = run_suite(&specs, opts.out.as_deref(), opts.workers)?;

    if opts.json {
        println!("{}", serde_json::to_string_pretty(&outcome.stats)?);
    } else {
        println!(
            "{:<16} {:>4}  {:>24} {:>24} {:>24}",
            "problem", "dim", "min", "mean", "std"
        );
        for stats in &outcome.stats {
            println!(
                "{:<16} {:>4}  {:>24.16e} {:>24.16e} {:>24.16e}",
                stats.problem, stats.dimension, stats.min, stats.mean, stats.std
            );
        }
    }
    for (problem, error) in &outcome.failures {
        eprintln!("error: {problem}: {error}");
    }
    Ok(if outcome.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn levy_check(
    samples: usize,
    beta: f64,
    seed: u64,
    out: Option<&std::path::Path>,
    json: bool,
) -> Result<()> {
    if samples < 1000 {
        return Err(FhoError::Parameter(format!(
            "levy-check needs at least 1000 samples; got {samples}"
        )));
    }
    let params = LevyParams::new(beta)?;
    let mut rng = RngStream::new(seed);
    let steps: Vec<f64> = (0..samples).map(|_| levy_step(&mut rng, &params)).collect();
    let hill = hill_estimate(&steps, samples / 100);
    let mean_sign = steps.iter().map(|s| s.signum()).sum::<f64>() / samples as f64;

    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let mut csv = String::from("magnitude,survival\n");
        for (magnitude, survival) in survival_curve(&steps, 200) {
            csv.push_str(&format!("{magnitude:.16e},{survival:.16e}\n"));
        }
        std::fs::write(dir.join("levy_survival.csv"), csv)?;
    }

    if json {
        println!(
            "{}",
            serde_json::json!({
                "beta": beta,
                "sigma_u": params.sigma_u(),
                "samples": samples,
                "seed": seed,
                "hill_tail_index": hill,
                "mean_sign": mean_sign,
            })
        );
    } else {
        println!("beta:            {beta}");
        println!("sigma_u:         {:.10}", params.sigma_u());
        println!("samples:         {samples} (seed {seed})");
        println!("hill tail index: {hill:.4} (expected near {beta})");
        println!("mean sign:       {mean_sign:+.5} (expected near 0)");
    }
    Ok(())
}

fn oracle(json: bool) -> Result<ExitCode> {
    let report = oracle_check();
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for row in &report.rows {
            println!(
                "{:<16} objective {:.10} reference {:.10} delta {:+.3e} (tolerance {:.0e}) {}",
                row.problem,
                row.objective,
                row.reference,
                row.delta,
                row.tolerance,
                if row.objective_ok { "ok" } else { "MISMATCH" }
            );
            println!("  constraints:   {}", format_vector(&row.constraints));
        }
        println!("result: {}", if report.passed { "pass" } else { "fail" });
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
