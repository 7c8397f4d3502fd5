//! Experiment orchestration: replicated runs, summary statistics,
//! reference-solution checks, and flat-file artifacts (CSV + JSON).
//!
//! The protocol mirrors the standard comparison setup: a population of 30
//! run for 500 iterations, replicated 30 times independently, reported as
//! min / mean / standard deviation of the final best fitnesses. Everything
//! is deterministic given the base seed: replicate `k` runs on child stream
//! `k`, results are collected in replicate order regardless of worker
//! count, and floats are serialized at full precision, so repeated
//! invocations produce byte-identical artifacts.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::core::{run_with_stream, FhoConfig, RunResult};
use crate::error::{FhoError, Result};
use crate::problems::{
    constraint_report, penalize, problem_by_name, ConstraintReport, PenaltyStrategy, Problem,
    DEFAULT_FEASIBILITY_TOLERANCE,
};
use crate::stochastic::RngStream;

/// Which artifact files an experiment writes (when an output directory is
/// given).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OutputSet {
    /// `<problem>_summary.csv`: one aggregated statistics row.
    pub summary: bool,
    /// `<problem>_histories.json`: per-replicate convergence histories.
    pub histories: bool,
    /// `<problem>_solutions.json`: best position and constraint report.
    pub solutions: bool,
}

impl OutputSet {
    /// All three artifact kinds.
    pub fn all() -> Self {
        Self {
            summary: true,
            histories: true,
            solutions: true,
        }
    }

    /// No files; results are returned in memory only.
    pub fn none() -> Self {
        Self {
            summary: false,
            histories: false,
            solutions: false,
        }
    }
}

impl Default for OutputSet {
    fn default() -> Self {
        Self::all()
    }
}

/// A complete description of one experiment: which problem, how the
/// optimizer is configured, how many replicates, and what gets written.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    /// Catalog name of the problem to solve.
    pub problem: String,
    /// Dimension override for the scalable benchmarks; `None` uses the
    /// problem's default.
    pub dimension: Option<usize>,
    /// Optimizer configuration shared by every replicate.
    pub config: FhoConfig,
    /// Number of independent replicates (≥ 1).
    pub replicates: usize,
    /// Which artifact files to write.
    pub outputs: OutputSet,
    /// Constraint handling for constrained problems; `None` picks the
    /// problem's default strategy. Ignored by unconstrained problems.
    pub penalty: Option<PenaltyStrategy>,
    /// Report the sample standard deviation (divide by N − 1) instead of
    /// the population one (divide by N, the default).
    pub sample_std: bool,
}

impl ExperimentSpec {
    /// A spec with the documented defaults: 30 replicates, default config,
    /// all artifacts, default penalty pairing, population std.
    pub fn new(problem: impl Into<String>) -> Self {
        Self {
            problem: problem.into(),
            dimension: None,
            config: FhoConfig::default(),
            replicates: 30,
            outputs: OutputSet::all(),
            penalty: None,
            sample_std: false,
        }
    }
}

/// Aggregated outcome of a replicated experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentStats {
    /// Problem name as given in the [`ExperimentSpec`].
    pub problem: String,
    /// Actual dimension the problem was instantiated at.
    pub dimension: usize,
    /// Number of replicates aggregated.
    pub replicates: usize,
    /// Population size used.
    pub population: usize,
    /// Iteration count used.
    pub iterations: usize,
    /// Base seed; replicate `k` used child stream `k`.
    pub seed: u64,
    /// Minimum of `per_run` (the best final fitness across replicates).
    pub min: f64,
    /// Mean of `per_run`.
    pub mean: f64,
    /// Standard deviation of `per_run` (population unless `sample_std`).
    pub std: f64,
    /// Final best fitness of each replicate, in replicate order. For
    /// constrained problems these are penalized values.
    pub per_run: Vec<f64>,
    /// Position of the replicate attaining `min`.
    pub best_solution: Vec<f64>,
    /// Lowest raw objective among replicates whose best position is
    /// feasible at the default tolerance; `None` when the problem is
    /// unconstrained or no replicate ended feasible.
    pub best_feasible_fitness: Option<f64>,
    /// Position attaining `best_feasible_fitness`.
    pub best_feasible_solution: Option<Vec<f64>>,
}

/// The summary CSV header.
pub const SUMMARY_HEADER: &str =
    "problem,dimension,replicates,population,iterations,seed,min,mean,std";

/// One summary CSV row for a stats record, floats at full round-trip
/// precision (17 significant digits).
pub fn summary_row(stats: &ExperimentStats) -> String {
    format!(
        "{},{},{},{},{},{},{:.16e},{:.16e},{:.16e}",
        stats.problem,
        stats.dimension,
        stats.replicates,
        stats.population,
        stats.iterations,
        stats.seed,
        stats.min,
        stats.mean,
        stats.std
    )
}

#[derive(Serialize)]
struct HistoryEntry<'a> {
    seed: u64,
    final_best: f64,
    history: &'a [f64],
}

#[derive(Serialize)]
struct FeasibleSolution<'a> {
    fitness: f64,
    position: &'a [f64],
    constraints: ConstraintReport,
}

#[derive(Serialize)]
struct SolutionsArtifact<'a> {
    problem: &'a str,
    dimension: usize,
    best_fitness: f64,
    best_position: &'a [f64],
    objective: f64,
    constraints: ConstraintReport,
    best_feasible: Option<FeasibleSolution<'a>>,
}

/// Runs one experiment: resolves the problem, applies the penalty strategy
/// (constrained problems only), executes the replicates on `workers`
/// threads, aggregates, and writes the requested artifacts into `out_dir`.
///
/// Results are identical for any worker count; artifacts are byte-identical
/// across repeated invocations.
///
/// # Errors
/// Unknown problems, invalid configs, `replicates = 0` or `workers = 0`,
/// a failing replicate (reported with its index), and I/O failures.
pub fn run_experiment(
    spec: &ExperimentSpec,
    out_dir: Option<&Path>,
    workers: usize,
) -> Result<ExperimentStats> {
    if spec.replicates == 0 {
        return Err(FhoError::Parameter(
            "replicates must be at least 1".into(),
        ));
    }
    // Reject a bad config here, as a parameter error, rather than letting
    // every replicate fail with the same wrapped message.
    spec.config.validate()?;
    let problem = problem_by_name(&spec.problem, spec.dimension)?;
    let strategy = spec.penalty.clone().or_else(|| problem.default_penalty());
    let solved = match &strategy {
        Some(s) => penalize(&problem, s)?,
        None => problem.clone(),
    };
    let results = run_replicates(&solved, &spec.config, spec.replicates, workers)?;
    let stats = aggregate(spec, &problem, &results);

    if let Some(dir) = out_dir {
        write_artifacts(spec, &problem, &stats, &results, dir)?;
    }
    Ok(stats)
}

/// Executes `replicates` runs, replicate `k` on child stream `k`, collected
/// in replicate order. `workers = 1` runs inline; more workers share a
/// dedicated thread pool.
fn run_replicates(
    problem: &Problem,
    config: &FhoConfig,
    replicates: usize,
    workers: usize,
) -> Result<Vec<RunResult>> {
    if workers == 0 {
        return Err(FhoError::Parameter(
            "workers must be at least 1".into(),
        ));
    }
    let one = |k: usize| -> Result<RunResult> {
        let mut rng = RngStream::child(config.seed, k as u64);
        run_with_stream(problem, config, &mut rng).map_err(|e| FhoError::Replicate {
            index: k,
            source: Box::new(e),
        })
    };
    if workers == 1 {
        (0..replicates).map(one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| FhoError::Parameter(format!("cannot build worker pool: {e}")))?;
        // Parallel collect preserves index order, so the outcome cannot
        // depend on scheduling.
        pool.install(|| (0..replicates).into_par_iter().map(one).collect())
    }
}

fn aggregate(spec: &ExperimentSpec, problem: &Problem, results: &[RunResult]) -> ExperimentStats {
    let per_run: Vec<f64> = results.iter().map(|r| r.best_fitness).collect();
    let mut best_index = 0;
    for (i, value) in per_run.iter().enumerate() {
        if *value < per_run[best_index] {
            best_index = i;
        }
    }
    let mean = per_run.iter().sum::<f64>() / per_run.len() as f64;
    let std = standard_deviation(&per_run, mean, spec.sample_std);

    let (best_feasible_fitness, best_feasible_solution) = if problem.constraint_count() > 0 {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for result in results {
            let report =
                constraint_report(problem, &result.best_position, DEFAULT_FEASIBILITY_TOLERANCE);
            if report.feasible {
                let objective = problem.evaluate(&result.best_position);
                if best.as_ref().is_none_or(|(f, _)| objective < *f) {
                    best = Some((objective, result.best_position.clone()));
                }
            }
        }
        match best {
            Some((f, x)) => (Some(f), Some(x)),
            None => (None, None),
        }
    } else {
        (None, None)
    };

    ExperimentStats {
        problem: spec.problem.clone(),
        dimension: problem.dimension(),
        replicates: results.len(),
        population: spec.config.population,
        iterations: spec.config.max_iterations,
        seed: spec.config.seed,
        min: per_run[best_index],
        mean,
        std,
        best_solution: results[best_index].best_position.clone(),
        per_run,
        best_feasible_fitness,
        best_feasible_solution,
    }
}

fn standard_deviation(values: &[f64], mean: f64, sample: bool) -> f64 {
    let n = values.len() as f64;
    let sum_sq: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
    if sample {
        if values.len() < 2 {
            0.0
        } else {
            (sum_sq / (n - 1.0)).sqrt()
        }
    } else {
        (sum_sq / n).sqrt()
    }
}

fn write_artifacts(
    spec: &ExperimentSpec,
    problem: &Problem,
    stats: &ExperimentStats,
    results: &[RunResult],
    dir: &Path,
) -> Result<()> {
    fs::create_dir_all(dir)?;
    if spec.outputs.summary {
        let mut csv = String::from(SUMMARY_HEADER);
        csv.push('\n');
        csv.push_str(&summary_row(stats));
        csv.push('\n');
        fs::write(artifact_path(dir, &stats.problem, "summary.csv"), csv)?;
    }
    if spec.outputs.histories {
        let entries: Vec<HistoryEntry> = results
            .iter()
            .map(|r| HistoryEntry {
                seed: r.seed,
                final_best: r.best_fitness,
                history: &r.history,
            })
            .collect();
        let mut json = serde_json::to_string_pretty(&entries)?;
        json.push('\n');
        fs::write(artifact_path(dir, &stats.problem, "histories.json"), json)?;
    }
    if spec.outputs.solutions {
        let report = constraint_report(problem, &stats.best_solution, DEFAULT_FEASIBILITY_TOLERANCE);
        let best_feasible = match (&stats.best_feasible_fitness, &stats.best_feasible_solution) {
            (Some(fitness), Some(position)) => Some(FeasibleSolution {
                fitness: *fitness,
                position,
                constraints: constraint_report(problem, position, DEFAULT_FEASIBILITY_TOLERANCE),
            }),
            _ => None,
        };
        let artifact = SolutionsArtifact {
            problem: &stats.problem,
            dimension: stats.dimension,
            best_fitness: stats.min,
            best_position: &stats.best_solution,
            objective: problem.evaluate(&stats.best_solution),
            constraints: report,
            best_feasible,
        };
        let mut json = serde_json::to_string_pretty(&artifact)?;
        json.push('\n');
        fs::write(artifact_path(dir, &stats.problem, "solutions.json"), json)?;
    }
    Ok(())
}

fn artifact_path(dir: &Path, problem: &str, suffix: &str) -> PathBuf {
    dir.join(format!("{problem}_{suffix}"))
}

/// Outcome of a multi-experiment suite: successful rows in input order plus
/// the experiments that failed (reported, not fatal).
#[derive(Debug)]
pub struct SuiteOutcome {
    /// Stats of the successful experiments, in input order.
    pub stats: Vec<ExperimentStats>,
    /// `(problem, error)` for every spec that failed.
    pub failures: Vec<(String, FhoError)>,
}

impl SuiteOutcome {
    /// True when every spec succeeded.
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs a list of experiments in input order and writes one combined
/// `summary.csv` (plus each experiment's own artifacts) into `out_dir`.
/// A failing spec is recorded in the outcome and does not stop the rest.
///
/// # Errors
/// An empty spec list is a usage error; I/O failures writing the combined
/// summary abort.
pub fn run_suite(
    specs: &[ExperimentSpec],
    out_dir: Option<&Path>,
    workers: usize,
) -> Result<SuiteOutcome> {
    if specs.is_empty() {
        return Err(FhoError::Parameter(
            "suite needs at least one experiment".into(),
        ));
    }
    let mut outcome = SuiteOutcome {
        stats: Vec::with_capacity(specs.len()),
        failures: Vec::new(),
    };
    for spec in specs {
        match run_experiment(spec, out_dir, workers) {
            Ok(stats) => outcome.stats.push(stats),
            Err(error) => outcome.failures.push((spec.problem.clone(), error)),
        }
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        let mut csv = String::from(SUMMARY_HEADER);
        csv.push('\n');
        for stats in &outcome.stats {
            csv.push_str(&summary_row(stats));
            csv.push('\n');
        }
        fs::write(dir.join("summary.csv"), csv)?;
    }
    Ok(outcome)
}

/// One row of the reference-solution check.
#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    /// Problem the reference solution belongs to.
    pub problem: String,
    /// The recorded best-known position.
    pub position: Vec<f64>,
    /// Objective value recomputed at `position`.
    pub objective: f64,
    /// The recorded best-known objective value.
    pub reference: f64,
    /// `objective − reference`.
    pub delta: f64,
    /// Permitted |delta| for this problem.
    pub tolerance: f64,
    /// Whether |delta| ≤ tolerance.
    pub objective_ok: bool,
    /// Constraint values at `position`, for audit.
    pub constraints: Vec<f64>,
}

/// Result of re-evaluating the recorded best-known engineering solutions.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    /// One row per engineering problem, catalog order.
    pub rows: Vec<OracleRow>,
    /// True when every objective delta is within its tolerance.
    pub passed: bool,
}

/// Re-evaluates the recorded best-known solution of each engineering
/// problem under the implemented objectives and constraints.
///
/// The check gates on the objective deltas; constraint values are included
/// for audit. (The recorded pressure-vessel position carries a volume
/// residual of about +1.2e−3 — see the frozen regression tests in the
/// problems module — so a constraint gate at 1e−3 would reject a
/// faithfully reproduced reference.)
pub fn oracle_check() -> OracleReport {
    let tolerances = [
        ("cantilever", 1e-6),
        ("pressure-vessel", 0.5),
        ("spring", 1e-5),
    ];
    let rows: Vec<OracleRow> = tolerances
        .iter()
        .map(|(name, tolerance)| {
            let problem = problem_by_name(name, None).expect("engineering names are valid");
            let position = problem
                .known_argmin()
                .expect("engineering problems record an argmin")
                .to_vec();
            let objective = problem.evaluate(&position);
            let reference = problem
                .known_optimum()
                .expect("engineering problems record an optimum");
            let delta = objective - reference;
            OracleRow {
                problem: (*name).to_string(),
                objective,
                reference,
                delta,
                tolerance: *tolerance,
                objective_ok: delta.abs() <= *tolerance,
                constraints: problem.constraint_values(&position),
                position,
            }
        })
        .collect();
    OracleReport {
        passed: rows.iter().all(|r| r.objective_ok),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use tempfile::tempdir;

    /// A spec small enough for sub-second tests; seeds and sizes chosen
    /// arbitrarily but fixed.
    fn small_spec(problem: &str) -> ExperimentSpec {
        ExperimentSpec {
            replicates: 5,
            config: FhoConfig {
                population: 10,
                max_iterations: 40,
                seed: 2024,
                ..FhoConfig::default()
            },
            ..ExperimentSpec::new(problem)
        }
    }

    #[test]
    fn stats_satisfy_order_relations() {
        let stats = run_experiment(&small_spec("f1"), None, 1).unwrap();
        assert_eq!(stats.per_run.len(), 5);
        assert_eq!(
            stats.min,
            stats.per_run.iter().cloned().fold(f64::INFINITY, f64::min)
        );
        assert!(stats.min <= stats.mean);
        assert!(stats.std >= 0.0);
        let recomputed_mean = stats.per_run.iter().sum::<f64>() / stats.per_run.len() as f64;
        assert_relative_eq!(stats.mean, recomputed_mean, max_relative = 1e-12);
    }

    #[test]
    fn single_replicate_collapses_the_statistics() {
        let spec = ExperimentSpec {
            replicates: 1,
            ..small_spec("f7")
        };
        let stats = run_experiment(&spec, None, 1).unwrap();
        assert_eq!(stats.min, stats.mean);
        assert_eq!(stats.std, 0.0);
    }

    #[test]
    fn sample_std_relates_to_population_std_by_the_bessel_factor() {
        let population = run_experiment(&small_spec("f1"), None, 1).unwrap();
        let sample = run_experiment(
            &ExperimentSpec {
                sample_std: true,
                ..small_spec("f1")
            },
            None,
            1,
        )
        .unwrap();
        let n = population.per_run.len() as f64;
        assert_relative_eq!(
            sample.std,
            population.std * (n / (n - 1.0)).sqrt(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn artifacts_are_byte_identical_across_invocations_and_worker_counts() {
        let spec = small_spec("f10");
        let read = |dir: &Path| -> (Vec<u8>, Vec<u8>, Vec<u8>) {
            (
                fs::read(dir.join("f10_summary.csv")).unwrap(),
                fs::read(dir.join("f10_histories.json")).unwrap(),
                fs::read(dir.join("f10_solutions.json")).unwrap(),
            )
        };
        let d1 = tempdir().unwrap();
        let d2 = tempdir().unwrap();
        let d3 = tempdir().unwrap();
        run_experiment(&spec, Some(d1.path()), 1).unwrap();
        run_experiment(&spec, Some(d2.path()), 1).unwrap();
        run_experiment(&spec, Some(d3.path()), 3).unwrap();
        assert_eq!(read(d1.path()), read(d2.path()), "repeat invocation differs");
        assert_eq!(read(d1.path()), read(d3.path()), "worker count changed output");
    }

    #[test]
    fn summary_row_recomputes_from_the_histories_artifact() {
        let spec = small_spec("f3");
        let dir = tempdir().unwrap();
        run_experiment(&spec, Some(dir.path()), 2).unwrap();

        let csv = fs::read_to_string(dir.path().join("f3_summary.csv")).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), SUMMARY_HEADER);
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "f3");
        let (min, mean, std): (f64, f64, f64) = (
            row[6].parse().unwrap(),
            row[7].parse().unwrap(),
            row[8].parse().unwrap(),
        );

        let histories: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join("f3_histories.json")).unwrap())
                .unwrap();
        let finals: Vec<f64> = histories
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["final_best"].as_f64().unwrap())
            .collect();
        assert_eq!(finals.len(), 5);
        let recomputed_min = finals.iter().cloned().fold(f64::INFINITY, f64::min);
        let recomputed_mean = finals.iter().sum::<f64>() / finals.len() as f64;
        let recomputed_std = standard_deviation(&finals, recomputed_mean, false);
        assert_relative_eq!(min, recomputed_min, max_relative = 1e-9);
        assert_relative_eq!(mean, recomputed_mean, max_relative = 1e-9);
        assert_relative_eq!(std, recomputed_std, max_relative = 1e-9);

        // Every history has exactly max_iterations entries and matches its
        // final_best at the end.
        for entry in histories.as_array().unwrap() {
            let history = entry["history"].as_array().unwrap();
            assert_eq!(history.len(), 40);
            assert_eq!(
                history.last().unwrap().as_f64().unwrap(),
                entry["final_best"].as_f64().unwrap()
            );
            assert_eq!(entry["seed"].as_u64().unwrap(), 2024);
        }
    }

    #[test]
    fn constrained_experiments_report_a_feasible_best() {
        let spec = ExperimentSpec {
            replicates: 8,
            config: FhoConfig {
                population: 20,
                max_iterations: 150,
                seed: 7,
                ..FhoConfig::default()
            },
            ..ExperimentSpec::new("spring")
        };
        let dir = tempdir().unwrap();
        let stats = run_experiment(&spec, Some(dir.path()), 2).unwrap();
        let best = stats
            .best_feasible_fitness
            .expect("spring solves should reach feasibility");
        let position = stats.best_feasible_solution.unwrap();
        let problem = problem_by_name("spring", None).unwrap();
        assert_relative_eq!(problem.evaluate(&position), best, max_relative = 1e-12);
        let report = constraint_report(&problem, &position, DEFAULT_FEASIBILITY_TOLERANCE);
        assert!(report.feasible);
        // Known optimum is ~0.0127; any feasible best must sit at or above
        // it (up to the tolerance slack on the active constraints).
        assert!(best >= 0.012, "implausibly low spring weight: {best}");

        let solutions: serde_json::Value = serde_json::from_str(
            &fs::read_to_string(dir.path().join("spring_solutions.json")).unwrap(),
        )
        .unwrap();
        assert!(solutions["best_feasible"].is_object());
        assert_eq!(solutions["problem"], "spring");
    }

    #[test]
    fn unconstrained_experiments_have_no_feasible_slot() {
        let stats = run_experiment(&small_spec("f1"), None, 1).unwrap();
        assert!(stats.best_feasible_fitness.is_none());
        assert!(stats.best_feasible_solution.is_none());
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(run_experiment(
            &ExperimentSpec {
                replicates: 0,
                ..small_spec("f1")
            },
            None,
            1
        )
        .is_err());
        assert!(run_experiment(&small_spec("f1"), None, 0).is_err());
        assert!(run_experiment(&small_spec("no-such-problem"), None, 1).is_err());
    }

    #[test]
    fn suite_runs_in_order_skips_failures_and_writes_a_combined_summary() {
        let specs = vec![
            small_spec("f1"),
            small_spec("no-such-problem"),
            small_spec("eggcrate"),
        ];
        let dir = tempdir().unwrap();
        let outcome = run_suite(&specs, Some(dir.path()), 1).unwrap();
        assert_eq!(outcome.stats.len(), 2);
        assert!(!outcome.all_ok());
        assert_eq!(outcome.failures.len(), 1);
        assert_eq!(outcome.failures[0].0, "no-such-problem");

        let csv = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("f1,30,"));
        assert!(lines[2].starts_with("eggcrate,2,"));
    }

    #[test]
    fn empty_suite_is_a_usage_error() {
        assert!(run_suite(&[], None, 1).is_err());
    }

    #[test]
    fn oracle_check_passes_on_the_recorded_solutions() {
        let report = oracle_check();
        assert!(report.passed);
        assert_eq!(report.rows.len(), 3);
        let by_name: std::collections::HashMap<&str, &OracleRow> = report
            .rows
            .iter()
            .map(|r| (r.problem.as_str(), r))
            .collect();
        assert!(by_name["cantilever"].delta.abs() <= 1e-6);
        assert!(by_name["pressure-vessel"].delta.abs() <= 0.5);
        assert!(by_name["spring"].delta.abs() <= 1e-5);
        // The vessel's recorded position is audited with its known volume
        // residual; the check reports it without gating on it.
        assert_abs_diff_eq!(
            by_name["pressure-vessel"].constraints[2],
            0.0012074601836502552,
            epsilon = 1e-9
        );
    }
}
