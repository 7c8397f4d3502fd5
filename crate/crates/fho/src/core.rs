//! The optimizer itself: a population of hunters performs Lévy walks, and a
//! fuzzy visibility ramp blends each walk with a drift toward the best
//! position found so far (the food source).
//!
//! One iteration ("sweep") updates every hunter except the incumbent, in
//! list order, replacing the incumbent immediately whenever an update
//! strictly improves on it. Each update moves a hunter to
//!
//! ```text
//! clamp( x + w·r⊙v·(food − x) + (1 − v)·L )
//! ```
//!
//! where `v ∈ [0,1]` is the visibility of the food source at the hunter's
//! distance, `r` is a fresh uniform vector, and `L` is a Lévy step vector
//! scaled per dimension. Far from the food (`v = 0`) the hunter walks
//! freely; close to it (`v = 1`) the walk shuts off and the hunter drifts.

use serde::Serialize;

use crate::error::{FhoError, Result};
use crate::geometry::{
    clamp_to_box, euclidean_distance, visibility, RadiiSpec, SearchSpace, VisibilityRadii,
};
use crate::problems::Problem;
use crate::stochastic::{levy_vector, LevyParams, RngStream};

/// Direction of the drift term relative to the food source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DriftSign {
    /// Drift along `food − x`: hunters are attracted to the incumbent.
    /// The default, and the only mode that converges.
    TowardFood,
    /// Drift along `x − food`: repels hunters from the incumbent. Under full
    /// visibility and `w = 2` this provably expands hunter–food distances;
    /// kept selectable for contrast experiments.
    AwayFromFood,
}

/// Complete parameterization of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FhoConfig {
    /// Drift weight `w > 0` applied to the visibility-gated pull.
    pub w: f64,
    /// Lévy stability index in `(0, 2]`; smaller means heavier tails.
    pub beta: f64,
    /// Acceleration factor retained for config compatibility; the update
    /// rule implemented here does not use it.
    pub alpha: f64,
    /// Per-dimension Lévy scale as a fraction of that dimension's range.
    pub step_scale: f64,
    /// Drift direction; see [`DriftSign`].
    pub drift_sign: DriftSign,
    /// Visibility radii: a derivation mode or explicit thresholds.
    pub radii: RadiiSpec,
    /// Number of hunters (≥ 2).
    pub population: usize,
    /// Number of sweeps (≥ 1).
    pub max_iterations: usize,
    /// Base seed; replicate `k` derives child stream `k` from it.
    pub seed: u64,
}

impl Default for FhoConfig {
    fn default() -> Self {
        Self {
            w: 2.0,
            beta: 0.8,
            alpha: 1.0,
            step_scale: 0.01,
            drift_sign: DriftSign::TowardFood,
            radii: RadiiSpec::default(),
            population: 30,
            max_iterations: 500,
            seed: 0,
        }
    }
}

impl FhoConfig {
    /// Checks every field against its documented domain and returns the
    /// Lévy sampler parameters derived from `beta`.
    ///
    /// # Errors
    /// Any violated bound is reported as a parameter error naming the field.
    pub fn validate(&self) -> Result<LevyParams> {
        if !self.w.is_finite() || self.w <= 0.0 {
            return Err(FhoError::Parameter(format!(
                "w must be positive and finite; got {}",
                self.w
            )));
        }
        if !self.step_scale.is_finite() || self.step_scale <= 0.0 {
            return Err(FhoError::Parameter(format!(
                "step_scale must be positive and finite; got {}",
                self.step_scale
            )));
        }
        if !self.alpha.is_finite() {
            return Err(FhoError::Parameter(format!(
                "alpha must be finite; got {}",
                self.alpha
            )));
        }
        if self.population < 2 {
            return Err(FhoError::Parameter(format!(
                "population must be at least 2; got {}",
                self.population
            )));
        }
        if self.max_iterations < 1 {
            return Err(FhoError::Parameter(
                "max_iterations must be at least 1".into(),
            ));
        }
        LevyParams::new(self.beta)
    }
}

/// One member of the population: a position and its objective value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hunter {
    position: Vec<f64>,
    fitness: f64,
}

impl Hunter {
    /// Builds a hunter at an arbitrary position, for driving
    /// [`update_hunter`] directly. Hunters created by the optimizer always
    /// sit inside the search box with finite fitness; a caller constructing
    /// one owns those invariants.
    pub fn new(position: Vec<f64>, fitness: f64) -> Self {
        Self { position, fitness }
    }

    /// Current position, always inside the search box.
    pub fn position(&self) -> &[f64] {
        &self.position
    }

    /// Objective value at the current position, always finite.
    pub fn fitness(&self) -> f64 {
        self.fitness
    }
}

/// The hunter population together with its incumbent (food source).
#[derive(Debug, Clone)]
pub struct Population {
    hunters: Vec<Hunter>,
    food: usize,
    iteration: usize,
}

impl Population {
    /// All hunters, in stable list order.
    pub fn hunters(&self) -> &[Hunter] {
        &self.hunters
    }

    /// Index of the incumbent-best hunter.
    pub fn food_index(&self) -> usize {
        self.food
    }

    /// The incumbent-best hunter.
    pub fn food(&self) -> &Hunter {
        &self.hunters[self.food]
    }

    /// Number of completed sweeps.
    pub fn iteration(&self) -> usize {
        self.iteration
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunResult {
    /// Best position found.
    pub best_position: Vec<f64>,
    /// Objective value at `best_position`.
    pub best_fitness: f64,
    /// Incumbent fitness after each sweep; monotone non-increasing, last
    /// entry equals `best_fitness`.
    pub history: Vec<f64>,
    /// Exact number of objective evaluations performed.
    pub evaluations: usize,
    /// The base seed the run was configured with.
    pub seed: u64,
}

/// Draws the initial population uniformly inside the box and evaluates it.
///
/// Positions are sampled hunter by hunter, dimension by dimension; the food
/// source is the first hunter attaining the minimum fitness.
///
/// # Errors
/// A non-finite objective value at a sampled point aborts with the point.
pub fn initialize(problem: &Problem, config: &FhoConfig, rng: &mut RngStream) -> Result<Population> {
    config.validate()?;
    let mut hunters = Vec::with_capacity(config.population);
    for _ in 0..config.population {
        let position = problem.space().sample(rng);
        hunters.push(checked_evaluate(problem, position)?);
    }
    let food = argmin(&hunters);
    Ok(Population {
        hunters,
        food,
        iteration: 0,
    })
}

fn argmin(hunters: &[Hunter]) -> usize {
    let mut best = 0;
    for (i, h) in hunters.iter().enumerate().skip(1) {
        if h.fitness < hunters[best].fitness {
            best = i;
        }
    }
    best
}

/// Evaluates the objective and packages the hunter, rejecting non-finite
/// values with the offending point.
fn checked_evaluate(problem: &Problem, position: Vec<f64>) -> Result<Hunter> {
    let fitness = problem.evaluate(&position);
    if !fitness.is_finite() {
        return Err(FhoError::NonFiniteObjective {
            value: fitness,
            point: position,
        });
    }
    Ok(Hunter { position, fitness })
}

/// The pure update arithmetic, exposed so its algebraic cases can be probed
/// with chosen randomness: returns `clamp(x + w·r⊙v·D + (1−v)·levy)` where
/// `D` is `food − x` (toward-food) or `x − food` (away-from-food).
// Every input of the update rule is spelled out on purpose.
#[allow(clippy::too_many_arguments)]
pub fn position_update(
    position: &[f64],
    food: &[f64],
    w: f64,
    v: f64,
    r: &[f64],
    levy: &[f64],
    drift_sign: DriftSign,
    space: &SearchSpace,
) -> Vec<f64> {
    debug_assert_eq!(position.len(), food.len());
    debug_assert_eq!(position.len(), r.len());
    debug_assert_eq!(position.len(), levy.len());
    let mut out: Vec<f64> = position
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let drift = match drift_sign {
                DriftSign::TowardFood => food[i] - x,
                DriftSign::AwayFromFood => x - food[i],
            };
            x + w * r[i] * v * drift + (1.0 - v) * levy[i]
        })
        .collect();
    clamp_to_box(&mut out, space);
    out
}

/// One hunter update with fresh randomness: computes the visibility of the
/// food source at the hunter's distance, draws the uniform vector `r` and
/// the Lévy vector (in that order), and applies [`position_update`].
///
/// The Lévy scale is `step_scale·(upper − lower)` per dimension.
pub fn update_hunter(
    hunter: &Hunter,
    food: &[f64],
    config: &FhoConfig,
    levy_params: &LevyParams,
    radii: VisibilityRadii,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let scale: Vec<f64> = space.widths().iter().map(|w| config.step_scale * w).collect();
    let v = visibility(euclidean_distance(&hunter.position, food), radii);
    let r = rng.uniform_vector(space.dimension());
    let levy = levy_vector(rng, levy_params, space.dimension(), &scale)
        .expect("scale built from a valid space and positive step_scale");
    position_update(
        &hunter.position,
        food,
        config.w,
        v,
        &r,
        &levy,
        config.drift_sign,
        space,
    )
}

/// Runs the optimizer with a fresh stream seeded from `config.seed`.
pub fn run(problem: &Problem, config: &FhoConfig) -> Result<RunResult> {
    let mut rng = RngStream::new(config.seed);
    run_with_stream(problem, config, &mut rng)
}

/// Runs the optimizer on a caller-provided stream (used by replication to
/// hand each replicate an independent child stream).
///
/// Every sweep updates each hunter except the one holding the food source at
/// the start of the sweep; exactly `population − 1` evaluations happen per
/// sweep, after `population` evaluations at initialization. Updated hunters
/// always keep their new position; the food source is replaced the moment an
/// update strictly improves on it.
pub fn run_with_stream(
    problem: &Problem,
    config: &FhoConfig,
    rng: &mut RngStream,
) -> Result<RunResult> {
    let levy_params = config.validate()?;
    let space = problem.space();
    let n = space.dimension();
    let radii = config.radii.resolve(space);
    let scale: Vec<f64> = space.widths().iter().map(|w| config.step_scale * w).collect();

    let mut population = initialize(problem, config, rng)?;
    let mut evaluations = population.hunters.len();
    let mut food_position = population.food().position.clone();
    let mut food_fitness = population.food().fitness;
    let mut history = Vec::with_capacity(config.max_iterations);

    for _ in 0..config.max_iterations {
        let frozen = population.food;
        for i in 0..population.hunters.len() {
            if i == frozen {
                continue;
            }
            let hunter = &population.hunters[i];
            let v = visibility(euclidean_distance(&hunter.position, &food_position), radii);
            let r = rng.uniform_vector(n);
            let levy = levy_vector(rng, &levy_params, n, &scale)
                .expect("scale validated with the config");
            let new_position = position_update(
                &hunter.position,
                &food_position,
                config.w,
                v,
                &r,
                &levy,
                config.drift_sign,
                space,
            );
            if new_position.iter().any(|c| !c.is_finite()) {
                return Err(FhoError::NonFinitePosition {
                    point: new_position,
                });
            }
            let updated = checked_evaluate(problem, new_position)?;
            evaluations += 1;
            if updated.fitness < food_fitness {
                food_fitness = updated.fitness;
                food_position.copy_from_slice(&updated.position);
                population.food = i;
            }
            population.hunters[i] = updated;
        }
        population.iteration += 1;
        history.push(food_fitness);
    }

    Ok(RunResult {
        best_position: food_position,
        best_fitness: food_fitness,
        history,
        evaluations,
        seed: config.seed,
    })
}

/// Runs `replicates` independent replicates; replicate `k` uses the child
/// stream `k` of `config.seed`, so the list is reproducible element-wise and
/// independent of execution order.
///
/// # Errors
/// Requires `replicates ≥ 1`; a failing replicate aborts with its index.
pub fn run_replicated(
    problem: &Problem,
    config: &FhoConfig,
    replicates: usize,
) -> Result<Vec<RunResult>> {
    if replicates == 0 {
        return Err(FhoError::Parameter(
            "replicates must be at least 1".into(),
        ));
    }
    (0..replicates)
        .map(|k| {
            let mut rng = RngStream::child(config.seed, k as u64);
            run_with_stream(problem, config, &mut rng).map_err(|e| FhoError::Replicate {
                index: k,
                source: Box::new(e),
            })
        })
        .collect()
}
