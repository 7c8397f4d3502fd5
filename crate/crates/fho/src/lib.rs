//! Fuzzy Hunter Optimizer (FHO): a population metaheuristic that blends
//! heavy-tailed Lévy exploration with a fuzzy-visibility drift toward the
//! best solution found so far.
//!
//! Each hunter in the population walks the search box with Lévy steps —
//! mostly small moves, occasionally very long jumps — until the incumbent
//! best position (the "food source") becomes visible. Visibility is a fuzzy
//! ramp over distance: beyond `r_zero` the food is invisible and the hunter
//! explores freely; inside `r_full` it is fully visible and the walk gives
//! way to a randomized drift onto the food; in between, the two behaviors
//! blend linearly.
//!
//! The crate bundles:
//! - the optimizer core ([`core`]): configuration, the update rule, and
//!   deterministic seeded runs with full convergence histories;
//! - a problem catalog ([`problems`]): ten classical benchmark functions,
//!   the 2-D eggcrate function, and three constrained engineering designs
//!   (cantilever beam, pressure vessel, tension/compression spring) with
//!   penalty transformers for constraint handling;
//! - the stochastic toolbox ([`stochastic`]): seeded splittable RNG streams,
//!   the Mantegna Lévy-step sampler, and tail-index diagnostics;
//! - search-space geometry ([`geometry`]): boxes, diameters, the visibility
//!   ramp, and boundary clamping;
//! - an experiment harness ([`harness`]): replicated runs, summary
//!   statistics, reference-solution checks, and CSV/JSON artifacts.
//!
//! Every run is reproducible: a 64-bit seed fully determines the result,
//! replicates derive independent child streams from it, and parallel
//! execution returns results in replicate order.
//!
//! # Example
//! ```
//! use fho::core::{run, FhoConfig};
//! use fho::problems::benchmark;
//!
//! let problem = benchmark("eggcrate", 2).unwrap();
//! let config = FhoConfig { seed: 7, ..FhoConfig::default() };
//! let result = run(&problem, &config).unwrap();
//! assert!(result.best_fitness <= result.history[0]);
//! assert_eq!(result.evaluations, 30 + 29 * 500);
//! ```

pub mod core;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod problems;
pub mod stochastic;

pub use crate::core::{run, run_replicated, DriftSign, FhoConfig, RunResult};
pub use crate::error::{FhoError, Result};
pub use crate::geometry::{RadiiMode, RadiiSpec, SearchSpace, VisibilityRadii};
pub use crate::problems::{benchmark, problem_by_name, PenaltyStrategy, Problem};
