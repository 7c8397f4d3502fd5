//! Box search spaces, the fuzzy visibility ramp, and boundary repair.

use serde::{Deserialize, Serialize};

use crate::error::{FhoError, Result};
use crate::stochastic::RngStream;

/// An axis-aligned box `[lower_1, upper_1] × … × [lower_n, upper_n]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    /// Builds a box from per-dimension bounds.
    ///
    /// # Errors
    /// The vectors must have equal, non-zero length, every bound must be
    /// finite, and `lower[i] < upper[i]` must hold in every dimension.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(FhoError::Parameter(format!(
                "search space needs matching non-empty bounds; got lengths {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(FhoError::Parameter(format!(
                    "search space bounds must be finite; dimension {i} has [{lo}, {hi}]"
                )));
            }
            if lo >= hi {
                return Err(FhoError::Parameter(format!(
                    "search space needs lower < upper in every dimension; \
                     dimension {i} has [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// A cube `[lo, hi]^n` — the shape of every bundled benchmark domain.
    pub fn cube(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Self::new(vec![lo; n], vec![hi; n])
    }

    /// Per-dimension lower bounds.
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// Per-dimension upper bounds.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Number of dimensions.
    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    /// Per-dimension widths `upper − lower`.
    pub fn widths(&self) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| hi - lo)
            .collect()
    }

    /// Euclidean diameter of the box: `‖upper − lower‖₂`, attained by the
    /// opposite-corner pair.
    pub fn diameter(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// True when every coordinate lies inside the closed box.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(xi, (lo, hi))| *xi >= *lo && *xi <= *hi)
    }

    /// One position drawn uniformly from the box, consuming exactly `n`
    /// uniform draws in dimension order.
    pub fn sample(&self, rng: &mut RngStream) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| rng.uniform_in(*lo, *hi))
            .collect()
    }
}

/// Clamps each coordinate of `x` into the box, in place.
///
/// Comparisons are written out explicitly so a NaN coordinate stays NaN
/// rather than being silently absorbed into a bound; non-finite positions are
/// rejected downstream on the evaluation path.
pub fn clamp_to_box(x: &mut [f64], space: &SearchSpace) {
    debug_assert_eq!(x.len(), space.dimension());
    for (xi, (lo, hi)) in x.iter_mut().zip(space.lower.iter().zip(&space.upper)) {
        if *xi < *lo {
            *xi = *lo;
        } else if *xi > *hi {
            *xi = *hi;
        }
    }
}

/// Euclidean distance `‖a − b‖₂`.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(ai, bi)| (ai - bi).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// The two thresholds of the visibility ramp: full visibility at or below
/// `r_full`, zero visibility at or beyond `r_zero`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VisibilityRadii {
    r_full: f64,
    r_zero: f64,
}

impl VisibilityRadii {
    /// Builds the threshold pair.
    ///
    /// # Errors
    /// Requires finite values with `0 ≤ r_full < r_zero`.
    pub fn new(r_full: f64, r_zero: f64) -> Result<Self> {
        if !r_full.is_finite() || !r_zero.is_finite() || r_full < 0.0 || r_full >= r_zero {
            return Err(FhoError::Parameter(format!(
                "visibility radii must satisfy 0 <= r_full < r_zero with finite values; \
                 got r_full={r_full}, r_zero={r_zero}"
            )));
        }
        Ok(Self { r_full, r_zero })
    }

    /// Distance at or below which visibility is 1.
    pub fn r_full(&self) -> f64 {
        self.r_full
    }

    /// Distance at or beyond which visibility is 0.
    pub fn r_zero(&self) -> f64 {
        self.r_zero
    }
}

/// Fuzzy visibility of the food source at the given distance: a continuous
/// ramp from 1 (close) down to 0 (far).
///
/// Returns 1 for `distance ≤ r_full`, 0 for `distance ≥ r_zero`, and the
/// linear interpolation `(r_zero − distance)/(r_zero − r_full)` in between.
pub fn visibility(distance: f64, radii: VisibilityRadii) -> f64 {
    debug_assert!(distance >= 0.0, "distance must be non-negative");
    if distance <= radii.r_full {
        1.0
    } else if distance >= radii.r_zero {
        0.0
    } else {
        (radii.r_zero - distance) / (radii.r_zero - radii.r_full)
    }
}

/// Built-in recipes for deriving visibility radii from a search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiiMode {
    /// `r_full = 0.01·d(Ω)`, `r_zero = 0.1·d(Ω)` — a fixed fraction of the
    /// box diameter. The default: the ramp stays active at every dimension.
    Practical,
    /// `r_zero = 10⁻ⁿ·d(Ω)`, `r_full = 0.8·r_zero` for an n-dimensional box.
    /// Shrinks exponentially with dimension, so beyond a few dimensions the
    /// ramp never activates and the search degenerates to a pure Lévy walk;
    /// kept selectable for fidelity experiments.
    DimensionScaled,
}

/// Derives the visibility thresholds a mode prescribes for a space.
pub fn default_radii(space: &SearchSpace, mode: RadiiMode) -> VisibilityRadii {
    let d = space.diameter();
    let (r_full, r_zero) = match mode {
        RadiiMode::Practical => (0.01 * d, 0.1 * d),
        RadiiMode::DimensionScaled => {
            let r_zero = 10f64.powi(-(space.dimension() as i32)) * d;
            (0.8 * r_zero, r_zero)
        }
    };
    VisibilityRadii::new(r_full, r_zero)
        .expect("derived radii are ordered and positive by construction")
}

/// Radii selection for a run: either a derivation mode or explicit values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiiSpec {
    /// Derive from the search space with the given recipe.
    Mode(RadiiMode),
    /// Use these exact thresholds.
    Explicit(VisibilityRadii),
}

impl RadiiSpec {
    /// Resolves to concrete thresholds for the given space.
    pub fn resolve(&self, space: &SearchSpace) -> VisibilityRadii {
        match self {
            RadiiSpec::Mode(mode) => default_radii(space, *mode),
            RadiiSpec::Explicit(radii) => *radii,
        }
    }
}

impl Default for RadiiSpec {
    fn default() -> Self {
        RadiiSpec::Mode(RadiiMode::Practical)
    }
}
