//! Seeded random-number streams and heavy-tailed Lévy step sampling.
//!
//! Steps are generated with Mantegna's method: `s = u / |v|^(1/beta)` where
//! `u ~ Normal(0, sigma_u^2)`, `v ~ Normal(0, 1)` and `sigma_u` is the
//! closed-form scale that makes `|s|` approximate a stable distribution with
//! tail index `beta`. Every draw goes through [`RngStream`], a deterministic
//! counter-based generator, so that equal seeds reproduce equal sequences
//! across runs and platforms, and parallel runs can derive independent child
//! streams instead of sharing state.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{FhoError, Result};

/// Deterministic, seedable random stream. One stream belongs to exactly one
/// run; concurrency is achieved by deriving child streams, never by sharing.
///
/// The draw order consumed by each operation is part of the reproducibility
/// contract: callers may interleave operations freely, but a fixed seed and a
/// fixed call sequence always yield the same values.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha12Rng,
}

impl RngStream {
    /// Stream for a single run. Equivalent to `child(seed, 0)`.
    pub fn new(seed: u64) -> Self {
        Self::child(seed, 0)
    }

    /// Independent stream for run `index` under the same base seed. Distinct
    /// indices select distinct cipher streams, so their outputs never overlap.
    pub fn child(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Self { rng }
    }

    /// One draw uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    /// One draw uniform on `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Vector of `n` i.i.d. draws uniform on `[0, 1)`.
    pub fn uniform_vector(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.uniform()).collect()
    }

    /// One draw from `Normal(0, sigma^2)`.
    pub fn normal(&mut self, sigma: f64) -> f64 {
        let z: f64 = self.rng.sample(StandardNormal);
        sigma * z
    }
}

/// Parameters of the Mantegna step sampler.
///
/// `beta` is the stability index controlling tail heaviness (smaller means
/// heavier tails); `sigma_u` is derived from it and never set directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyParams {
    beta: f64,
    sigma_u: f64,
}

impl LevyParams {
    /// Builds sampler parameters for stability index `beta`.
    ///
    /// `sigma_u = [Γ(1+β)·sin(πβ/2) / (Γ((1+β)/2)·β·2^((β−1)/2))]^(1/β)`,
    /// which is strictly positive on the valid range.
    ///
    /// # Errors
    /// `beta` outside `(0, 2]` (or non-finite) is rejected.
    pub fn new(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 0.0 || beta > 2.0 {
            return Err(FhoError::Parameter(format!(
                "beta must lie in (0, 2]; got {beta}"
            )));
        }
        let numerator = libm::tgamma(1.0 + beta) * (std::f64::consts::PI * beta / 2.0).sin();
        let denominator =
            libm::tgamma((1.0 + beta) / 2.0) * beta * 2.0_f64.powf((beta - 1.0) / 2.0);
        let sigma_u = (numerator / denominator).powf(1.0 / beta);
        Ok(Self { beta, sigma_u })
    }

    /// The stability index this sampler was built for.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The derived numerator-Gaussian scale.
    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }
}

/// One scalar Lévy step: `u / |v|^(1/beta)` with `u ~ Normal(0, sigma_u^2)`
/// and `v ~ Normal(0, 1)`. Symmetric about zero.
///
/// A denominator draw whose magnitude underflows to zero would produce an
/// infinity; such draws (probability zero up to floating-point underflow) are
/// redrawn, so the returned step is always finite.
pub fn levy_step(rng: &mut RngStream, params: &LevyParams) -> f64 {
    loop {
        let u = rng.normal(params.sigma_u);
        let v = rng.normal(1.0);
        let step = u / v.abs().powf(1.0 / params.beta);
        if step.is_finite() {
            return step;
        }
    }
}

/// Vector of `n` independent Lévy steps, component `i` scaled by `scale[i]`.
///
/// Zero entries in `scale` pin the corresponding component to exactly zero
/// (the underlying draws are still consumed, keeping the stream position
/// independent of the scale values).
///
/// # Errors
/// `n` must be at least 1, `scale` must have length `n`, and every entry must
/// be finite and non-negative; a negative entry almost always indicates a
/// sign mistake in the caller's step sizing and is rejected.
pub fn levy_vector(
    rng: &mut RngStream,
    params: &LevyParams,
    n: usize,
    scale: &[f64],
) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(FhoError::Parameter(
            "levy_vector dimension must be at least 1".into(),
        ));
    }
    if scale.len() != n {
        return Err(FhoError::Parameter(format!(
            "levy_vector scale has length {}, expected {n}",
            scale.len()
        )));
    }
    if let Some(bad) = scale.iter().find(|s| !s.is_finite() || **s < 0.0) {
        return Err(FhoError::Parameter(format!(
            "levy_vector scale entries must be finite and non-negative; got {bad}"
        )));
    }
    let mut out = vec![0.0; n];
    levy_vector_into(rng, params, scale, &mut out);
    Ok(out)
}

/// Allocation-free core of [`levy_vector`]; inputs are assumed validated.
pub(crate) fn levy_vector_into(
    rng: &mut RngStream,
    params: &LevyParams,
    scale: &[f64],
    out: &mut [f64],
) {
    for (o, s) in out.iter_mut().zip(scale) {
        let step = levy_step(rng, params);
        // `0.0 * step` is exact for finite steps; spelled out so a zero scale
        // can never leak a NaN even if the step were somehow non-finite.
        *o = if *s == 0.0 { 0.0 } else { s * step };
    }
}

/// Hill estimator of the tail index of `|samples|`.
///
/// Sorts magnitudes in descending order `a[0] >= a[1] >= ...` and returns
/// `k / sum_{i<k} ln(a[i] / a[k])`, i.e. the classical estimate built from
/// the top `k` order statistics with `a[k]` as the threshold. For validating
/// the Lévy sampler, `k` = 1% of the sample size is the frozen choice.
///
/// # Panics
/// Requires `0 < k < samples.len()`, finite samples, and a strictly positive
/// threshold magnitude `a[k]`; violations indicate a misuse of the
/// diagnostic and panic with a description.
pub fn hill_estimate(samples: &[f64], k: usize) -> f64 {
    assert!(
        k > 0 && k < samples.len(),
        "hill_estimate requires 0 < k < sample count; got k={k}, count={}",
        samples.len()
    );
    let mut magnitudes: Vec<f64> = samples.iter().map(|s| s.abs()).collect();
    magnitudes.sort_unstable_by(|a, b| b.partial_cmp(a).expect("samples must not contain NaN"));
    let threshold = magnitudes[k];
    assert!(
        threshold > 0.0,
        "hill_estimate threshold magnitude must be positive; got {threshold}"
    );
    let log_excess: f64 = magnitudes[..k]
        .iter()
        .map(|a| (a / threshold).ln())
        .sum();
    k as f64 / log_excess
}

/// Empirical survival curve of `|samples|` for log-log plotting.
///
/// Returns up to `points` pairs `(magnitude, survival)` where `survival` is
/// the fraction of samples whose magnitude strictly exceeds `magnitude`,
/// taken at geometrically spaced ranks so the tail is well resolved.
pub fn survival_curve(samples: &[f64], points: usize) -> Vec<(f64, f64)> {
    let n = samples.len();
    if n < 2 || points == 0 {
        return Vec::new();
    }
    let mut magnitudes: Vec<f64> = samples.iter().map(|s| s.abs()).collect();
    magnitudes.sort_unstable_by(|a, b| b.partial_cmp(a).expect("samples must not contain NaN"));
    let max_rank = (n - 1) as f64;
    let mut curve = Vec::with_capacity(points);
    let mut last_rank = usize::MAX;
    for j in 0..points {
        // Geometric spacing from rank 1 to rank n-1.
        let t = j as f64 / (points - 1).max(1) as f64;
        let rank = (max_rank.powf(t)).round() as usize;
        let rank = rank.clamp(1, n - 1);
        if rank == last_rank {
            continue;
        }
        last_rank = rank;
        curve.push((magnitudes[rank], rank as f64 / n as f64));
    }
    curve
}
