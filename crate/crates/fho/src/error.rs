//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, FhoError>;

/// Everything that can go wrong when configuring or running the optimizer.
#[derive(Debug, Error)]
pub enum FhoError {
    /// A configuration value is outside its documented domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A problem name that is not in the catalog.
    #[error("unknown problem `{name}`; valid names: {valid}")]
    UnknownProblem { name: String, valid: String },

    /// The objective produced NaN or an infinity at a point the optimizer
    /// visited; the offending point is reported for diagnosis.
    #[error("objective returned non-finite value {value} at {point:?}")]
    NonFiniteObjective { value: f64, point: Vec<f64> },

    /// A hunter position became non-finite even after boundary clamping.
    #[error("position became non-finite after update: {point:?}")]
    NonFinitePosition { point: Vec<f64> },

    /// A replicate of a multi-run experiment failed; the index identifies it.
    #[error("replicate {index} failed: {source}")]
    Replicate {
        index: usize,
        #[source]
        source: Box<FhoError>,
    },

    /// Artifact files could not be written or read.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Artifact serialization failed.
    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}
