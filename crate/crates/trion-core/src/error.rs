//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the model, solver, and entanglement layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {dim}: need at least 2 levels")]
    InvalidDimension { dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("cannot embed operator of dimension {op_dim} at subsystem {slot} (dimension {slot_dim})")]
    InvalidEmbedding {
        slot: usize,
        op_dim: usize,
        slot_dim: usize,
    },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    InvalidSubsystem { index: usize, count: usize },

    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: &'static str },

    #[error("singular linear system (condition estimate {condition:.3e})")]
    SingularSystem { condition: f64 },

    #[error("eigenvalue iteration did not converge")]
    EigenNoConvergence,

    #[error("matrix is not Hermitian (relative deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid density matrix: {detail} ({value:.3e})")]
    InvalidState { detail: &'static str, value: f64 },

    #[error(
        "degenerate steady state: null eigenvalue magnitude {null_magnitude:.3e}, \
         spectral gap {gap:.3e}"
    )]
    DegenerateSteadyState { null_magnitude: f64, gap: f64 },

    #[error(
        "steady-state solve did not converge: residual {residual:.3e}, \
         spectral gap {gap:.3e}"
    )]
    SteadyStateNotConverged { residual: f64, gap: f64 },

    #[error("integration unstable: trace deviation {trace_deviation:.3e}, reduce the step size")]
    StepSize { trace_deviation: f64 },

    #[error("unsupported regime: {detail}")]
    UnsupportedRegime { detail: &'static str },

    #[error("invalid regime: {detail}")]
    InvalidRegime { detail: &'static str },

    #[error("near-singular weak-drive system (|det M| = {magnitude:.3e})")]
    NearSingular { magnitude: f64 },

    #[error("inconsistent parameters: {detail}")]
    InconsistentParameters { detail: &'static str },

    #[error("no real solution: radicand {radicand:.6e} is negative")]
    NoRealSolution { radicand: f64 },

    #[error(
        "polygon inequality violated beyond tolerance: squared edges \
         ({c1_sq:.6e}, {c2_sq:.6e}, {c3_sq:.6e})"
    )]
    PolygonViolation { c1_sq: f64, c2_sq: f64, c3_sq: f64 },

    #[error("invalid sweep specification: {detail}")]
    InvalidSweep { detail: &'static str },

    #[error("unknown figure preset '{name}'")]
    UnknownPreset { name: alloc::string::String },
}

pub type Result<T> = core::result::Result<T, Error>;
