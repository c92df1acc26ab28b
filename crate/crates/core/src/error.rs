use thiserror::Error;

use crate::coefficients::CordesReport;
use crate::tensor::Vector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension {0}, expected 2 or 3")]
    UnsupportedDimension(usize),

    #[error("mesh needs at least 2 cells per dimension, got {0}")]
    TooFewCells(usize),

    #[error("cells per dimension ({cells}) must be a multiple of {multiple} to align with coefficient discontinuities")]
    MisalignedMesh { cells: usize, multiple: usize },

    #[error("non-finite coefficient value at x = {point:?}")]
    NonFinite { point: Vector },

    #[error("diffusion matrix is not symmetric at x = {point:?} (relative asymmetry {asymmetry:e})")]
    NotSymmetric { point: Vector, asymmetry: f64 },

    #[error("ellipticity violated at x = {point:?}: eigenvalues span [{min}, {max}]")]
    NotElliptic { point: Vector, min: f64, max: f64 },

    #[error("reaction coefficient is not defined for this field")]
    MissingReaction,

    #[error("negative reaction coefficient {value} at x = {point:?}")]
    NegativeReaction { point: Vector, value: f64 },

    #[error("lambda shift must be positive, got {0}")]
    InvalidLambdaShift(f64),

    #[error("empty sample set")]
    EmptySamples,

    #[error("Cordes condition not satisfied: delta_star = {} <= threshold {}", .0.delta_star, .0.delta_threshold)]
    CordesFailed(Box<CordesReport>),

    #[error("missing source term (neither f nor F is set)")]
    MissingSource,

    #[error("nonpositive scalar diffusion {value} at x = {point:?}")]
    NonPositiveDiffusion { point: Vector, value: f64 },

    #[error("normalization integral (gamma, 1 - div rho_h) = {0:e} is not positive; refine the mesh")]
    NonPositiveNormalization(f64),

    #[error("linear solve failed: {reason} (relative residual {residual:e} after {iterations} iterations)")]
    SolveFailed {
        reason: String,
        residual: f64,
        iterations: usize,
        history: Vec<f64>,
    },

    #[error("invalid solver configuration: {0}")]
    InvalidSolveConfig(String),

    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a periodic solution")]
    NotPeriodic,

    #[error("convergence study needs an exact solution")]
    MissingOracle,

    #[error("coefficient table: {0}")]
    Table(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
