use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid bipartite shape {dim_a}x{dim_b}: both factors must be at least 2")]
    InvalidShape { dim_a: usize, dim_b: usize },

    #[error("matrix is not Hermitian (max |h - h^dag| = {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("matrix is not unitary (max |u u^dag - I| = {defect:e})")]
    NotUnitary { defect: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("generator dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("level index ({j},{k}) out of range 1..={n}")]
    LevelOutOfRange { j: usize, k: usize, n: usize },

    #[error("invalid level pair ({j},{k}): need 1 <= j < k <= {max}")]
    InvalidLevelPair { j: usize, k: usize, max: usize },

    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("expectation value has imaginary residual {0:e}")]
    ImaginaryResidual(f64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown state family `{0}`")]
    UnknownFamily(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
