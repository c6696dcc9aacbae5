use thiserror::Error;

/// Errors raised by the numerical routines and the file/CLI layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: ||H - H*||_F = {deviation:e}")]
    NonHermitian { deviation: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("matrix too small: dimension {dim}, need at least {min}")]
    TooSmall { dim: usize, min: usize },
    #[error("component {index} is numerically zero (|v_k| = {magnitude:e})")]
    ZeroComponent { index: usize, magnitude: f64 },
    #[error("entry {index} must vanish before projecting down (|y_k| = {magnitude:e})")]
    NonzeroDeletedEntry { index: usize, magnitude: f64 },
    #[error("vector is not a unit vector (norm {norm})")]
    NotUnit { norm: f64 },
    #[error("vectors are not orthogonal (|v*w| = {inner:e})")]
    NotOrthogonal { inner: f64 },
    #[error("matrix is not normal: ||A*A - AA*||_F = {commutator:e}")]
    NotNormal { commutator: f64 },
    #[error("non-finite entry at position {index}")]
    NonFinite { index: usize },
    #[error("entries length {len} does not match shape {rows}x{cols}")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("split {split} must satisfy 1 <= split < {n}")]
    BadSplit { split: usize, n: usize },
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("contact on edge ({i}, {j}) is {distance:e} from the edge midpoint")]
    MidpointAssertionFailed { i: usize, j: usize, distance: f64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
