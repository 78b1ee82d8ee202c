use thiserror::Error;

/// Errors raised by graph construction, matrix kernels and the closed-form spectra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("vertex {vertex} is not valid in a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("alpha = 1 is excluded by the closed form for {0}")]
    AlphaBoundary(&'static str),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    SizeMismatch(String),

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("partition is not equitable: blocks ({block_row}, {block_col}), rows {row_a} and {row_b} have sums {sum_a} and {sum_b}")]
    NotEquitable {
        block_row: usize,
        block_col: usize,
        row_a: usize,
        row_b: usize,
        sum_a: f64,
        sum_b: f64,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph is not regular{0}")]
    NotRegular(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("eigenvector for eigenvalue {value} is not orthogonal to the all-ones vector (<x, 1> = {inner:e})")]
    NotOrthogonal { value: f64, inner: f64 },

    #[error("polynomial degree mismatch: {0}")]
    DegreeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
