//! Error types shared across the kernel.

use thiserror::Error;

/// Errors raised by kernel operations.
#[derive(Debug, Error)]
pub enum KernelError {
    #[error("malformed rational literal `{0}` (expected `p` or `p/q` with q != 0)")]
    BadRational(String),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("Killing form is degenerate: the algebra is not semisimple")]
    NotSemisimple,

    #[error("invalid Lie algebra: {0}")]
    InvalidLieAlgebra(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("unknown identity suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}
