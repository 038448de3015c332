use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Fibonacci/Lucas index exceeded the configured cap.
    #[error("index {index} exceeds the configured index cap {cap}")]
    IndexCapExceeded { index: i64, cap: i64 },

    /// A parameter violated a documented constraint; the message names it.
    #[error("{0}")]
    Domain(String),

    #[error("dimension mismatch in {op}: {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    /// A product under a square root came out negative; complex
    /// eigenvalues are out of scope.
    #[error("negative radicand {0}; complex eigenvalues are not supported")]
    NegativeRadicand(String),

    /// The mod-2 matrix handed to the graph builder is not symmetric.
    /// Reachable for most n not congruent to 2 mod 3.
    #[error("adjacency matrix is not symmetric at entry ({i},{j})")]
    AsymmetricAdjacency { i: usize, j: usize },

    /// An internally verified closed form failed to hold. Indicates an
    /// implementation bug, never a caller mistake.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
