use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("charge {0:?} is not weakly increasing")]
    InvalidCharge(Vec<i64>),

    #[error("charge must have at least one entry")]
    EmptyCharge,

    #[error("expected {expected} components, found {found}")]
    ComponentMismatch { expected: usize, found: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("symbol size h={h} is too small; the minimal admissible size is h={min}")]
    SizeTooSmall { h: usize, min: usize },

    #[error("malformed symbol: {0}")]
    MalformedSymbol(String),

    #[error("column index {index} out of range 1..={max}")]
    ColumnOutOfRange { index: usize, max: usize },

    #[error("{0} is not cylindric for this charge")]
    NotCylindric(String),

    #[error("the empty multipartition cannot be peeled")]
    EmptyPeel,

    #[error("inconsistent move: {0}")]
    InconsistentMove(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Reaching this is a bug in the library, never a valid state.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
