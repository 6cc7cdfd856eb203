use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {0} outside the supported range 2..=9")]
    GroundSet(usize),

    #[error("invalid symbol `{0}`")]
    Symbol(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("degenerate matrix: principal minor {0} vanishes")]
    DegenerateMatrix(String),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("item set is not closed under the group: image {0} is missing")]
    NotClosed(String),

    #[error("sign pattern is incompatible with trinomial {0}")]
    Incompatible(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("unsupported at this scale: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
