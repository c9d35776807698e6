use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid trade-off: {0}")]
    InvalidTradeOff(String),

    #[error("unsupported number of objectives {k} (supported: {min}..={max})")]
    UnsupportedDimension { k: usize, min: usize, max: usize },

    #[error("trivial instance: {0}")]
    TrivialInstance(String),

    #[error("empty trade-off set")]
    EmptyTradeOffs,

    #[error("invalid neighborhood size {size} for {count} trade-offs")]
    InvalidNeighborhood { size: usize, count: usize },

    #[error("budget {budget} is smaller than one generation ({generation} evaluations)")]
    BudgetTooSmall { budget: u64, generation: u64 },

    #[error("instance too large for brute force: m = {m} exceeds cap {cap}")]
    OracleTooLarge { m: usize, cap: usize },

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
