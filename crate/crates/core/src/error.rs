use thiserror::Error;

/// Errors raised by the ring, subspace and solver layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("incompatible rings")]
    IncompatibleRings,

    #[error("initial form of zero undefined")]
    InitialFormOfZero,

    #[error("{what} out of range: {value} not in {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("approximation level insufficient: residual order {residual} < required {required}")]
    ApproximationInsufficient { residual: String, required: u32 },

    #[error("non-regular initial forms detected: {0}")]
    NonRegular(String),

    #[error("truncation too small: need {needed}, have D = {trunc}")]
    TruncationTooSmall { needed: u64, trunc: u32 },

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),

    #[error("budget exceeded: state space {space}, budget {budget}")]
    BudgetExceeded { space: String, budget: u64 },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
