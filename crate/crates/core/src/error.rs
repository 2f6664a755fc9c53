use thiserror::Error;

/// Failure to parse one of the text formats (paths, multisets, schedules).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid token `{token}`: {reason}")]
pub struct ParseError {
    pub token: String,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("steps and ranks differ in length ({steps} vs {ranks})")]
    LengthMismatch { steps: usize, ranks: usize },

    #[error("expected a Dyck path, got {0}")]
    NotDyck(String),

    #[error("expected an incomplete Dyck path, got {0}")]
    NotIncomplete(String),

    #[error("rank sequence is not weakly increasing")]
    NotIncreasing,

    #[error("path diagram is not balanced")]
    NotBalanced,

    #[error("path diagram has a negative rank or end rank")]
    NotPositive,

    #[error("invalid permutation for k = {k}: {reason}")]
    InvalidPermutation { k: usize, reason: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("vertical shifting exceeded the safety cap of {0} moves")]
    StepCapExceeded(usize),

    #[error("family size exceeds the cap of {0} paths")]
    FamilyCapExceeded(usize),

    #[error("invalid enumeration: {0}")]
    InvalidSpec(String),

    #[error("{count} preimages found for {path} (expected exactly one)")]
    Preimages { path: String, count: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
