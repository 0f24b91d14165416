use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected n = {expected}, got n = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("weight {weight} is not {p}-restricted")]
    NotRestricted { weight: String, p: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("move {kind} is not applicable at {weight}")]
    NotApplicable { kind: &'static str, weight: String },

    #[error("no certified edge {from} -> {to} for p = {p}")]
    NoSuchEdge { from: String, to: String, p: u64 },

    #[error("vertex count {count} exceeds budget {budget}")]
    BudgetExceeded { count: u128, budget: u64 },

    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: String, to: String },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
