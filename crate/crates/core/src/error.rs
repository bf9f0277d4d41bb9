use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition text: {0}")]
    Parse(String),
    #[error("parts are not weakly decreasing: {0}")]
    NotDecreasing(String),
    #[error("size {size} exceeds the cap of {cap} cells")]
    SizeLimit { size: usize, cap: usize },
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("permutation of degree {perm} used on a shape of size {shape}")]
    DegreeMismatch { perm: usize, shape: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("no standard tableau has content vector {0:?}")]
    Inconsistent(Vec<i64>),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("trivial partition {0} is not allowed in a multi-member family")]
    TrivialPartition(String),
    #[error("partition {partition} has {rows} rows, more than d = {d}")]
    RowBound { partition: String, rows: usize, d: usize },
    #[error("operation needs a family with at least two members")]
    SingleMember,
    #[error("family has no members")]
    EmptyFamily,
    #[error("time budget of {0} ms exceeded")]
    BudgetExceeded(u64),
    #[error("solution space for tableau {tableau} has dimension {dim}, expected 1")]
    Degenerate { tableau: String, dim: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
