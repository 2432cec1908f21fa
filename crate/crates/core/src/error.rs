use thiserror::Error;

/// Errors produced by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside the supported range 1..=64")]
    SizeOutOfRange(usize),
    #[error("vertex {0} beats itself")]
    ReflexivePair(usize),
    #[error("pair ({0}, {1}) must be oriented in exactly one direction")]
    AsymmetryViolation(usize, usize),
    #[error("edge ({0}, {1}) is not a pair of distinct positions in range")]
    InvalidEdge(usize, usize),
    #[error("numbering has {found} entries but the object has {expected} vertices")]
    NumberingSizeMismatch { expected: usize, found: usize },
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("walk step {0} joins non-adjacent or equal vertices")]
    InvalidWalk(usize),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("{what} on {n} vertices exceeds the exact-search limit of {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("the given sets do not form a pure pair")]
    NotAPurePair,
    #[error("position set is not a connected component")]
    NotAComponent,
    #[error("search budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("invalid blockade: {0}")]
    InvalidBlockade(String),
    #[error("vertex {0} lies in no block")]
    VertexNotInBlockade(usize),
    #[error("minor search failed after {rounds} rounds (best width {best_width})")]
    SearchFailed { rounds: usize, best_width: usize },
    #[error("sampler gave up after {0} attempts")]
    RetryLimitExceeded(usize),
    #[error("verification failed after {attempts} attempts: {failed:?}")]
    VerificationFailed {
        attempts: usize,
        failed: Vec<String>,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
