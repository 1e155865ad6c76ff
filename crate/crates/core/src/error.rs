use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad order {0}: expected an even count of at least 6")]
    BadOrder(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap")]
    Overlap,
    #[error("set is not a connected dominating set")]
    NotCds,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("partition is not a connected coalition partition")]
    InvalidPartition,
    #[error("order {n} exceeds the limit {limit} for {what}")]
    TooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
