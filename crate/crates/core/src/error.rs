use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: u128 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition is not invariant under the group")]
    NotInvariant,
    #[error("block index {index} out of range ({count} blocks)")]
    InvalidBlock { index: usize, count: usize },
    #[error("action is not labelled by tuples")]
    NotTupleAction,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
