use thiserror::Error;

/// Errors raised by the computational modules.
///
/// The variants fall into three families that the CLI maps onto exit codes:
/// malformed input, violated mathematical preconditions, and exceeded
/// resource caps. See [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("diagram does not commute: {0}")]
    Diagram(String),
    #[error("row is not exact: {0}")]
    Exactness(String),
    #[error("point is not on the zero locus: {0}")]
    OffLocus(String),
    #[error("grading error: {0}")]
    Grading(String),
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("{0}; eliminate the variable first")]
    ReduceVariables(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("malformed window: {0}")]
    Window(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Precondition,
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Dimension(_)
            | Error::IndexOutOfRange { .. }
            | Error::Parse(_)
            | Error::Window(_)
            | Error::InvalidArgument(_) => ErrorKind::Input,
            Error::ResourceLimit(_) => ErrorKind::Resource,
            Error::Diagram(_)
            | Error::Exactness(_)
            | Error::OffLocus(_)
            | Error::Grading(_)
            | Error::NotCompleteIntersection(_)
            | Error::ReduceVariables(_)
            | Error::NotAComplex(_) => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
