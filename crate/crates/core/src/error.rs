use thiserror::Error;

/// Errors raised by graph construction, parsing, and the exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),

    /// A documented precondition does not hold (for example a non-minimal cover).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The instance exceeds the size limit of an exact or exhaustive routine.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// Text could not be parsed in the requested format.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, actual: usize, limit: usize) -> Result<(), Self> {
        if actual > limit {
            Err(Error::Capacity {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
