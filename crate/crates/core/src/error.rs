use thiserror::Error;

/// Errors raised by the polynomial, matrix and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid hex polynomial {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The Reiger bound `2b <= n - k` is violated.
    #[error("Reiger bound violated: 2b = {twice_b} exceeds n - k = {redundancy}")]
    Reiger { twice_b: usize, redundancy: usize },

    /// The brute-force error set would exceed the desk-scale limit.
    #[error("error set of {size} patterns exceeds the limit of {limit}")]
    TooLarge { size: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
