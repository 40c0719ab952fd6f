use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the domain where the operation is defined.
    #[error("{op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// The windowed scan found no prime in (n, 2n]. Unreachable while
    /// Bertrand's postulate holds; reported instead of wrapping silently.
    #[error("no prime found in window ({n}, {}]; Bertrand's postulate violated?", 2 * n)]
    NoPrimeInWindow { n: u64 },

    #[error("value {0} is too large for this strategy")]
    TooLarge(String),

    #[error("n={n} strategy={strategy}: got {got}, expected {expected}")]
    OracleMismatch {
        n: u64,
        strategy: String,
        got: String,
        expected: u64,
    },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
