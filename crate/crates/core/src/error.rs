use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request that asks for nothing (e.g. zero primes).
    #[error("empty request: {0}")]
    EmptyRequest(String),

    /// A runtime guard refused the request; the message explains the limit.
    #[error("refused: {0}")]
    Refused(String),

    /// Input failed structural validation.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A constraint system admits no solution.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An inequality or side condition could not be certified; names the condition.
    #[error("certification failed: {0}")]
    Certification(String),

    /// An iteration or bisection did not find a crossing below its cap.
    #[error("divergence: {0}")]
    Divergence(String),

    /// The bound iteration failed to contract from its seed.
    #[error("non-contraction: {0}")]
    NonContraction(String),

    /// A report was requested before all of its inputs were computed.
    #[error("incomplete report: {0}")]
    Incomplete(String),

    /// Interval arithmetic produced an unusable value (NaN endpoint).
    #[error("arithmetic error: {0}")]
    Arith(String),

    /// Configuration file or override could not be interpreted.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
