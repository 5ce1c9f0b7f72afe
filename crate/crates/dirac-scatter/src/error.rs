use thiserror::Error;

/// Errors raised by the solvers, field containers, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Array or operator dimensions are inconsistent.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Invalid argument combination.
    #[error("argument error: {0}")]
    Argument(String),

    /// A factorization hit a pivot below the singularity threshold.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// A marching step produced a non-finite value.
    #[error("non-finite value detected at marching step {step}")]
    NanDetected { step: usize },

    /// Config file problems (unknown keys, unparsable values, missing fields).
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
