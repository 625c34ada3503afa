use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window mismatch: polynomial in {left} variables combined with one in {right}")]
    WindowMismatch { left: usize, right: usize },

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
