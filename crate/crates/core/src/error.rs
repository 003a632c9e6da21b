use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InvalidInput` covers precondition violations on user-supplied data,
/// `Budget` covers refusals to start work that would exceed the enumeration
/// or counting budgets, and `BadReduction` / `Internal` flag conditions that
/// indicate a defect rather than bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("bad reduction suspected: {0}")]
    BadReduction(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
