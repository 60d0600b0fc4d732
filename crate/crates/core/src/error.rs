use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),

    #[error("size error: {0}")]
    Size(String),

    #[error("reduction did not terminate within {limit} rewrite steps")]
    NonTermination { limit: usize },

    #[error("grading error: {0}")]
    Grading(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("missing assignment for generator `{0}`")]
    MissingLetter(String),

    #[error("membership error: {0}")]
    Membership(String),

    #[error("window overflow: |N| = {power} exceeds window radius {radius}")]
    WindowOverflow { power: i64, radius: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid presentation: {0}")]
    Presentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
