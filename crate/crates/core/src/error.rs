use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A syntax error at a 1-based line/column position.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is undefined for this input (e.g. a chart at an irrelevant element).
    #[error("{0}")]
    Domain(String),

    #[error("resource limit exceeded: {what} (budget {budget})")]
    ResourceLimit { what: String, budget: u64 },

    /// An internal consistency check failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } => 3,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
