use thiserror::Error;

/// Errors raised while building or analysing finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("axiom violated: {0}")]
    Axiom(String),

    #[error("grading violated: {0}")]
    Grading(String),

    #[error("incomplete enumeration: more than {cap} {what}")]
    CapExceeded { what: String, cap: usize },

    #[error("not graded: {0}")]
    NotGraded(String),

    #[error("incompatible structures: {0}")]
    Incompatible(String),

    #[error("invalid homomorphism: {0}")]
    Hom(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
