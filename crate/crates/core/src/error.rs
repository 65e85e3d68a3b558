use thiserror::Error;

/// Errors raised by the algebra engines and the input layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: String, limit: usize },

    #[error("memory cap exceeded: {what} (limit {limit})")]
    MemoryCap { what: String, limit: usize },

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("ideal is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("term order is not a well-order on non-homogeneous input")]
    OrderNotWellFounded,

    #[error("set is not admissible for the collection: {0}")]
    NotAdmissible(String),

    #[error("collection is not made of corner minors: {0}")]
    NotCornerCollection(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn resource(what: impl Into<String>, limit: usize) -> Self {
        Error::ResourceCap {
            what: what.into(),
            limit,
        }
    }

    pub fn memory(what: impl Into<String>, limit: usize) -> Self {
        Error::MemoryCap {
            what: what.into(),
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
