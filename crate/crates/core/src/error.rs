use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("generation error: {0}")]
    Generation(String),
    #[error("{0}")]
    Parse(crate::dsl::ParseError),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn semantic(msg: impl Into<String>) -> Self {
        Error::Semantic(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
