use crate::combinatorics::{ShapeError, TableauError};
use crate::linalg::LinalgError;
use crate::monoid::MonoidError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A computed object contradicts a structural fact it must satisfy.
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
