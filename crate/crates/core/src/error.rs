use thiserror::Error;

use crate::tableaux::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A filling or shape is malformed (wrong row lengths, bad inner shape, ...).
    #[error("structural error: {0}")]
    Structural(String),
    #[error("operation `{op}` does not support tableau kind {kind}")]
    UnsupportedKind { op: &'static str, kind: String },
    #[error("parse error: {0}")]
    Parse(String),
    /// A quasisymmetry test was asked with fewer variables than the degree.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid filling: {0}")]
    Invalid(Violation),
    /// An identity that must hold by construction failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
