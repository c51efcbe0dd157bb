use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// `position` is a 1-based character column for syntax errors and the
    /// 0-based index into `pairs` for matching violations.
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("admissible set is not stable under index reversal")]
    NotSymmetric,

    #[error("not a subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("relation {source_tag} fails: sides have different matchings")]
    RelationFailure { source_tag: String },

    #[error("inconsistent exponent for {parameter}: {values:?}")]
    ThetaInconsistency { parameter: String, values: Vec<i64> },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
