use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GqError {
    #[error("matrix {0} is singular")]
    SingularMatrix(String),
    #[error("matrix {0} is not invertible")]
    NotInvertible(String),
    #[error("matrix {0} is not in the required class: {1}")]
    WrongClass(String, String),
    #[error("matrix {0} is not a point of GQ(S) (det {1})")]
    NotInS(String, u8),
    #[error("translation is undefined at its center {0}")]
    UndefinedAtCenter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no registered check matches {0:?}")]
    UnknownCheckId(String),
    #[error("unsupported format {format} for {what}")]
    UnsupportedFormat { what: String, format: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GqError>;
