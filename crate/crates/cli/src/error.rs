use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AppError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("cannot read `{0}`: {1}")]
    Input(String, String),
}
