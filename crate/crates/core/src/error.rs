use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("ideal is the unit ideal (colength 0)")]
    UnitIdeal,

    #[error("the origin is not a point of the support")]
    PointNotInSupport,

    #[error("support is not concentrated at the origin")]
    SupportNotLocal,

    #[error("socle dimension {socle} does not equal generator count {generators} minus one")]
    LemmaViolation { socle: usize, generators: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
