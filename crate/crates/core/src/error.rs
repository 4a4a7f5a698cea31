use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chart dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i32, i32),

    #[error("form of degree {degree} is not top degree on a {dim}-dimensional chart")]
    NotTopDegree { degree: i32, dim: usize },

    #[error("value algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: String, found: String },

    #[error("generalized form type mismatch: {0} vs {1}")]
    TypeMismatch(u8, u8),

    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("matrix is not in the span of the algebra realization")]
    NotInSpan,

    #[error("representation of a unipotent element is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("group element shape: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid data: {0}")]
    Invalid(String),
}
