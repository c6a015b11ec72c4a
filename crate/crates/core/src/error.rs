use thiserror::Error;

pub type Result<T, E = ComError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown ground-set element `{0}`")]
    UnknownElement(String),

    #[error("duplicate ground-set element `{0}`")]
    DuplicateElement(String),

    #[error("the sign system is empty")]
    EmptySystem,

    #[error("invalid tope set: {0}")]
    InvalidTopes(TopeError),

    #[error(
        "common tope support has {support} elements; the limit is {limit} \
         (3^{support} candidates), pass --force to override"
    )]
    TooLarge { support: usize, limit: usize },

    #[error(
        "point #{point} lies on hyperplane `{hyperplane}`; every point must lie inside a chamber"
    )]
    OnHyperplane { point: usize, hyperplane: String },

    #[error("hyperplane `{0}` has an all-zero normal vector")]
    ZeroNormal(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed JSON input: {0}")]
    Json(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

impl ComError {
    /// True for errors caused by malformed input text rather than by its content.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, ComError::Parse { .. } | ComError::Json(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopeError {
    #[error("no topes given")]
    Empty,
    /// Topes of a COM all share the same support.
    #[error(
        "topes {first} and {second} have different supports; \
         all topes of a conditional oriented matroid share one support"
    )]
    MixedSupports { first: String, second: String },
}
