use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different ground sets ({left} vs {right})")]
    GroundMismatch { left: String, right: String },
    #[error("variable x_{0} is not in the ground set")]
    LabelNotInGround(usize),
    #[error("invalid ground set: {0}")]
    InvalidGroundSet(String),
    #[error("invalid variable subset: {0}")]
    InvalidSubset(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("the unit monomial is not allowed here")]
    UnitMonomial,
    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),
    #[error("exponent {exponent} of x_{label} exceeds the bound {bound}")]
    ExponentExceedsBound { label: usize, exponent: u64, bound: u64 },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u64, found: u64 },
    #[error("ideal is not generated in a single degree")]
    MixedDegrees,
    #[error("ideal is not a principal Borel ideal")]
    NotPrincipal,
    #[error("generators are not sorted strictly decreasing in lex order")]
    Unsorted,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} = {actual} exceeds the configured limit {limit}")]
    LimitExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
