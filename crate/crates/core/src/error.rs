use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("composition part {index} is zero; every part must be positive")]
    ZeroPart { index: usize },
    #[error("composition has {0} parts, which is outside C_even: an even number of parts is required")]
    OutsideCEven(usize),
    #[error("polynomial does not divide exactly")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval is empty: lower endpoint {lower} is not below upper endpoint {upper}")]
    EmptyInterval { lower: String, upper: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial of degree {degree} has only {real} real roots counted with multiplicity")]
    NonRealRoots { degree: usize, real: usize },
    #[error("invalid twin set: {0}")]
    TwinSet(String),
    #[error("antiregular graphs need at least two vertices, got {0}")]
    OrderTooSmall(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("interpolated coefficient of degree {0} is not an integer")]
    NonIntegerInterpolation(usize),
}
