use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every domain failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("zero element has no inverse")]
    ZeroInverse,
    #[error("index out of range: {0}")]
    IndexOutOfRange(i64),
    #[error("signature mismatch: C({0},{1}) vs C({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("not a member of the lattice: {0}")]
    NotAMember(String),
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("lattice is not positive definite")]
    NotDefinite,
    #[error("lattice is not even")]
    NotEven,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("no rescaling makes the lattice even unimodular; raw Gram: {0}")]
    NoRescaling(String),
    #[error("loops intersect")]
    LoopsIntersect,
    #[error("no generic projection found after {0} attempts")]
    NoGenericProjection(usize),
    #[error("invalid loop: {0}")]
    InvalidLoop(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
}
