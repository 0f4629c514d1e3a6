use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("generator name `{0}` appears more than once")]
    DuplicateGenerator(String),

    #[error("generator `{name}`: {reason}")]
    ParityViolation { name: String, reason: String },

    #[error("generator `{name}` has bidegree ({t},{w}); need w >= 1 or t >= 1")]
    NonConnective { name: String, t: i64, w: i64 },

    #[error("elements live in different algebras")]
    AmbientMismatch,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("beta operations do not exist at p = 2")]
    BetaAtTwo,

    #[error("half-integral operation index {index2}/2 is not defined at p = 2")]
    FractionalIndexAtTwo { index2: i64 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("sphere dimension {0} is even; only odd spheres are supported")]
    EvenSphere(i64),

    #[error("the prime must be odd here (got {0})")]
    EvenPrime(u32),

    #[error("degree {degree} exceeds the materialized cap {cap}")]
    DegreeCapExceeded { degree: i64, cap: i64 },

    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(usize),

    #[error("generator `{name}` has degree {degree}; degrees must be >= {min}")]
    BadDegree { name: String, degree: i64, min: i64 },

    #[error("integer overflow while evaluating {0}")]
    Overflow(String),
}
