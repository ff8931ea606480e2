use thiserror::Error;

/// Errors raised by the library. Decoding failure is never an error; it is
/// reported as `None` by the decoders that can fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is out of range (must be < 2^61)")]
    ModulusOutOfRange(u64),

    #[error("value {value} is not an element of F_{modulus}")]
    NotInField { value: u64, modulus: u64 },

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("repeated evaluation point {0}")]
    RepeatedPoint(u64),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("not a downset: {0}")]
    NotDownset(String),

    #[error("exponent vector {0:?} lies outside the box")]
    OutsideBox(Vec<u32>),

    #[error("monomial {0:?} is not in the downset")]
    NotInDownset(Vec<u32>),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("incomplete table: expected {expected} entries, got {got}")]
    IncompleteTable { expected: usize, got: usize },

    #[error("weight {0} is outside [0, 1]")]
    WeightOutOfRange(String),

    #[error("too many erasures: {erasures} erasures leave no room for degree {degree} among {points} points")]
    TooManyErasures {
        erasures: usize,
        degree: usize,
        points: usize,
    },

    #[error("erasure position {0} is out of range")]
    ErasureOutOfRange(usize),

    #[error("slicing requires at least two variables")]
    NoSlices,

    #[error("enumeration guard exceeded: {0} codewords")]
    EnumerationTooLarge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
