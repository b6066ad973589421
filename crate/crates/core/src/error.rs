use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus {0} must be below 2^63")]
    ModulusTooLarge(u64),
    #[error("zero has no multiplicative order or inverse")]
    ZeroElement,
    #[error("no element of order >= {required} exists in a field of size {modulus}")]
    NoSuchElement { required: u64, modulus: u64 },
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicatePoints,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(u64, u64),
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed branching program: {0}")]
    MalformedGraph(String),
    #[error("element order {order} is below the required {required}")]
    OrderTooSmall { order: u64, required: u64 },
    #[error("field of size {modulus} is too small: need at least {required} ({bound})")]
    FieldTooSmall {
        modulus: u64,
        required: u128,
        bound: &'static str,
    },
    #[error("depth {0} is not a power of two")]
    DNotPowerOfTwo(usize),
    #[error("dense expansion needs {0} coefficients, above the 10^6 guard")]
    TooLarge(u128),
    #[error("field of size {modulus} must exceed the total degree {degree}")]
    FieldTooSmallForDegree { modulus: u64, degree: u64 },
    #[error("polynomial degree {degree} exceeds the staircase depth {depth}")]
    DegreeExceedsD { degree: usize, depth: usize },
    #[error("homogeneous part index {index} outside 1..={depth}")]
    BadDegreeIndex { index: usize, depth: usize },
    #[error("edge label at layer {layer} ({row},{col}) has a constant term")]
    NonHomogeneousLabel {
        layer: usize,
        row: usize,
        col: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
