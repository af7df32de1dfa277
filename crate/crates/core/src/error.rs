use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed-field arithmetic: {0} vs {1}")]
    MixedFields(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("monomial {0} does not divide {1}")]
    NotDivisible(String, String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("element is not graded: {0}")]
    Ungraded(String),
    #[error("graded piece is infinite dimensional: {0}")]
    InfiniteDimensionalPiece(String),
    #[error("regime violation: {0}")]
    RegimeViolation(String),
    #[error("localization failed to stabilize: {0}")]
    StabilizationFailure(String),
    #[error("empty resolution chain")]
    EmptyChain,
    #[error("resolution did not terminate within {0} steps")]
    ResolutionTooLong(usize),
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),
    #[error("field must be a prime field: {0}")]
    NonPrimeField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
