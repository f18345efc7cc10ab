use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    /// The working truncation cannot certify the requested computation.
    #[error("precision too low: need N >= {needed}, have N = {available}")]
    PrecisionTooLow { needed: usize, available: usize },

    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),

    #[error("ideal is the unit ideal; the quotient is the zero ring")]
    UnitIdeal,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("algebra is not Gorenstein (socle dimension {socle_dim})")]
    NotGorenstein { socle_dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The dimension hypothesis of the separating-polynomial construction fails.
    #[error("dimension hypothesis fails: dim(P c(g) / (m P c(g) + B)) = {quotient_dim} < mu(P) + 1 = {required}")]
    DimensionHypothesis { quotient_dim: usize, required: usize },

    #[error("exhaustive search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A construction produced output that fails its own post-verification.
    #[error("internal verification failed: {0}")]
    Internal(String),
}
