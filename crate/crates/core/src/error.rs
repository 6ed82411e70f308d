use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The coefficient sum has infinitely many nonzero terms (all blocks of size one
    /// together with a negative index).
    #[error(
        "infinite support: every block has size 1 and the index {index:?} has a negative entry"
    )]
    InfiniteSupport { index: Vec<i64> },

    #[error("alpha = {alpha} raised to k = {k} is not an integer")]
    NonIntegralPower { alpha: i64, k: i64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("constant term of the denominator is not 1")]
    ConstantTermNotOne,

    #[error("coefficient table too large: {cells} cells exceeds budget of {budget}")]
    TableTooLarge { cells: u128, budget: u128 },

    #[error("non-integral leading exponent {numerator}/24 in eta quotient")]
    NonIntegralLeadingExponent { numerator: i64 },

    #[error("matrix of size {0} is too large for Leibniz expansion (max 5)")]
    MatrixTooLarge(usize),

    #[error("non-integral step at n = {n}")]
    NonIntegralStep { n: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
