use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("parts {0:?} are not weakly decreasing positive integers")]
    InvalidPartition(Vec<usize>),

    #[error("parts {0:?} are not strictly decreasing positive integers")]
    InvalidBarPartition(Vec<usize>),

    #[error("part {part} is divisible by p = {p}")]
    PartDivisibleByP { part: usize, p: u64 },

    #[error("{value} is divisible by p = {p}")]
    DivisibleByP { value: String, p: u64 },

    #[error("{0:?} is not a p-bar-core")]
    NotBarCore(Vec<usize>),

    #[error("{0:?} is not a p-core")]
    NotCore(Vec<usize>),

    #[error("n - |kappa| = {difference} is not a nonnegative multiple of p = {p}")]
    WeightNotIntegral { difference: i64, p: u64 },

    #[error("inconsistent case selection: {0}")]
    InconsistentCase(String),

    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,

    #[error("conductor {conductor} is divisible by p = {p}")]
    ConductorNotCoprime { conductor: usize, p: u64 },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("illegal character value: {0}")]
    IllegalCharacter(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
