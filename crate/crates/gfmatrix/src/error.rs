use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range (1..=16)")]
    BadExtensionDegree(usize),
    #[error("field size {0} exceeds the 2^16 limit")]
    FieldTooLarge(u128),
    #[error("modulus is not a monic degree-{k} polynomial")]
    BadModulus { k: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("no irreducible polynomial found (internal)")]
    NoIrreducible,
    #[error("division by zero in GF({p}^{k})")]
    DivisionByZero { p: u64, k: usize },
    #[error("element {0} out of range for field of size {1}")]
    ElementOutOfRange(u64, u64),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("matrix group is not irreducible")]
    NotIrreducible,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operation requires a prime field, got GF({p}^{k})")]
    NotPrimeField { p: u64, k: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] permcore::GroupError),
}

pub type Result<T> = std::result::Result<T, FieldError>;
