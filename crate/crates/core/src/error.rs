use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}: expected a prime power q <= 32")]
    UnsupportedOrder(u32),
    #[error("modulus must be monic of degree {degree} over GF({p}) (constant term first)")]
    BadModulus { p: u32, degree: u32 },
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u8>),
    #[error("element code {code} out of range for GF({q})")]
    ElementOutOfRange { code: u32, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("matrix parse error: {0}")]
    Parse(String),
    #[error("zero-dimensional code is not supported")]
    ZeroSubspace,
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("invalid permutation of {0} columns")]
    InvalidPermutation(usize),
    #[error("dimension out of range: {0}")]
    Dimension(String),
    #[error("expected exactly one zero column, found {0}")]
    ZeroColumnCount(usize),
    #[error("not a clique: {0}")]
    NotAClique(String),
    #[error(
        "enumeration size {size} exceeds guard {guard} (pass --force or raise GRASSCLIQUE_GUARD)"
    )]
    GuardExceeded { size: u128, guard: u128 },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
