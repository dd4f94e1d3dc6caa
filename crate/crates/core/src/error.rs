use thiserror::Error;

/// Errors raised by every layer of the crate.
///
/// Each variant belongs to exactly one module; [`Error::module`] names it so
/// front ends can report where a failure originated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),
    #[error("no built-in irreducible polynomial for q={q}, degree {ell}")]
    NoDefaultModulus { q: u32, ell: usize },
    #[error("expected a coefficient vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value {value} is not reduced modulo {q}")]
    Unreduced { value: u32, q: u32 },

    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid index tuple: {0}")]
    InvalidTuple(String),
    #[error("matrix is singular")]
    Singular,

    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("enumeration of {size} items exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },

    #[error("received space has dimension {got}, the code has dimension {expected}")]
    UnsupportedDimension { expected: usize, got: usize },
    #[error("error count e={e} outside 0..={k}")]
    InvalidRadius { e: usize, k: usize },

    #[error("cannot reach subspace distance {target} with t={t} errors in dimension {k}")]
    ImpossibleDistance { t: usize, k: usize, target: usize },
    #[error("no sample at exact distance after {0} attempts")]
    RetryBudgetExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Name of the module that raises this error.
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            NotPrime(_) | ZeroInverse | InvalidModulus(_) | NoDefaultModulus { .. } => "gf",
            LengthMismatch { .. } | Unreduced { .. } => "gf",
            Shape(_) | Singular => "matgf",
            InvalidTuple(_) => "pluecker",
            InvalidParams(_) | CapExceeded { .. } => "gabidulin",
            UnsupportedDimension { .. } | InvalidRadius { .. } => "listdec",
            ImpossibleDistance { .. } | RetryBudgetExhausted(_) => "channel",
            Parse(_) => "cli",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
