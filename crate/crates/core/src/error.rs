//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact and numeric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("invalid parameter vector `{0}`")]
    ParseParamVec(String),
    #[error("parameter vector entries must be nonzero")]
    ZeroParameter,
    #[error("multinomial parts sum to {got}, expected {expected}")]
    MultinomialSum { expected: u64, got: u64 },
    #[error("index k = {k} exceeds n = {n}")]
    IndexOutOfRange { k: u64, n: u64 },
    #[error("exact polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("quadrature tail bound {bound:e} exceeds tolerance {tol:e}; increase the truncation")]
    TailBound { bound: f64, tol: f64 },
    #[error("quadrature configuration rejected: {0}")]
    BadQuadConfig(String),
    #[error("monte carlo needs at least 2 samples, got {0}")]
    TooFewSamples(u64),
    #[error("{0} is not prime")]
    BadPrime(u64),
    #[error("fermionic mode requires an odd prime, got {0}")]
    EvenFermionicPrime(u64),
    #[error("truncation depth {depth} exceeds configured maximum {max}")]
    DepthOutOfRange { depth: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
