use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported prime {0}: expected an odd prime <= 13")]
    UnsupportedPrime(usize),
    #[error("division by zero in Q(rho)")]
    ZeroInversion,
    #[error("Galois exponent {0} is divisible by p")]
    BadExponent(i64),
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial is not invertible in K[x]/(x^p - 1)")]
    NotInvertible,
    #[error("the lambda = 1 eigenspace is not one-dimensional")]
    DegeneratePair,
    #[error("symbol algebra parameters do not match")]
    ParamMismatch,
    #[error("slot polynomial evaluates to a non-invertible element")]
    SlotSingular,
    #[error("element is not a scalar multiple of the identity")]
    NotScalar,
    #[error("lifting system is inconsistent")]
    NoSolution,
    #[error("no invertible sample found after bounded retries")]
    RetriesExhausted,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("internal arithmetic invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
