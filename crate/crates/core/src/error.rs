use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// The CLI maps these onto its exit-code contract via [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("variable-count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not a Poincaré object: {0}")]
    NotPoincare(String),
    #[error("degenerate form: {0}")]
    Degenerate(String),
    #[error("no solution: {0}")]
    NoSolution(String),
}

impl Error {
    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit(_) => 3,
            Error::Precondition(_) | Error::Degenerate(_) | Error::NoSolution(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
