use thiserror::Error;

/// Errors shared across the numeric modules.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("spectral type is not tempered: max |Im| residue {residue:e} exceeds tolerance")]
    NonTempered { residue: f64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("degenerate range: alpha - beta = {0} < 4, no usable partition")]
    DegenerateRange(f64),

    #[error("log-gamma pole at nonpositive integer z = {0}")]
    PoleAtNonpositiveInteger(f64),

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("quadrature failed to converge: best value {value:e}, error estimate {estimate:e}")]
    ConvergenceFailure { value: f64, estimate: f64 },

    #[error("prime {0} outside ingested eigenvalue range (P_max = {1})")]
    PrimeOutOfRange(u64, u64),

    #[error("index n = 0 is not allowed here")]
    ZeroIndex,

    #[error("coefficient table too small: needs ({0}, {1}) but N_max = {2}")]
    CoverageError(u64, u64, u64),

    #[error("arguments must be coprime: gcd({0}, {1}) != 1")]
    NonCoprime(i64, i64),

    #[error("modulus must be >= 1, got {0}")]
    NonPositiveModulus(i64),

    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },

    #[error("duplicate prime {0} at line {1}")]
    DuplicatePrime(u64, usize),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
