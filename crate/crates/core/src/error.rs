use thiserror::Error;

/// Errors raised by the evaluators and the verification driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("log-factorial of negative argument {0}")]
    NegativeFactorial(String),

    #[error("invalid Wigner arguments: {0}")]
    InvalidWignerArgs(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("invalid direction: {0}")]
    InvalidDirection(String),

    #[error("too close to a pole: sin(theta) = {sin_theta:e}, need at least {min:e}")]
    PoleProximity { sin_theta: f64, min: f64 },

    #[error("finite-difference step must be positive, got {0}")]
    InvalidStep(f64),

    #[error("azimuthal separation {0} is a multiple of pi; cotangent relations are undefined")]
    DegenerateAzimuth(f64),

    #[error("invalid theorem parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse {0:?} as an integer or half-integer")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
