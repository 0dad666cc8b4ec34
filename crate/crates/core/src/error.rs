use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("size {size} exceeds the limit {limit} for {what}")]
    SizeExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("move undefined: {0}")]
    UndefinedMove(String),

    #[error("{series}: parameter {param} is out of range ({expected})")]
    ParameterOutOfRange {
        series: String,
        param: u64,
        expected: &'static str,
    },

    #[error("chain mismatch at step {step}: {detail}")]
    ChainMismatch { step: usize, detail: String },

    #[error("resource guard exceeded: {0}")]
    ResourceExceeded(String),

    #[error("no additive generic eigenvalues exist: every multiplicity is divisible by {0}")]
    Obstruction(u64),

    #[error("failed to generate generic eigenvalues after {attempts} attempts: {last_witness}")]
    GenerationFailed { attempts: u32, last_witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;
