use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor mismatch: order {order} does not divide conductor {conductor}")]
    ConductorMismatch { order: u32, conductor: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("Cartan entry c_{i}{j} undefined (matrix outside the finite-dimensional regime)")]
    CartanUndefined { i: usize, j: usize },

    #[error("root system not finite at cap {cap}")]
    NotFinite { cap: usize },

    #[error("resource budget exceeded: {needed} candidate words, budget {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("unrecognized degree pattern: {0}")]
    UnrecognizedPattern(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotFinite { .. } => 3,
            Error::Budget { .. } => 4,
            Error::Constraint(_) => 5,
            Error::Inconsistent(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
