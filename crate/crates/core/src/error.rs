//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("domain violation: {0}")]
    Domain(&'static str),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("small divisor below floor at mode k = {k}")]
    ResonantDivisor { k: i64 },

    #[error("Newton iteration stagnated: {0}")]
    NewtonStagnation(String),

    #[error("parameter outside admissible domain: {0}")]
    ParameterDomain(String),

    #[error("majorant recurrence diverged")]
    MajorantBlowup,

    #[error("series tail bound does not close: {0}")]
    TailDivergence(String),

    #[error("no admissible gamma reaches the target measure")]
    GammaExhausted,

    #[error("soundness check failed: {0}")]
    Soundness(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
