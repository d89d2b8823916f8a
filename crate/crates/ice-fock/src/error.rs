use thiserror::Error;

use crate::ring::RingCtx;

#[derive(Debug, Error)]
pub enum IceError {
    #[error("ring context mismatch: {0} vs {1}")]
    CtxMismatch(RingCtx, RingCtx),
    #[error("charge mismatch: {0} vs {1}")]
    ChargeMismatch(i64, i64),
    #[error("invalid g specialization: {0}")]
    BadGSpec(String),
    #[error("exact division by z_{0} - z_{1} left a remainder")]
    DivisionFailed(usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("coefficient does not fit the JSON integer range")]
    CoeffOverflow,
}

pub type Result<T> = std::result::Result<T, IceError>;
