use num_bigint::BigInt;
use thiserror::Error;

use crate::sequences::SeqKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("division by zero")]
    ZeroDivisor,
    #[error("entry ({row}, {col}) = {value} is not divisible by {divisor}")]
    NotDivisible {
        row: usize,
        col: usize,
        value: BigInt,
        divisor: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is a scalar sequence; this operation needs a matrix sequence")]
    NotMatrixKind(SeqKind),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("characteristic roots coincide for r = {0}")]
    DegenerateRoots(u32),
    #[error(transparent)]
    Division(#[from] DivisionError),
}

pub type Result<T> = std::result::Result<T, Error>;
