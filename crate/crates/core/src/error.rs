use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("no prime divides all of a, b and c")]
    EmptyQ,
    #[error("exponents at {p} and {q} are not proportional")]
    NotProportional { p: BigUint, q: BigUint },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
