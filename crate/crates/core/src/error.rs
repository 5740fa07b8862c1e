use thiserror::Error;

use crate::expr_parse::ParseError;
use crate::ring::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be below 2^62, got {0}")]
    ModulusTooLarge(u64),
    #[error("extension modulus is reducible or not monic")]
    ReducibleModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a non-monic polynomial over a ring that is not a field")]
    UnsupportedDivision,
    #[error("undefined: {0}")]
    Undefined(&'static str),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("variable mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: Var, found: Var },
    #[error("resultant of two constants is undefined")]
    DegenerateResultant,
    #[error("input must be monic")]
    NonMonicInput,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("algorithms disagree: {0}")]
    OracleMismatch(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("unknown field {0:?}: expected q, qx or fp:<prime>")]
    UnknownField(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
