//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operand is not unitary")]
    NotUnitary,
    #[error("group context mismatch")]
    CtxMismatch,
    #[error("closure exceeded cap of {0} elements")]
    ClosureTooLarge(usize),
    #[error("commutator is not a scalar matrix; subgroup is not abelian in the quotient")]
    NonScalarCommutator,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("center order must divide n")]
    BadCenter,
    #[error("subgroup is contained in the identity component; no twisted data")]
    NotTwisted,
    #[error("twisted lift failed: {0}")]
    LiftFailed(String),
    #[error("element is not a unit of the Pin group")]
    NotPin,
    #[error("search space exceeds configured bound of {0}")]
    SearchTooLarge(usize),
    #[error("quadratic function is not compatible with the symplectic form")]
    NotCompatible,
    #[error("invariant mismatch: {0}")]
    InvariantMismatch(String),
    #[error("unknown catalog key: {0}")]
    UnknownKey(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
