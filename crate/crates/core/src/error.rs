use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by non-monomial scalar {0}")]
    NonMonomialDivisor(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {0} does not fit in a {1}x{2} box")]
    NotInBox(String, u32, u32),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("operands live in different exterior algebras")]
    MixedAlgebra,
    #[error("cochains share W-coordinate blocks")]
    OverlappingBlocks,
    #[error("variable {0} is not allowed here")]
    BadVariable(String),
    #[error("Gaussian weight of block {0} is zero")]
    ZeroWeight(u32),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
