use thiserror::Error;

/// Errors raised by constructors and bijections.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid overline mark: {0}")]
    InvalidMark(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid diamond: {0}")]
    InvalidDiamond(String),
    #[error("unsupported family/params combination: {0}")]
    UnsupportedFamily(String),
    #[error("series order mismatch: left has order {left}, right has order {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series inversion requires a unit constant term, got {0}")]
    NonUnitConstant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
