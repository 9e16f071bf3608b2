use thiserror::Error;

/// Structural failures: malformed inputs, bad parameters, capacity limits.
///
/// Axiom failures and invalid monodromy are *not* errors; they are reported
/// through [`crate::AxiomReport`] and [`crate::ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed quandle table: {0}")]
    MalformedTable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("element outside carrier: {0}")]
    OutsideCarrier(String),
    #[error("not a quandle: {0}")]
    NotAQuandle(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
