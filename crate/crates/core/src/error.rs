use thiserror::Error;

use crate::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("degree bounds differ ({left} vs {right})")]
    DegreeBoundMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("partition {partition} lies above the ideal's degree bound {bound}")]
    OutOfRange { partition: Partition, bound: usize },

    #[error("resource bound exceeded: {what} needs {required}, bound is {bound}")]
    ResourceBound {
        what: &'static str,
        required: usize,
        bound: usize,
    },

    #[error("morphism is not idempotent modulo the ideal (block {0})")]
    NotIdempotent(Partition),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::SizeMismatch(_) => "size_mismatch",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::DegreeBoundMismatch { .. } => "degree_bound_mismatch",
            Error::DegreeOverflow { .. } => "degree_overflow",
            Error::OutOfRange { .. } => "out_of_range",
            Error::ResourceBound { .. } => "resource_bound",
            Error::NotIdempotent(_) => "not_idempotent",
            Error::Consistency(_) => "consistency",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
