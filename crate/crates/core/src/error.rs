use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no removable boxes")]
    NoRemovableBoxes,

    #[error("part not removable: part {index} is zero")]
    PartNotRemovable { index: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("component count mismatch: expected {expected}, got {actual}")]
    ComponentMismatch { expected: usize, actual: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("oracle bound exceeded: {size} > {bound}")]
    OracleBoundExceeded { size: usize, bound: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code, shared by the CLI JSON output and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidComposition(_) => "invalid_composition",
            Error::Parse(_) => "parse_error",
            Error::NoRemovableBoxes => "no_removable_boxes",
            Error::PartNotRemovable { .. } => "part_not_removable",
            Error::SizeMismatch(_) => "size_mismatch",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::ComponentMismatch { .. } => "component_mismatch",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::OracleBoundExceeded { .. } => "oracle_bound_exceeded",
            Error::Overflow(_) => "overflow",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
