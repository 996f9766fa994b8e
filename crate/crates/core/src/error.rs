use thiserror::Error;

use crate::treewidth::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A search exceeded its configured budget.
    #[error("resource budget exceeded in {what} (limit {limit})")]
    Resource { what: &'static str, limit: u64 },

    #[error("minor family is empty")]
    EmptyFamily,

    #[error("family member {index} is disconnected; F-Deletion over disconnected members lacks finite integer index")]
    DisconnectedMember { index: usize },

    #[error(
        "family contains no planar graph (e.g. {{K5, K3,3}}, Vertex Planarization); this regime is not supported"
    )]
    NoPlanarMember,

    #[error("boundary size mismatch: {left} vs {right}")]
    BoundaryMismatch { left: usize, right: usize },

    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),

    #[error("invalid tree decomposition: {0:?}")]
    InvalidDecomposition(Vec<Violation>),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("representative is not smaller than the protrusion")]
    NoShrinkage,

    #[error("no representative within the size cap matches the protrusion signature")]
    NoRepresentative,

    #[error("protrusion signature not present in the representative table")]
    SignatureMiss,

    #[error("table does not match request: {0}")]
    TableMismatch(String),

    #[error("solution is infeasible: {0}")]
    InfeasibleSolution(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Resource { .. } => "E_RESOURCE",
            Error::EmptyFamily => "E_EMPTY_FAMILY",
            Error::DisconnectedMember { .. } => "E_DISCONNECTED_MEMBER",
            Error::NoPlanarMember => "E_NO_PLANAR_MEMBER",
            Error::BoundaryMismatch { .. } => "E_BOUNDARY_MISMATCH",
            Error::InvalidBoundary(_) => "E_INVALID_BOUNDARY",
            Error::InvalidDecomposition(_) => "E_INVALID_DECOMPOSITION",
            Error::InvalidParams(_) => "E_INVALID_PARAMS",
            Error::NoShrinkage => "E_NO_SHRINKAGE",
            Error::NoRepresentative => "E_NO_REPRESENTATIVE",
            Error::SignatureMiss => "E_SIGNATURE_MISS",
            Error::TableMismatch(_) => "E_TABLE_MISMATCH",
            Error::InfeasibleSolution(_) => "E_INFEASIBLE_SOLUTION",
            Error::Internal(_) => "E_INTERNAL",
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
