use thiserror::Error;

use crate::exactla::{LinAlgError, ParseScalarError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("Hopf algebra axioms fail: {0}")]
    AxiomsFailed(String),
    #[error("not a Hopf algebra map: {0}")]
    NotAHopfMap(String),
    #[error("Hopf map is not surjective (rank {rank}, target dimension {target})")]
    NotSurjective { rank: usize, target: usize },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules are over different Hopf algebras")]
    AlgebraMismatch,
    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("linear system has no solution: {0}")]
    NoSolution(String),
    #[error("linear system has no unique solution: {0}")]
    NotUnique(String),
    #[error("relative constraint fails at validation object {0}")]
    ValidationFailed(String),
    #[error("candidate family violates the defining constraints: {0}")]
    ConstraintViolation(String),
    #[error("subspaces are not nested: {0}")]
    NotNested(String),
    #[error("end is not closed under composition: {0}")]
    NotClosed(String),
    #[error("half-braiding is not invertible at {0}")]
    NotInvertible(String),
    #[error("model comparison failed: {0}")]
    ModelMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

impl Error {
    /// Input errors (bad data, bad names) as opposed to a mathematical check
    /// failing on valid input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotAGroup(_)
                | Error::NotSubgroup(_)
                | Error::NotNormal(_)
                | Error::AxiomsFailed(_)
                | Error::NotAHopfMap(_)
                | Error::NotSurjective { .. }
                | Error::InvalidModule(_)
                | Error::AlgebraMismatch
                | Error::Shape(_)
                | Error::Parse(_)
                | Error::Unknown(_)
        )
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotNormal(_) => "NotNormal",
            Error::AxiomsFailed(_) => "AxiomsFailed",
            Error::NotAHopfMap(_) => "NotAHopfMap",
            Error::NotSurjective { .. } => "NotSurjective",
            Error::InvalidModule(_) => "InvalidModule",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::NotEquivariant(_) => "NotEquivariant",
            Error::Shape(_) => "Shape",
            Error::NoSolution(_) => "NoSolution",
            Error::NotUnique(_) => "NotUnique",
            Error::ValidationFailed(_) => "ValidationFailed",
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::NotNested(_) => "NotNested",
            Error::NotClosed(_) => "NotClosed",
            Error::NotInvertible(_) => "NotInvertible",
            Error::ModelMismatch(_) => "ModelMismatch",
            Error::Parse(_) => "Parse",
            Error::Unknown(_) => "Unknown",
        }
    }

    pub(crate) fn from_linalg(e: LinAlgError, context: &str) -> Self {
        match e {
            LinAlgError::NoSolution => Error::NoSolution(context.to_string()),
            LinAlgError::NotUnique => Error::NotUnique(context.to_string()),
            LinAlgError::Shape(s) => Error::Shape(format!("{context}: {s}")),
        }
    }
}

impl From<ParseScalarError> for Error {
    fn from(e: ParseScalarError) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
