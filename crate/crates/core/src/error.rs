use thiserror::Error;

use crate::reduction::NeatFailure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("subspace is not contained in the given subspace")]
    NotContained,
    #[error("invalid symplectic form: {0}")]
    InvalidForm(String),
    #[error("subspace is not Lagrangian")]
    NotLagrangian,
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error("subspace is not coisotropic")]
    NotCoisotropic,
    #[error("not a complement: {0}")]
    NotComplement(String),
    #[error("invalid splitting c-triple: {}", .0.join("; "))]
    InvalidTriple(Vec<String>),
    #[error("matrix is not a linear symplectomorphism between the given spaces")]
    NotSymplectic,
    #[error("spaces do not match: {0}")]
    SpaceMismatch(String),
    #[error("neat intersection fails: {0}")]
    NotNeat(Box<NeatFailure>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
