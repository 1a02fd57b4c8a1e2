//! Exact linear symplectic algebra over the rationals: split Lagrangian
//! subspaces, coisotropic reduction with explicit splittings, composition of
//! linear canonical relations, and a polynomial truncation of the boundary
//! data of the Poisson sigma model with zero Poisson structure.

pub mod error;
pub mod linalg;
pub mod psm;
pub mod reduction;
pub mod relations;
pub mod symplectic;
pub mod wire;

pub use error::{Error, ParseScalarError, Result};
pub use linalg::{Matrix, Scalar, Subspace};
pub use reduction::{NeatFailure, NeatSearch, ReducedSpace, SplittingCTriple, TripleReport};
pub use relations::{CanonicalRelation, SplitCanonicalRelation};
pub use symplectic::{SplittingLPair, SubspaceClass, SymplecticSpace};
