//! Exact dense linear algebra over the rationals.
//!
//! Subspaces are stored by a reduced row-echelon basis, so equality of
//! subspaces is equality of their stored matrices.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::{decompose, project_along, Subspace};
