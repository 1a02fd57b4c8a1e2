//! JSON document shapes. Scalars travel as `"p/q"` strings; unknown fields
//! are ignored on input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::reduction::{NeatFailure, SplittingCTriple};
use crate::relations::{CanonicalRelation, SplitCanonicalRelation};
use crate::symplectic::{SplittingLPair, SymplecticSpace};

/// Failure to turn a document into a library value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    /// The document does not describe a well-formed object.
    #[error("malformed document: {0}")]
    Malformed(String),
    /// The object is well formed but violates a precondition.
    #[error(transparent)]
    Invalid(#[from] Error),
}

pub type WireResult<T> = std::result::Result<T, WireError>;

fn matrix_from_rows(cols: usize, rows: &[Vec<Scalar>], what: &str) -> WireResult<Matrix> {
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(WireError::Malformed(format!(
            "{what}: row of length {} where {cols} entries were expected",
            bad.len()
        )));
    }
    Matrix::from_rows(cols, rows.to_vec()).map_err(|e| WireError::Malformed(e.to_string()))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub dim: usize,
    pub form: Vec<Vec<Scalar>>,
}

impl SpaceDocument {
    pub fn to_space(&self) -> WireResult<SymplecticSpace> {
        if self.form.len() != self.dim {
            return Err(WireError::Malformed(format!(
                "form has {} rows but dim is {}",
                self.form.len(),
                self.dim
            )));
        }
        let form = matrix_from_rows(self.dim, &self.form, "form")?;
        SymplecticSpace::new(form).map_err(|e| WireError::Malformed(e.to_string()))
    }
}

impl From<&SymplecticSpace> for SpaceDocument {
    fn from(space: &SymplecticSpace) -> Self {
        SpaceDocument {
            dim: space.dim(),
            form: space.form().to_rows(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubspaceDocument {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Scalar>>,
}

impl SubspaceDocument {
    pub fn to_subspace(&self) -> WireResult<Subspace> {
        let rows = matrix_from_rows(self.ambient_dim, &self.basis, "basis")?;
        Ok(if rows.nrows() == 0 {
            Subspace::zero(self.ambient_dim)
        } else {
            Subspace::span(&rows)
        })
    }

    /// Parses and checks the ambient dimension against `space`.
    pub fn to_subspace_in(&self, space: &SymplecticSpace) -> WireResult<Subspace> {
        if self.ambient_dim != space.dim() {
            return Err(WireError::Invalid(Error::AmbientMismatch {
                expected: space.dim(),
                found: self.ambient_dim,
            }));
        }
        self.to_subspace()
    }
}

impl From<&Subspace> for SubspaceDocument {
    fn from(s: &Subspace) -> Self {
        SubspaceDocument {
            ambient_dim: s.ambient_dim(),
            basis: s.basis().to_rows(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TripleDocument {
    pub space: SpaceDocument,
    pub c: SubspaceDocument,
    pub c_c: SubspaceDocument,
    pub c_prime: SubspaceDocument,
}

impl TripleDocument {
    pub fn to_triple(&self) -> WireResult<SplittingCTriple> {
        let space = self.space.to_space()?;
        let c = self.c.to_subspace_in(&space)?;
        let c_c = self.c_c.to_subspace_in(&space)?;
        let c_prime = self.c_prime.to_subspace_in(&space)?;
        Ok(SplittingCTriple::new(space, c, c_c, c_prime)?)
    }
}

impl From<&SplittingCTriple> for TripleDocument {
    fn from(t: &SplittingCTriple) -> Self {
        TripleDocument {
            space: t.space().into(),
            c: t.c().into(),
            c_c: t.c_c().into(),
            c_prime: t.c_prime().into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairDocument {
    pub l: SubspaceDocument,
    pub l_prime: SubspaceDocument,
}

impl PairDocument {
    pub fn to_pair(&self, space: &SymplecticSpace) -> WireResult<SplittingLPair> {
        let l = self.l.to_subspace_in(space)?;
        let l_prime = self.l_prime.to_subspace_in(space)?;
        Ok(SplittingLPair::new(space.clone(), l, l_prime)?)
    }
}

impl From<&SplittingLPair> for PairDocument {
    fn from(p: &SplittingLPair) -> Self {
        PairDocument {
            l: p.l().into(),
            l_prime: p.l_prime().into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationDocument {
    pub source: SpaceDocument,
    pub target: SpaceDocument,
    pub graph: SubspaceDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<SubspaceDocument>,
}

impl RelationDocument {
    pub fn to_relation(&self) -> WireResult<CanonicalRelation> {
        let source = self.source.to_space()?;
        let target = self.target.to_space()?;
        let ambient = source.opposite().direct_sum(&target);
        let graph = self.graph.to_subspace_in(&ambient)?;
        Ok(CanonicalRelation::new(source, target, graph)?)
    }

    /// Requires the `complement` field.
    pub fn to_split(&self) -> WireResult<SplitCanonicalRelation> {
        let relation = self.to_relation()?;
        let doc = self.complement.as_ref().ok_or_else(|| {
            WireError::Invalid(Error::InvalidArgument("relation has no complement".into()))
        })?;
        let complement = doc.to_subspace_in(&relation.ambient_space())?;
        Ok(SplitCanonicalRelation::new(relation, complement)?)
    }
}

impl From<&CanonicalRelation> for RelationDocument {
    fn from(r: &CanonicalRelation) -> Self {
        RelationDocument {
            source: r.source().into(),
            target: r.target().into(),
            graph: r.graph().into(),
            complement: None,
        }
    }
}

impl From<&SplitCanonicalRelation> for RelationDocument {
    fn from(s: &SplitCanonicalRelation) -> Self {
        RelationDocument {
            complement: Some(s.complement().into()),
            ..s.relation().into()
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NeatFailureDocument {
    pub l_part: SubspaceDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_prime_part: Option<SubspaceDocument>,
    pub c_prime_dim: usize,
    pub obstruction: bool,
    pub message: String,
}

impl From<&NeatFailure> for NeatFailureDocument {
    fn from(f: &NeatFailure) -> Self {
        NeatFailureDocument {
            l_part: (&f.l_part).into(),
            l_prime_part: f.l_prime_part.as_ref().map(Into::into),
            c_prime_dim: f.c_prime_dim,
            obstruction: f.is_obstruction(),
            message: f.to_string(),
        }
    }
}
