use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient_dim`.
///
/// The basis is held in reduced row-echelon form without zero rows, so two
/// subspaces are equal exactly when their stored bases are entry-wise equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `rows`; any spanning set is accepted.
    pub fn span(rows: &Matrix) -> Self {
        let (r, pivots) = rows.rref();
        let rank = pivots.len();
        let cols = rows.ncols();
        let data: Vec<Scalar> = r.row_iter().take(rank).flatten().cloned().collect();
        Subspace {
            ambient_dim: cols,
            basis: Matrix::new(rank, cols, data).expect("rank rows"),
            pivots,
        }
    }

    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        Ok(Subspace::span(&Matrix::from_rows(ambient_dim, rows)?))
    }

    /// Integer spanning vectors; panics on wrong length.
    pub fn from_ints<R: AsRef<[i64]>>(ambient_dim: usize, rows: &[R]) -> Self {
        if rows.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let m = Matrix::from_ints(rows);
        assert_eq!(m.ncols(), ambient_dim, "vector length differs from ambient");
        Subspace::span(&m)
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let rows = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Scalar::zero(); ambient_dim];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace::from_rows(ambient_dim, rows).expect("unit vectors")
    }

    /// `{ v : m v = 0 }` as a subspace of `Q^m.ncols()`.
    pub fn kernel(m: &Matrix) -> Self {
        let k = m.kernel_rows();
        if k.nrows() == 0 {
            return Subspace::zero(m.ncols());
        }
        Subspace::span(&k)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // a·A + b·B = 0  <=>  (a, b) in ker [A; B]^T; the intersection is the set of a·A.
        let system = self.basis.vstack(&other.basis)?.transpose();
        let k = system.kernel_rows();
        let da = self.dim();
        let mut rows = Vec::with_capacity(k.nrows());
        for coeffs in k.row_iter() {
            rows.push(self.basis.left_apply(&coeffs[..da]));
        }
        Subspace::from_rows(self.ambient_dim, rows)
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(other.basis.row_iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // Subtract the pivot-weighted combination of basis rows; the residue is
        // zero exactly when v lies in the row space.
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &(&c * b);
                }
            }
        }
        r.iter().all(Scalar::is_zero)
    }

    /// `K` with `self ⊕ K = whole`, built by greedily extending this basis with the
    /// basis rows of `whole` in order.
    pub fn complement_in(&self, whole: &Subspace) -> Result<Subspace> {
        if !whole.contains(self)? {
            return Err(Error::NotContained);
        }
        let mut acc = self.clone();
        let mut picked = Vec::new();
        for v in whole.basis.row_iter() {
            if acc.dim() == whole.dim() {
                break;
            }
            if !acc.contains_vector(v) {
                picked.push(v.to_vec());
                acc = acc.sum(&Subspace::from_rows(self.ambient_dim, vec![v.to_vec()])?)?;
            }
        }
        Subspace::from_rows(self.ambient_dim, picked)
    }

    /// `whole = parts[0] ⊕ parts[1] ⊕ ...`: every part lies in `whole`, the parts
    /// span it, and their dimensions add up (so the sum is direct).
    pub fn is_direct_sum(parts: &[&Subspace], whole: &Subspace) -> Result<bool> {
        let mut total = Subspace::zero(whole.ambient_dim);
        let mut dims = 0;
        for p in parts {
            if !whole.contains(p)? {
                return Ok(false);
            }
            dims += p.dim();
            total = total.sum(p)?;
        }
        Ok(dims == whole.dim() && total.dim() == whole.dim())
    }

    /// Coordinates of the rows of `vectors` in this basis; `None` if some row
    /// is not in the subspace.
    pub fn coordinates(&self, vectors: &Matrix) -> Option<Matrix> {
        assert_eq!(vectors.ncols(), self.ambient_dim, "vector length mismatch");
        let mut out = Vec::with_capacity(vectors.nrows());
        for v in vectors.row_iter() {
            if !self.contains_vector(v) {
                return None;
            }
            out.push(self.pivots.iter().map(|&p| v[p].clone()).collect());
        }
        Some(Matrix::from_rows(self.dim(), out).expect("coordinate rows"))
    }

    /// Vectors with the given coordinate rows in this basis.
    pub fn from_coordinates(&self, coords: &Matrix) -> Matrix {
        assert_eq!(coords.ncols(), self.dim(), "coordinate length mismatch");
        coords.mul(&self.basis).expect("shapes agree")
    }

    /// Subspace of `Q^self.dim()` given by the coordinates of `sub ⊆ self`.
    pub fn restrict(&self, sub: &Subspace) -> Result<Subspace> {
        self.check_ambient(sub)?;
        let c = self.coordinates(&sub.basis).ok_or(Error::NotContained)?;
        Ok(Subspace::span(&c))
    }

    /// Inverse of [`Subspace::restrict`]: embeds a subspace of coordinates.
    pub fn extend(&self, coords: &Subspace) -> Result<Subspace> {
        if coords.ambient_dim != self.dim() {
            return Err(Error::AmbientMismatch {
                expected: self.dim(),
                found: coords.ambient_dim,
            });
        }
        if coords.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        Ok(Subspace::span(&self.from_coordinates(&coords.basis)))
    }

    /// `self × other` inside `Q^a ⊕ Q^b`.
    pub fn product(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim + other.ambient_dim;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis.row_iter() {
            let mut v = r.to_vec();
            v.resize(n, Scalar::zero());
            rows.push(v);
        }
        for r in other.basis.row_iter() {
            let mut v = vec![Scalar::zero(); self.ambient_dim];
            v.extend_from_slice(r);
            rows.push(v);
        }
        Subspace::from_rows(n, rows).expect("product rows")
    }

    /// Image under the coordinate map `v ↦ v · m` (`m` has `ambient_dim` rows).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.nrows() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "map with {} rows applied to vectors of length {}",
                m.nrows(),
                self.ambient_dim
            )));
        }
        if self.is_zero() {
            return Ok(Subspace::zero(m.ncols()));
        }
        Ok(Subspace::span(&self.basis.mul(m)?))
    }
}

/// Splits each row of `vectors` along a direct-sum decomposition, returning one
/// coefficient matrix per part (rows of `vectors` index rows of each result).
pub fn decompose(parts: &[&Subspace], vectors: &Matrix) -> Result<Vec<Matrix>> {
    let n = vectors.ncols();
    let mut stacked = Matrix::zeros(0, n);
    for p in parts {
        if p.ambient_dim() != n {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: p.ambient_dim(),
            });
        }
        stacked = stacked.vstack(p.basis())?;
    }
    if stacked.rank() != stacked.nrows() {
        return Err(Error::NotComplement("parts are not independent".into()));
    }
    let coeffs = stacked
        .transpose()
        .solve(&vectors.transpose())?
        .ok_or_else(|| Error::NotComplement("vector outside the sum of the parts".into()))?
        .transpose();
    let mut out = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        let d = p.dim();
        let rows = coeffs
            .row_iter()
            .map(|r| r[offset..offset + d].to_vec())
            .collect();
        out.push(Matrix::from_rows(d, rows)?);
        offset += d;
    }
    Ok(out)
}

/// Component of each row of `vectors` in `onto`, along `along`.
pub fn project_along(onto: &Subspace, along: &Subspace, vectors: &Matrix) -> Result<Matrix> {
    let parts = decompose(&[onto, along], vectors)?;
    Ok(onto.from_coordinates(&parts[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Subspace {
        Subspace::coordinate(n, &[i])
    }

    #[test]
    fn kernel_examples() {
        assert!(Subspace::kernel(&Matrix::identity(3)).is_zero());
        assert!(Subspace::kernel(&Matrix::zeros(2, 3)).is_full());
        let k = Subspace::kernel(&Matrix::from_ints(&[[1, 1, 0]]));
        assert_eq!(k, Subspace::from_ints(3, &[[1, -1, 0], [0, 0, 1]]));
    }

    #[test]
    fn sum_examples() {
        assert!(e(2, 0).sum(&e(2, 1)).unwrap().is_full());
        let w = Subspace::from_ints(3, &[[1, 2, 3]]);
        assert_eq!(w.sum(&w).unwrap(), w);
        let s = e(3, 0).sum(&Subspace::from_ints(3, &[[1, 1, 0]])).unwrap();
        assert_eq!(s, Subspace::coordinate(3, &[0, 1]));
    }

    #[test]
    fn intersect_examples() {
        let w = Subspace::from_ints(3, &[[1, 2, 3], [0, 1, 1]]);
        assert_eq!(w.intersect(&w).unwrap(), w);
        assert!(e(2, 0).intersect(&e(2, 1)).unwrap().is_zero());
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::coordinate(3, &[1, 2]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, e(3, 1));
        assert_eq!(a.dim() + b.dim() - a.sum(&b).unwrap().dim(), 1);
    }

    #[test]
    fn complement_examples() {
        let u = Subspace::from_ints(4, &[[1, 0, 2, 0], [0, 1, 0, 3]]);
        assert_eq!(Subspace::zero(4).complement_in(&u).unwrap(), u);
        assert!(u.complement_in(&u).unwrap().is_zero());
        let diag = Subspace::from_ints(2, &[[1, 1]]);
        let k = diag.complement_in(&Subspace::full(2)).unwrap();
        assert_eq!(k, e(2, 0));
        assert!(Subspace::is_direct_sum(&[&diag, &k], &Subspace::full(2)).unwrap());
        assert!(matches!(
            u.complement_in(&e(4, 0)),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn containment_and_direct_sums() {
        let w = Subspace::from_ints(3, &[[1, 1, 0]]);
        assert!(Subspace::full(3).contains(&w).unwrap());
        assert!(!w.contains(&e(3, 0)).unwrap());
        let plane = Subspace::full(2);
        assert!(Subspace::is_direct_sum(&[&e(2, 0), &e(2, 1)], &plane).unwrap());
        let diag = Subspace::from_ints(2, &[[1, 1]]);
        assert!(Subspace::is_direct_sum(&[&e(2, 0), &diag], &plane).unwrap());
        assert!(!Subspace::is_direct_sum(&[&e(2, 0), &e(2, 0)], &plane).unwrap());
        assert!(matches!(
            w.sum(&Subspace::zero(2)),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn coordinates_round_trip() {
        let w = Subspace::from_ints(4, &[[1, 2, 0, 1], [0, 0, 1, -1]]);
        let v = Matrix::from_ints(&[[2, 4, 3, -1]]);
        let c = w.coordinates(&v).unwrap();
        assert_eq!(c, Matrix::from_ints(&[[2, 3]]));
        assert_eq!(w.from_coordinates(&c), v);
        assert!(w.coordinates(&Matrix::from_ints(&[[1, 0, 0, 0]])).is_none());
    }

    #[test]
    fn projections() {
        let onto = e(2, 0);
        let along = Subspace::from_ints(2, &[[1, 1]]);
        let p = project_along(&onto, &along, &Matrix::from_ints(&[[0, 1]])).unwrap();
        // (0,1) = -(1,0) + (1,1)
        assert_eq!(p, Matrix::from_ints(&[[-1, 0]]));
    }
}
