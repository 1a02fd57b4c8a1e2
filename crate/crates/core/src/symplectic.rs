//! Finite-dimensional symplectic vector spaces and their subspaces.
//!
//! A space is given by the Gram matrix `F` of its form, `ω(x, y) = xᵀ F y`,
//! with vectors stored as rows. The standard space of dimension `2n` uses
//! the Darboux ordering `(q₁, p₁, …, qₙ, pₙ)` with `ω(qᵢ, pᵢ) = 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{decompose, Matrix, Scalar, Subspace};

/// A vector space with a skew-symmetric, nondegenerate bilinear form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticSpace {
    form: Matrix,
}

/// Isotropy flags of a subspace relative to its symplectic orthogonal.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubspaceClass {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub lagrangian: bool,
    pub symplectic_subspace: bool,
}

impl SymplecticSpace {
    /// Validates that `form` is square, of even size, skew and invertible.
    pub fn new(form: Matrix) -> Result<Self> {
        if !form.is_square() {
            return Err(Error::InvalidForm(format!(
                "form is {}x{}, not square",
                form.nrows(),
                form.ncols()
            )));
        }
        if !form.nrows().is_multiple_of(2) {
            return Err(Error::InvalidForm(format!(
                "odd dimension {}",
                form.nrows()
            )));
        }
        if form.transpose() != form.neg() {
            return Err(Error::InvalidForm("form is not skew-symmetric".into()));
        }
        if form.rank() != form.nrows() {
            return Err(Error::InvalidForm("form is degenerate".into()));
        }
        Ok(SymplecticSpace { form })
    }

    /// `Q^{2n}` with `n` Darboux blocks `[[0, 1], [-1, 0]]`.
    pub fn standard(n: usize) -> Self {
        let mut form = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(2 * i, 2 * i + 1)] = Scalar::one();
            form[(2 * i + 1, 2 * i)] = -Scalar::one();
        }
        SymplecticSpace { form }
    }

    pub fn zero() -> Self {
        SymplecticSpace::standard(0)
    }

    pub fn dim(&self) -> usize {
        self.form.nrows()
    }

    pub fn half_dim(&self) -> usize {
        self.dim() / 2
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    /// The same space with the negated form.
    pub fn opposite(&self) -> Self {
        SymplecticSpace {
            form: self.form.neg(),
        }
    }

    pub fn direct_sum(&self, other: &SymplecticSpace) -> Self {
        SymplecticSpace {
            form: Matrix::block_diag(&[&self.form, &other.form]),
        }
    }

    pub fn direct_sum_all(spaces: &[&SymplecticSpace]) -> Self {
        let forms: Vec<&Matrix> = spaces.iter().map(|s| &s.form).collect();
        SymplecticSpace {
            form: Matrix::block_diag(&forms),
        }
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let fx = self.form.left_apply(x);
        fx.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// The functional `ω(v, ·)` as a row vector.
    pub fn sharp(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.form.left_apply(v)
    }

    /// `A F Bᵀ`: pairings between the rows of `a` and the rows of `b`.
    pub fn gram(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.mul(&self.form)
            .and_then(|af| af.mul(&b.transpose()))
            .expect("vectors live in this space")
    }

    fn check(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                expected: self.dim(),
                found: w.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `W^ω`, the kernel of `basis(W) · F`.
    pub fn orthogonal(&self, w: &Subspace) -> Result<Subspace> {
        self.check(w)?;
        if w.is_zero() {
            return Ok(Subspace::full(self.dim()));
        }
        Ok(Subspace::kernel(&w.basis().mul(&self.form)?))
    }

    pub fn are_orthogonal(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.gram(a.basis(), b.basis()).is_zero())
    }

    pub fn is_isotropic(&self, w: &Subspace) -> Result<bool> {
        self.are_orthogonal(w, w)
    }

    pub fn is_coisotropic(&self, w: &Subspace) -> Result<bool> {
        w.contains(&self.orthogonal(w)?)
    }

    pub fn is_lagrangian(&self, w: &Subspace) -> Result<bool> {
        Ok(2 * w.dim() == self.dim() && self.is_isotropic(w)?)
    }

    pub fn classify(&self, w: &Subspace) -> Result<SubspaceClass> {
        let wo = self.orthogonal(w)?;
        let isotropic = wo.contains(w)?;
        let coisotropic = w.contains(&wo)?;
        Ok(SubspaceClass {
            isotropic,
            coisotropic,
            lagrangian: isotropic && coisotropic,
            symplectic_subspace: w.intersect(&wo)?.is_zero(),
        })
    }

    /// The restricted form on `sub`, in the coordinates of `sub`'s basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<SymplecticSpace> {
        self.check(sub)?;
        SymplecticSpace::new(self.gram(sub.basis(), sub.basis()))
    }

    /// `s` with `sᵀ F_target s = F_self`, read as a map on column vectors.
    pub fn is_symplectic_map(&self, s: &Matrix, target: &SymplecticSpace) -> bool {
        s.nrows() == target.dim()
            && s.ncols() == self.dim()
            && s.transpose()
                .mul(&target.form)
                .and_then(|m| m.mul(s))
                .map(|m| m == self.form)
                .unwrap_or(false)
    }

    /// Signs of the `±[[0,1],[-1,0]]` diagonal blocks, if the form has that shape.
    pub fn darboux_signs(&self) -> Option<Vec<i64>> {
        let n = self.half_dim();
        let mut signs = Vec::with_capacity(n);
        let mut expected = Matrix::zeros(self.dim(), self.dim());
        for b in 0..n {
            let s = &self.form[(2 * b, 2 * b + 1)];
            let sign = if s.is_one() {
                1
            } else if (-s).is_one() {
                -1
            } else {
                return None;
            };
            signs.push(sign);
            expected[(2 * b, 2 * b + 1)] = Scalar::from_int(sign);
            expected[(2 * b + 1, 2 * b)] = Scalar::from_int(-sign);
        }
        (expected == self.form).then_some(signs)
    }
}

/// Complementary isotropic subspaces `(L, L')`; both are then Lagrangian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplittingLPair {
    space: SymplecticSpace,
    l: Subspace,
    l_prime: Subspace,
}

impl SplittingLPair {
    pub fn new(space: SymplecticSpace, l: Subspace, l_prime: Subspace) -> Result<Self> {
        if !space.is_isotropic(&l)? || !space.is_isotropic(&l_prime)? {
            return Err(Error::NotIsotropic);
        }
        if !Subspace::is_direct_sum(&[&l, &l_prime], &Subspace::full(space.dim()))? {
            return Err(Error::NotComplement("L ⊕ L' is not the whole space".into()));
        }
        Ok(SplittingLPair { space, l, l_prime })
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn l(&self) -> &Subspace {
        &self.l
    }

    pub fn l_prime(&self) -> &Subspace {
        &self.l_prime
    }
}

/// Averages a complement `k` of the Lagrangian `l` with `k^ω`.
///
/// With `P_K` the projection onto `K` along `L` and `P_{K^ω}` the projection onto
/// `K^ω` along `L`, the result is the image of `½(P_K + P_{K^ω})`. It is an
/// isotropic complement of `l`, and equals `k` when `k` is already isotropic.
pub fn average_complement(space: &SymplecticSpace, l: &Subspace, k: &Subspace) -> Result<Subspace> {
    if !space.is_lagrangian(l)? {
        return Err(Error::NotLagrangian);
    }
    let whole = Subspace::full(space.dim());
    if !Subspace::is_direct_sum(&[l, k], &whole)? {
        return Err(Error::NotComplement("K is not a complement of L".into()));
    }
    if k.is_zero() {
        return Ok(k.clone());
    }
    let k_omega = space.orthogonal(k)?;
    // Both projections vanish on L, so the image is spanned by the images of K's basis.
    let parts = decompose(&[&k_omega, l], k.basis())?;
    let along_k_omega = k_omega.from_coordinates(&parts[0]);
    let half = Scalar::ratio(1, 2);
    let averaged = k.basis().add(&along_k_omega)?.scale(&half);
    let out = Subspace::span(&averaged);
    debug_assert!(space.is_isotropic(&out)?);
    debug_assert!(Subspace::is_direct_sum(&[l, &out], &whole)?);
    Ok(out)
}

/// A Lagrangian complement of `l`: the greedy complement, averaged.
pub fn lagrangian_complement(space: &SymplecticSpace, l: &Subspace) -> Result<Subspace> {
    if !space.is_lagrangian(l)? {
        return Err(Error::NotLagrangian);
    }
    let k = l.complement_in(&Subspace::full(space.dim()))?;
    average_complement(space, l, &k)
}

/// Isotropic complement of `lag` inside `within`, where `within` is a
/// symplectic subspace in which `lag` is Lagrangian.
pub fn lagrangian_complement_within(
    space: &SymplecticSpace,
    within: &Subspace,
    lag: &Subspace,
) -> Result<Subspace> {
    let inner = space.restrict(within)?;
    let lag_coords = within.restrict(lag)?;
    let comp = lagrangian_complement(&inner, &lag_coords)?;
    within.extend(&comp)
}

/// The graph `{ q + S q }` of a symmetric matrix `s` over the q-plane of a
/// space with `±J` Darboux blocks.
pub fn lagrangian_graph(space: &SymplecticSpace, s: &Matrix) -> Result<Subspace> {
    let signs = space
        .darboux_signs()
        .ok_or_else(|| Error::InvalidArgument("space is not given in a Darboux frame".into()))?;
    let n = space.half_dim();
    if s.nrows() != n || s.ncols() != n || s.transpose() != *s {
        return Err(Error::InvalidArgument(format!(
            "expected a symmetric {n}x{n} matrix"
        )));
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![Scalar::zero(); 2 * n];
        v[2 * i] = Scalar::one();
        for j in 0..n {
            // p_j = sign_j · e_{2j+1} so that ω(q_j, p_j) = 1 in either orientation.
            v[2 * j + 1] = &s[(i, j)] * Scalar::from_int(signs[j]);
        }
        rows.push(v);
    }
    Subspace::from_rows(2 * n, rows)
}

/// Random symmetric matrix with small integer entries.
pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R, bound: i64) -> Matrix {
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = Scalar::from_int(rng.gen_range(-bound..=bound));
            s[(i, j)] = x.clone();
            s[(j, i)] = x;
        }
    }
    s
}

/// Seeded random Lagrangian: the graph of a random symmetric matrix.
pub fn random_lagrangian(space: &SymplecticSpace, seed: u64) -> Result<Subspace> {
    random_lagrangian_with(space, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_lagrangian_with<R: Rng>(space: &SymplecticSpace, rng: &mut R) -> Result<Subspace> {
    let s = random_symmetric(space.half_dim(), rng, 2);
    lagrangian_graph(space, &s)
}

/// Random vector of `sub` with small integer coefficients.
pub fn random_vector_in<R: Rng>(sub: &Subspace, rng: &mut R) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = (0..sub.dim())
        .map(|_| Scalar::from_int(rng.gen_range(-3..=3)))
        .collect();
    sub.basis().left_apply(&coeffs)
}

/// Random isotropic subspace of the given dimension, grown one vector at a
/// time inside the orthogonal of what has been chosen. Works for any form.
pub fn random_isotropic<R: Rng>(
    space: &SymplecticSpace,
    dim: usize,
    rng: &mut R,
) -> Result<Subspace> {
    if dim > space.half_dim() {
        return Err(Error::InvalidArgument(format!(
            "no isotropic subspace of dimension {dim} in a {}-dimensional space",
            space.dim()
        )));
    }
    let mut l = Subspace::zero(space.dim());
    while l.dim() < dim {
        let v = random_vector_in(&space.orthogonal(&l)?, rng);
        if !l.contains_vector(&v) {
            l = l.sum(&Subspace::from_rows(space.dim(), vec![v])?)?;
        }
    }
    Ok(l)
}

/// Random isotropic complement of `lag` inside the symplectic subspace `within`.
pub fn random_lagrangian_complement<R: Rng>(
    space: &SymplecticSpace,
    within: &Subspace,
    lag: &Subspace,
    rng: &mut R,
) -> Result<Subspace> {
    let target = within.dim() / 2;
    if lag.dim() != target || !within.contains(lag)? || !space.is_isotropic(lag)? {
        return Err(Error::NotLagrangian);
    }
    let mut l = Subspace::zero(space.dim());
    let mut attempts = 0;
    while l.dim() < target {
        attempts += 1;
        if attempts > 10_000 {
            return Err(Error::InvalidArgument(
                "failed to sample an isotropic complement".into(),
            ));
        }
        let candidates = space.orthogonal(&l)?.intersect(within)?;
        let v = random_vector_in(&candidates, rng);
        let grown = l.sum(&Subspace::from_rows(space.dim(), vec![v])?)?;
        if grown.dim() > l.dim() && grown.intersect(lag)?.is_zero() {
            l = grown;
        }
    }
    Ok(l)
}

/// Random linear symplectomorphism of the standard space of dimension `2n`,
/// a product of symmetric shears `p += S q` and `q += S p`.
pub fn random_symplectic_matrix<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(2 * n);
    for round in 0..3 {
        let s = random_symmetric(n, rng, 1);
        let mut shear = Matrix::identity(2 * n);
        for i in 0..n {
            for j in 0..n {
                if round % 2 == 0 {
                    shear[(2 * i + 1, 2 * j)] = s[(i, j)].clone();
                } else {
                    shear[(2 * i, 2 * j + 1)] = s[(i, j)].clone();
                }
            }
        }
        m = shear.mul(&m).expect("square");
    }
    m
}
