//! Coisotropic reduction with explicit splittings.
//!
//! A splitting c-triple `(C, C^c, C')` fixes a decomposition
//! `V = C^c ⊕ C^ω ⊕ C'`. The reduced space `C/C^ω` is represented
//! concretely by `C'` with the restricted form, and the class `[x]` of
//! `x ∈ C` is its `C'`-component along `C^ω`, written in the coordinates of
//! the canonical basis of `C'`.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{decompose, Matrix, Scalar, Subspace};
use crate::relations::CanonicalRelation;
use crate::symplectic::{
    lagrangian_complement_within, random_isotropic, random_lagrangian_complement,
    random_symplectic_matrix, random_vector_in, SplittingLPair, SymplecticSpace,
};

/// Outcome of checking the conditions on a candidate c-triple.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TripleReport {
    /// `C^ω ⊆ C`.
    pub coisotropic: bool,
    /// `C ⊕ C^c = V`.
    pub c_c_is_complement: bool,
    /// `C^ω ⊕ C' = C`.
    pub c_prime_is_complement: bool,
    /// `C^c ⊆ (C^c)^ω`.
    pub c_c_isotropic: bool,
    /// `ω(C', C^c) = 0`.
    pub orthogonal: bool,
}

impl TripleReport {
    pub fn is_valid(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let checks = [
            (self.coisotropic, "C is not coisotropic"),
            (self.c_c_is_complement, "C^c is not a complement of C in V"),
            (
                self.c_prime_is_complement,
                "C' is not a complement of C^ω in C",
            ),
            (self.c_c_isotropic, "C^c is not isotropic"),
            (
                self.orthogonal,
                "C' and C^c are not symplectically orthogonal",
            ),
        ];
        checks
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, msg)| msg.to_string())
            .collect()
    }
}

/// Checks every condition of a splitting c-triple; only ambient mismatches error.
pub fn validate_c_triple(
    space: &SymplecticSpace,
    c: &Subspace,
    c_c: &Subspace,
    c_prime: &Subspace,
) -> Result<TripleReport> {
    let c_omega = space.orthogonal(c)?;
    let whole = Subspace::full(space.dim());
    Ok(TripleReport {
        coisotropic: c.contains(&c_omega)?,
        c_c_is_complement: Subspace::is_direct_sum(&[c, c_c], &whole)?,
        c_prime_is_complement: Subspace::is_direct_sum(&[&c_omega, c_prime], c)?,
        c_c_isotropic: space.is_isotropic(c_c)?,
        orthogonal: space.are_orthogonal(c_prime, c_c)?,
    })
}

/// A coisotropic `C` with an isotropic complement `C^c` and a complement `C'`
/// of `C^ω` in `C` that is symplectically orthogonal to `C^c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplittingCTriple {
    space: SymplecticSpace,
    c: Subspace,
    c_c: Subspace,
    c_prime: Subspace,
    c_omega: Subspace,
}

impl SplittingCTriple {
    pub fn new(
        space: SymplecticSpace,
        c: Subspace,
        c_c: Subspace,
        c_prime: Subspace,
    ) -> Result<Self> {
        let report = validate_c_triple(&space, &c, &c_c, &c_prime)?;
        if !report.is_valid() {
            return Err(Error::InvalidTriple(report.failures()));
        }
        let c_omega = space.orthogonal(&c)?;
        Ok(SplittingCTriple {
            space,
            c,
            c_c,
            c_prime,
            c_omega,
        })
    }

    /// `(V, {0}, V)`.
    pub fn whole(space: SymplecticSpace) -> Self {
        let n = space.dim();
        SplittingCTriple {
            space,
            c: Subspace::full(n),
            c_c: Subspace::zero(n),
            c_prime: Subspace::full(n),
            c_omega: Subspace::zero(n),
        }
    }

    /// Builds `(C, L, C')` from a complement `C'` of `C^ω` in `C` and an
    /// isotropic complement `L` of `C^ω` inside `(C')^ω`.
    pub fn from_lagrangian_form(
        space: SymplecticSpace,
        c: Subspace,
        c_prime: Subspace,
        l: Subspace,
    ) -> Result<Self> {
        if !space.is_coisotropic(&c)? {
            return Err(Error::NotCoisotropic);
        }
        let c_omega = space.orthogonal(&c)?;
        if !Subspace::is_direct_sum(&[&c_omega, &c_prime], &c)? {
            return Err(Error::NotComplement(
                "C' is not a complement of C^ω in C".into(),
            ));
        }
        if !space.is_isotropic(&l)? {
            return Err(Error::NotIsotropic);
        }
        let c_prime_omega = space.orthogonal(&c_prime)?;
        if !Subspace::is_direct_sum(&[&c_omega, &l], &c_prime_omega)? {
            return Err(Error::NotComplement(
                "L is not a complement of C^ω in (C')^ω".into(),
            ));
        }
        SplittingCTriple::new(space, c, l, c_prime)
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn c(&self) -> &Subspace {
        &self.c
    }

    pub fn c_c(&self) -> &Subspace {
        &self.c_c
    }

    pub fn c_prime(&self) -> &Subspace {
        &self.c_prime
    }

    pub fn c_omega(&self) -> &Subspace {
        &self.c_omega
    }

    /// The same subspaces, regarded in the opposite space.
    pub fn opposite(&self) -> Self {
        SplittingCTriple {
            space: self.space.opposite(),
            ..self.clone()
        }
    }

    /// Componentwise product triple in `self.space ⊕ other.space`.
    pub fn direct_sum(&self, other: &SplittingCTriple) -> Self {
        SplittingCTriple {
            space: self.space.direct_sum(&other.space),
            c: self.c.product(&other.c),
            c_c: self.c_c.product(&other.c_c),
            c_prime: self.c_prime.product(&other.c_prime),
            c_omega: self.c_omega.product(&other.c_omega),
        }
    }

    /// Half the dimension of the reduced space.
    pub fn k(&self) -> usize {
        self.c_prime.dim() / 2
    }
}

/// `C/C^ω`, realized on `C'` with the restricted form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedSpace {
    parent: SymplecticSpace,
    c: Subspace,
    c_omega: Subspace,
    rep: Subspace,
    space: SymplecticSpace,
}

impl ReducedSpace {
    pub fn parent(&self) -> &SymplecticSpace {
        &self.parent
    }

    pub fn rep(&self) -> &Subspace {
        &self.rep
    }

    /// Reduced symplectic space in the coordinates of `rep`.
    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn form(&self) -> &Matrix {
        self.space.form()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Classes `[x]` of the rows of `vectors` (all in `C`), in reduced coordinates.
    pub fn quotient(&self, vectors: &Matrix) -> Result<Matrix> {
        for v in vectors.row_iter() {
            if !self.c.contains_vector(v) {
                return Err(Error::NotContained);
            }
        }
        let parts = decompose(&[&self.rep, &self.c_omega], vectors)?;
        Ok(parts.into_iter().next().expect("two parts"))
    }

    /// Image of `w ⊆ C` in reduced coordinates.
    pub fn quotient_subspace(&self, w: &Subspace) -> Result<Subspace> {
        if w.is_zero() {
            return Ok(Subspace::zero(self.dim()));
        }
        Ok(Subspace::span(&self.quotient(w.basis())?))
    }
}

pub fn reduce_space(t: &SplittingCTriple) -> ReducedSpace {
    let rep = t.c_prime.clone();
    let space = t
        .space
        .restrict(&rep)
        .expect("C' of a valid triple is a symplectic subspace");
    ReducedSpace {
        parent: t.space.clone(),
        c: t.c.clone(),
        c_omega: t.c_omega.clone(),
        rep,
        space,
    }
}

/// `L_C = { (x, [x]) : x ∈ C }` as a canonical relation `V ↛ C/C^ω`.
pub fn reduction_relation(t: &SplittingCTriple) -> CanonicalRelation {
    let red = reduce_space(t);
    let basis = t.c.basis();
    let classes = red.quotient(basis).expect("basis of C lies in C");
    let graph = Subspace::span(&basis.hstack(&classes).expect("same row count"));
    CanonicalRelation::new(t.space.clone(), red.space.clone(), graph)
        .expect("reduction relations are Lagrangian")
}

/// `L_C⁻ = { (x^c + x', -[x']) : x^c ∈ C^c, x' ∈ C' }`, an isotropic complement of `L_C`.
pub fn minus_relation(t: &SplittingCTriple) -> Subspace {
    let n = t.space.dim();
    let k2 = t.c_prime.dim();
    let mut rows = Vec::with_capacity(t.c_c.dim() + k2);
    for r in t.c_c.basis().row_iter() {
        let mut v = r.to_vec();
        v.resize(n + k2, Scalar::zero());
        rows.push(v);
    }
    for (j, r) in t.c_prime.basis().row_iter().enumerate() {
        let mut v = r.to_vec();
        v.resize(n + k2, Scalar::zero());
        v[n + j] = -Scalar::one();
        rows.push(v);
    }
    Subspace::from_rows(n + k2, rows).expect("uniform rows")
}

/// `(L ∩ C)/(L ∩ C^ω)` in reduced coordinates.
pub fn reduce_lagrangian(t: &SplittingCTriple, l: &Subspace) -> Result<Subspace> {
    if !t.space.is_lagrangian(l)? {
        return Err(Error::NotLagrangian);
    }
    let red = reduce_space(t);
    red.quotient_subspace(&l.intersect(&t.c)?)
}

/// `C' = L ∩ C' + L' ∩ C'`.
pub fn check_neat(pair: &SplittingLPair, t: &SplittingCTriple) -> Result<bool> {
    if pair.space() != t.space() {
        return Err(Error::SpaceMismatch(
            "l-pair and c-triple live in different spaces".into(),
        ));
    }
    let cp = t.c_prime();
    let sum = pair
        .l()
        .intersect(cp)?
        .sum(&pair.l_prime().intersect(cp)?)?;
    Ok(&sum == cp)
}

/// Why no (or not the given) complement intersects `C'` neatly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NeatFailure {
    /// `L ∩ C'`.
    pub l_part: Subspace,
    /// `L' ∩ C'`, when a specific complement was examined.
    pub l_prime_part: Option<Subspace>,
    pub c_prime_dim: usize,
}

impl NeatFailure {
    /// True when no Lagrangian complement of `L` can be neat: `L ∩ C'` is
    /// smaller than half of `C'`, while `L' ∩ C'` is isotropic in the
    /// symplectic `C'` and so at most half of it.
    pub fn is_obstruction(&self) -> bool {
        2 * self.l_part.dim() < self.c_prime_dim
    }
}

impl fmt::Display for NeatFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim(L∩C') = {} with dim C' = {}",
            self.l_part.dim(),
            self.c_prime_dim
        )?;
        if let Some(lp) = &self.l_prime_part {
            write!(f, ", dim(L'∩C') = {}", lp.dim())?;
        }
        if self.is_obstruction() {
            write!(
                f,
                "; an isotropic L'∩C' has dimension at most {}, so no complement is neat",
                self.c_prime_dim / 2
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NeatSearch {
    Found(Subspace),
    Impossible(NeatFailure),
}

/// Looks for a Lagrangian complement `L'` of `l` with `C' = L∩C' + L'∩C'`.
///
/// `K = L ∩ C'` is isotropic in the symplectic `C'`, and `L' ∩ C'` must be an
/// isotropic complement of `K` there, so a solution exists exactly when `K` is
/// Lagrangian in `C'`. In that case `K^c` is a Lagrangian complement of `K` in
/// `C'` and `L'` is `K^c` plus a Lagrangian complement of the reduction of `L`
/// inside a complement of `K^c` in `(K^c)^ω`.
pub fn find_neat_complement(l: &Subspace, t: &SplittingCTriple) -> Result<NeatSearch> {
    let space = t.space();
    if !space.is_lagrangian(l)? {
        return Err(Error::NotLagrangian);
    }
    let cp = t.c_prime();
    let k = l.intersect(cp)?;
    if 2 * k.dim() != cp.dim() {
        return Ok(NeatSearch::Impossible(NeatFailure {
            l_part: k,
            l_prime_part: None,
            c_prime_dim: cp.dim(),
        }));
    }
    let kc = lagrangian_complement_within(space, cp, &k)?;
    let s = space.orthogonal(&kc)?;
    let r = kc.complement_in(&s)?;
    let l_in_s = l.intersect(&s)?;
    let l_red = if l_in_s.is_zero() {
        Subspace::zero(space.dim())
    } else {
        let parts = decompose(&[&r, &kc], l_in_s.basis())?;
        Subspace::span(&r.from_coordinates(&parts[0]))
    };
    let l_prime = kc.sum(&lagrangian_complement_within(space, &r, &l_red)?)?;
    debug_assert!(check_neat(
        &SplittingLPair::new(space.clone(), l.clone(), l_prime.clone())?,
        t
    )?);
    Ok(NeatSearch::Found(l_prime))
}

/// For a neat pair, the reduction `L̄` together with the isotropic complement
/// given by `L' ∩ C'` in reduced coordinates.
pub fn neat_reduction_is_split(
    pair: &SplittingLPair,
    t: &SplittingCTriple,
) -> Result<(Subspace, Subspace)> {
    let cp = t.c_prime();
    if !check_neat(pair, t)? {
        return Err(Error::NotNeat(Box::new(NeatFailure {
            l_part: pair.l().intersect(cp)?,
            l_prime_part: Some(pair.l_prime().intersect(cp)?),
            c_prime_dim: cp.dim(),
        })));
    }
    let red = reduce_space(t);
    let l_bar = reduce_lagrangian(t, pair.l())?;
    let comp = cp.restrict(&pair.l_prime().intersect(cp)?)?;
    debug_assert!(red.space().is_isotropic(&comp)?);
    debug_assert!(Subspace::is_direct_sum(
        &[&l_bar, &comp],
        &Subspace::full(red.dim())
    )?);
    Ok((l_bar, comp))
}

/// Dimension counts for a coisotropic subspace of dimension `n + k` in a
/// `2n`-dimensional space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DimCounts {
    /// Dimension of the space of Lagrangian complements of `L_C`.
    pub d1: u64,
    /// Dimension of the space of compatible `C^c` for a fixed `C'`.
    pub d2: u64,
    /// `d1 - d2 = (2n + 1) k`.
    pub d: u64,
}

pub fn dim_counts(n: u64, k: u64) -> Result<DimCounts> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let d1 = (n + k) * (n + k + 1) / 2;
    let d2 = (n - k) * (n - k + 1) / 2;
    Ok(DimCounts { d1, d2, d: d1 - d2 })
}

/// The special complement of `L_C` built from another valid choice of `C^c`
/// for the same `C'`.
pub fn phi(t: &SplittingCTriple, c_c_variant: &Subspace) -> Result<Subspace> {
    let space = t.space();
    if !space.is_isotropic(c_c_variant)? {
        return Err(Error::NotIsotropic);
    }
    let c_prime_omega = space.orthogonal(t.c_prime())?;
    if !Subspace::is_direct_sum(&[t.c_omega(), c_c_variant], &c_prime_omega)? {
        return Err(Error::NotComplement(
            "variant is not a complement of C^ω in (C')^ω".into(),
        ));
    }
    let variant = SplittingCTriple::new(
        space.clone(),
        t.c().clone(),
        c_c_variant.clone(),
        t.c_prime().clone(),
    )?;
    Ok(minus_relation(&variant))
}

/// Random c-triple with `dim C = n + k` in the standard space of dimension `2n`,
/// built by the Lagrangian recipe: random coisotropic `C`, random complement
/// `C'` of `C^ω` in `C`, random isotropic complement of `C^ω` in `(C')^ω`.
pub fn random_triple<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<SplittingCTriple> {
    let space = SymplecticSpace::standard(n);
    let iso = random_isotropic(&space, n - k, rng)?;
    let c = space.orthogonal(&iso)?;
    let c_omega = iso;
    let base = c_omega.complement_in(&c)?;
    let mut rows = Vec::with_capacity(base.dim());
    for b in base.basis().row_iter() {
        let shift = random_vector_in(&c_omega, rng);
        rows.push(b.iter().zip(&shift).map(|(x, y)| x + y).collect());
    }
    let c_prime = Subspace::from_rows(space.dim(), rows)?;
    let within = space.orthogonal(&c_prime)?;
    let l = random_lagrangian_complement(&space, &within, &c_omega, rng)?;
    SplittingCTriple::from_lagrangian_form(space, c, c_prime, l)
}

/// Random c-triple obtained by moving the coordinate triple
/// `C = span(q₁,p₁,…,q_k,p_k, q_{k+1},…,q_n)`, `C^c = span(p_{k+1},…,p_n)`,
/// `C' = span(q₁,p₁,…,q_k,p_k)` by a random symplectomorphism.
pub fn random_framed_triple<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<SplittingCTriple> {
    let space = SymplecticSpace::standard(n);
    let frame = random_symplectic_matrix(n, rng).transpose();
    let sym: Vec<usize> = (0..2 * k).collect();
    let iso_q: Vec<usize> = (k..n).map(|i| 2 * i).collect();
    let iso_p: Vec<usize> = (k..n).map(|i| 2 * i + 1).collect();
    let c_idx: Vec<usize> = sym.iter().chain(&iso_q).copied().collect();
    let moved = |idx: &[usize]| Subspace::coordinate(2 * n, idx).image(&frame);
    SplittingCTriple::new(space, moved(&c_idx)?, moved(&iso_p)?, moved(&sym)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::lagrangian_complement;

    // Coordinates (q1, p1, q2, p2).
    fn std2_triple() -> SplittingCTriple {
        SplittingCTriple::new(
            SymplecticSpace::standard(2),
            Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
            Subspace::from_ints(4, &[[0, 0, 0, 1]]),
            Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 1, 0, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        let v = SymplecticSpace::standard(2);
        let full = Subspace::full(4);
        let r = validate_c_triple(&v, &full, &Subspace::zero(4), &full).unwrap();
        assert!(r.is_valid());

        let t = std2_triple();
        let r = validate_c_triple(&v, t.c(), t.c_c(), t.c_prime()).unwrap();
        assert!(r.is_valid());

        // p2 + q2 pairs to zero with q1 and p1, so it is still a valid C^c.
        let tilted = Subspace::from_ints(4, &[[0, 0, 1, 1]]);
        assert!(v.gram(tilted.basis(), t.c_prime().basis()).is_zero());
        let r = validate_c_triple(&v, t.c(), &tilted, t.c_prime()).unwrap();
        assert!(r.is_valid());

        // p1 + p2 pairs to -1 with q1.
        let bad = Subspace::from_ints(4, &[[0, 1, 0, 1]]);
        let r = validate_c_triple(&v, t.c(), &bad, t.c_prime()).unwrap();
        assert!(!r.orthogonal && r.c_c_is_complement && r.c_c_isotropic);
        assert_eq!(r.failures().len(), 1);
        assert!(matches!(
            SplittingCTriple::new(v.clone(), t.c().clone(), bad, t.c_prime().clone()),
            Err(Error::InvalidTriple(_))
        ));

        let not_coiso = Subspace::from_ints(4, &[[1, 0, 0, 0]]);
        let r = validate_c_triple(&v, &not_coiso, &Subspace::zero(4), &not_coiso).unwrap();
        assert!(!r.coisotropic && !r.c_c_is_complement);
    }

    #[test]
    fn lagrangian_form_examples() {
        let v = SymplecticSpace::standard(2);
        let t = std2_triple();
        assert_eq!(
            v.orthogonal(t.c_prime()).unwrap(),
            Subspace::from_ints(4, &[[0, 0, 1, 0], [0, 0, 0, 1]])
        );
        let built = SplittingCTriple::from_lagrangian_form(
            v.clone(),
            t.c().clone(),
            t.c_prime().clone(),
            Subspace::from_ints(4, &[[0, 0, 0, 1]]),
        )
        .unwrap();
        assert_eq!(built, t);

        let whole = SplittingCTriple::from_lagrangian_form(
            v.clone(),
            Subspace::full(4),
            Subspace::full(4),
            Subspace::zero(4),
        )
        .unwrap();
        assert_eq!(whole, SplittingCTriple::whole(v.clone()));

        let lag = Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        let lc = lagrangian_complement(&v, &lag).unwrap();
        let t =
            SplittingCTriple::from_lagrangian_form(v.clone(), lag.clone(), Subspace::zero(4), lc)
                .unwrap();
        assert_eq!(t.c_omega(), &lag);
        assert_eq!(reduce_space(&t).dim(), 0);

        // q1 is not isotropic-complementary to C^ω inside (C')^ω.
        assert!(SplittingCTriple::from_lagrangian_form(
            v.clone(),
            t.c().clone(),
            Subspace::zero(4),
            Subspace::zero(4)
        )
        .is_err());
    }

    #[test]
    fn reduced_space_examples() {
        let v = SymplecticSpace::standard(2);
        let red = reduce_space(&SplittingCTriple::whole(v.clone()));
        assert_eq!(red.space(), &v);
        let red = reduce_space(&std2_triple());
        assert_eq!(red.space(), &SymplecticSpace::standard(1));
        assert!(red.quotient(&Matrix::from_ints(&[[0, 0, 0, 1]])).is_err());
        assert_eq!(
            red.quotient(&Matrix::from_ints(&[[2, 3, 5, 0]])).unwrap(),
            Matrix::from_ints(&[[2, 3]])
        );
    }

    #[test]
    fn reduction_relation_examples() {
        let v = SymplecticSpace::standard(2);
        let lc = reduction_relation(&SplittingCTriple::whole(v.clone()));
        assert_eq!(
            lc.graph(),
            crate::relations::diagonal(&v).relation().graph()
        );
        let t = std2_triple();
        let lc = reduction_relation(&t);
        assert_eq!(lc.graph().dim(), 3);
        assert_eq!(lc.graph().ambient_dim(), 6);
        let minus = minus_relation(&t);
        let amb = lc.ambient_space();
        assert!(amb.is_isotropic(&minus).unwrap());
        assert!(Subspace::is_direct_sum(&[lc.graph(), &minus], &Subspace::full(6)).unwrap());
    }

    #[test]
    fn minus_relation_of_whole_is_antidiagonal() {
        let v = SymplecticSpace::standard(1);
        let minus = minus_relation(&SplittingCTriple::whole(v.clone()));
        assert_eq!(
            minus,
            Subspace::from_ints(4, &[[1, 0, -1, 0], [0, 1, 0, -1]])
        );
    }

    #[test]
    fn minus_relation_for_lagrangian_c() {
        let v = SymplecticSpace::standard(2);
        let lag = Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        let lc = lagrangian_complement(&v, &lag).unwrap();
        let t =
            SplittingCTriple::from_lagrangian_form(v, lag.clone(), Subspace::zero(4), lc.clone())
                .unwrap();
        assert_eq!(reduction_relation(&t).graph(), &lag);
        assert_eq!(minus_relation(&t), lc);
    }

    #[test]
    fn reduce_lagrangian_examples() {
        let t = std2_triple();
        let l = Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        assert_eq!(
            reduce_lagrangian(&t, &l).unwrap(),
            Subspace::from_ints(2, &[[1, 0]])
        );
        // C^ω ⊆ L ⊆ C: the image of L is Lagrangian.
        let l = Subspace::from_ints(4, &[[1, 1, 0, 0], [0, 0, 1, 0]]);
        let lb = reduce_lagrangian(&t, &l).unwrap();
        assert_eq!(lb, Subspace::from_ints(2, &[[1, 1]]));
        let v = SymplecticSpace::standard(2);
        let whole = SplittingCTriple::whole(v.clone());
        let l = Subspace::from_ints(4, &[[1, 0, 0, 1], [0, 1, 1, 0]]);
        assert!(v.is_lagrangian(&l).unwrap());
        assert_eq!(reduce_lagrangian(&whole, &l).unwrap(), l);
        assert_eq!(
            reduce_lagrangian(&t, &Subspace::from_ints(4, &[[1, 0, 0, 0]])),
            Err(Error::NotLagrangian)
        );
    }

    #[test]
    fn neatness_contained_lagrangian() {
        let t = std2_triple();
        let v = t.space().clone();
        let l = Subspace::from_ints(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        let NeatSearch::Found(lp) = find_neat_complement(&l, &t).unwrap() else {
            panic!("L ⊆ C admits a neat complement");
        };
        let pair = SplittingLPair::new(v.clone(), l.clone(), lp).unwrap();
        assert!(check_neat(&pair, &t).unwrap());
        let (lb, comp) = neat_reduction_is_split(&pair, &t).unwrap();
        assert_eq!(lb, Subspace::from_ints(2, &[[1, 0]]));
        assert_eq!(comp, Subspace::from_ints(2, &[[0, 1]]));

        // A Lagrangian complement that misses C' entirely is not neat.
        let graph = Subspace::from_ints(4, &[[1, 1, 1, 0], [1, 0, 1, 1]]);
        assert!(v.is_lagrangian(&graph).unwrap());
        let lp = Subspace::from_ints(4, &[[0, 1, 1, 0], [1, 0, 0, 1]]);
        let pair = SplittingLPair::new(v.clone(), l.clone(), lp).unwrap();
        assert!(!check_neat(&pair, &t).unwrap());
        assert!(matches!(
            neat_reduction_is_split(&pair, &t),
            Err(Error::NotNeat(_))
        ));
    }

    #[test]
    fn neatness_whole_space_always_holds() {
        let v = SymplecticSpace::standard(2);
        let t = SplittingCTriple::whole(v.clone());
        let l = Subspace::from_ints(4, &[[1, 0, 0, 1], [0, 1, 1, 0]]);
        let lp = lagrangian_complement(&v, &l).unwrap();
        let pair = SplittingLPair::new(v.clone(), l.clone(), lp.clone()).unwrap();
        assert!(check_neat(&pair, &t).unwrap());
        assert_eq!(
            find_neat_complement(&l, &t).unwrap(),
            NeatSearch::Found(lp.clone())
        );
        assert_eq!(neat_reduction_is_split(&pair, &t).unwrap(), (l, lp));
    }

    #[test]
    fn neatness_counterexample() {
        // L = span(q1 + q2, p1 - p2) is Lagrangian and meets C' = span(q1, p1) trivially.
        let t = std2_triple();
        let v = t.space().clone();
        let l = Subspace::from_ints(4, &[[1, 0, 1, 0], [0, 1, 0, -1]]);
        assert!(v.is_lagrangian(&l).unwrap());
        assert!(l.intersect(t.c_prime()).unwrap().is_zero());
        // Containing C' would force L' to hold the pair q1, p1 with ω(q1, p1) = 1.
        assert!(!v.is_isotropic(t.c_prime()).unwrap());
        let NeatSearch::Impossible(cert) = find_neat_complement(&l, &t).unwrap() else {
            panic!("no neat complement exists");
        };
        assert!(cert.is_obstruction());
        assert!(cert.l_part.is_zero());
        let lp = lagrangian_complement(&v, &l).unwrap();
        let pair = SplittingLPair::new(v, l, lp).unwrap();
        assert!(!check_neat(&pair, &t).unwrap());
    }

    #[test]
    fn dim_count_examples() {
        assert_eq!(dim_counts(2, 1).unwrap(), DimCounts { d1: 6, d2: 1, d: 5 });
        for n in 0..=8u64 {
            assert_eq!(dim_counts(n, n).unwrap().d, n * (2 * n + 1));
            assert_eq!(dim_counts(n, 0).unwrap().d, 0);
        }
        assert!(dim_counts(1, 2).is_err());
    }

    #[test]
    fn phi_examples() {
        let t = std2_triple();
        assert_eq!(phi(&t, t.c_c()).unwrap(), minus_relation(&t));
        let other = Subspace::from_ints(4, &[[0, 0, 1, 1]]);
        let a = phi(&t, t.c_c()).unwrap();
        let b = phi(&t, &other).unwrap();
        assert_ne!(a, b);
        let v = SymplecticSpace::standard(1);
        let whole = SplittingCTriple::whole(v.clone());
        assert_eq!(
            phi(&whole, &Subspace::zero(2)).unwrap(),
            Subspace::from_ints(4, &[[1, 0, -1, 0], [0, 1, 0, -1]])
        );
        assert!(phi(&t, &Subspace::from_ints(4, &[[0, 1, 0, 1]])).is_err());
    }

    #[test]
    fn random_triples_validate() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (n, k) in [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (4, 0)] {
            let t = random_triple(n, k, &mut rng).unwrap();
            assert_eq!(t.c().dim(), n + k);
            let t = random_framed_triple(n, k, &mut rng).unwrap();
            assert_eq!(t.c_prime().dim(), 2 * k);
        }
    }
}
