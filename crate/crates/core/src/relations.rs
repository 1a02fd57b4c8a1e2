//! Linear canonical relations and their composition by reduction.
//!
//! A relation `V ↛ W` is a Lagrangian subspace of `V̄ ⊕ W`, with the
//! coordinates of `V` first. Composition reduces the product of the graphs by
//! the coisotropic `{(a, w, w, d)} ⊆ V̄₁ ⊕ V₂ ⊕ V̄₂ ⊕ V₃`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::reduction::{
    check_neat, neat_reduction_is_split, reduce_lagrangian, reduction_relation, NeatFailure,
    SplittingCTriple,
};
use crate::symplectic::{SplittingLPair, SymplecticSpace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalRelation {
    source: SymplecticSpace,
    target: SymplecticSpace,
    graph: Subspace,
}

impl CanonicalRelation {
    pub fn new(source: SymplecticSpace, target: SymplecticSpace, graph: Subspace) -> Result<Self> {
        let rel = CanonicalRelation {
            source,
            target,
            graph,
        };
        if !rel.ambient_space().is_lagrangian(&rel.graph)? {
            return Err(Error::NotLagrangian);
        }
        Ok(rel)
    }

    pub fn source(&self) -> &SymplecticSpace {
        &self.source
    }

    pub fn target(&self) -> &SymplecticSpace {
        &self.target
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    /// `V̄ ⊕ W`.
    pub fn ambient_space(&self) -> SymplecticSpace {
        self.source.opposite().direct_sum(&self.target)
    }
}

/// A canonical relation with a Lagrangian complement of its graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitCanonicalRelation {
    relation: CanonicalRelation,
    complement: Subspace,
}

impl SplitCanonicalRelation {
    pub fn new(relation: CanonicalRelation, complement: Subspace) -> Result<Self> {
        SplittingLPair::new(
            relation.ambient_space(),
            relation.graph.clone(),
            complement.clone(),
        )?;
        Ok(SplitCanonicalRelation {
            relation,
            complement,
        })
    }

    pub fn relation(&self) -> &CanonicalRelation {
        &self.relation
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    pub fn as_pair(&self) -> SplittingLPair {
        SplittingLPair::new(
            self.relation.ambient_space(),
            self.relation.graph.clone(),
            self.complement.clone(),
        )
        .expect("validated on construction")
    }

    pub fn transpose(&self) -> SplitCanonicalRelation {
        let (a, b) = (self.relation.source.dim(), self.relation.target.dim());
        SplitCanonicalRelation {
            relation: transpose(&self.relation),
            complement: swap_blocks(&self.complement, a, b),
        }
    }
}

/// The identity relation `Δ ⊆ V̄ ⊕ V` with complement `{(x, -x)}`.
pub fn diagonal(v: &SymplecticSpace) -> SplitCanonicalRelation {
    let n = v.dim();
    let id = Matrix::identity(n);
    let graph = Subspace::span(&id.hstack(&id).expect("same rows"));
    let complement = Subspace::span(&id.hstack(&id.neg()).expect("same rows"));
    let relation = CanonicalRelation::new(v.clone(), v.clone(), graph).expect("Δ is Lagrangian");
    SplitCanonicalRelation::new(relation, complement).expect("Δ and its negative are complementary")
}

/// A Lagrangian `l ⊆ V` as a relation from the zero space.
pub fn from_lagrangian(l: &Subspace, v: &SymplecticSpace) -> Result<CanonicalRelation> {
    CanonicalRelation::new(SymplecticSpace::zero(), v.clone(), l.clone())
}

/// Exchanges the first `a` and the following `b` coordinates.
fn swap_blocks(s: &Subspace, a: usize, b: usize) -> Subspace {
    permute_blocks(s, &[a, b], &[1, 0])
}

/// Reorders consecutive coordinate blocks of the given sizes into `order`.
pub fn permute_blocks(s: &Subspace, sizes: &[usize], order: &[usize]) -> Subspace {
    let n: usize = sizes.iter().sum();
    assert_eq!(
        s.ambient_dim(),
        n,
        "block sizes do not cover the ambient space"
    );
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &d in sizes {
        starts.push(acc);
        acc += d;
    }
    let mut p = Matrix::zeros(n, n);
    let mut col = 0;
    for &b in order {
        for i in 0..sizes[b] {
            p[(starts[b] + i, col)] = Scalar::one();
            col += 1;
        }
    }
    s.image(&p).expect("square permutation")
}

/// `{ (w, v) : (v, w) ∈ graph }` as a relation `W ↛ V`.
pub fn transpose(r: &CanonicalRelation) -> CanonicalRelation {
    // Swapping the blocks maps V̄ ⊕ W onto W ⊕ V̄ = -(W̄ ⊕ V), which has the same Lagrangians.
    let graph = swap_blocks(&r.graph, r.source.dim(), r.target.dim());
    CanonicalRelation::new(r.target.clone(), r.source.clone(), graph)
        .expect("transpose of a Lagrangian relation")
}

/// Graph `{ (x, s x) }` of a symplectic map `s` (acting on column vectors),
/// split by `{ (x, -s x) }`.
pub fn graph_of_map(
    s: &Matrix,
    v: &SymplecticSpace,
    w: &SymplecticSpace,
) -> Result<SplitCanonicalRelation> {
    if !v.is_symplectic_map(s, w) {
        return Err(Error::NotSymplectic);
    }
    let id = Matrix::identity(v.dim());
    let st = s.transpose();
    let graph = Subspace::span(&id.hstack(&st)?);
    let complement = Subspace::span(&id.hstack(&st.neg())?);
    let relation = CanonicalRelation::new(v.clone(), w.clone(), graph)?;
    SplitCanonicalRelation::new(relation, complement)
}

/// `(C, C^c, C')` in `V̄₁ ⊕ V₂ ⊕ V̄₂ ⊕ V₃` with `C = {(a, w, w, d)}`,
/// `C^c = {(0, w, -w, 0)}` and `C' = {(a, 0, 0, d)}`.
pub fn composition_coisotropic(
    v1: &SymplecticSpace,
    v2: &SymplecticSpace,
    v3: &SymplecticSpace,
) -> SplittingCTriple {
    let (a, b, c) = (v1.dim(), v2.dim(), v3.dim());
    let n = a + 2 * b + c;
    let space = SymplecticSpace::direct_sum_all(&[&v1.opposite(), v2, &v2.opposite(), v3]);
    let unit = |i: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    };
    let outer: Vec<usize> = (0..a).chain(a + 2 * b..n).collect();
    let mut c_rows: Vec<Vec<Scalar>> = outer.iter().map(|&i| unit(i)).collect();
    let mut cc_rows = Vec::with_capacity(b);
    for i in 0..b {
        let mut diag = unit(a + i);
        diag[a + b + i] = Scalar::one();
        c_rows.push(diag);
        let mut anti = unit(a + i);
        anti[a + b + i] = -Scalar::one();
        cc_rows.push(anti);
    }
    SplittingCTriple::new(
        space,
        Subspace::from_rows(n, c_rows).expect("uniform rows"),
        Subspace::from_rows(n, cc_rows).expect("uniform rows"),
        Subspace::coordinate(n, &outer),
    )
    .expect("the composition triple is valid")
}

fn check_composable(r1: &CanonicalRelation, r2: &CanonicalRelation) -> Result<()> {
    if r1.target != r2.source {
        return Err(Error::SpaceMismatch(format!(
            "first relation ends in a {}-dimensional space, second starts in a different {}-dimensional space",
            r1.target.dim(),
            r2.source.dim()
        )));
    }
    Ok(())
}

/// `r2 ∘ r1 = { (a, d) : ∃ w, (a, w) ∈ r1, (w, d) ∈ r2 }`.
pub fn compose(r1: &CanonicalRelation, r2: &CanonicalRelation) -> Result<CanonicalRelation> {
    check_composable(r1, r2)?;
    let t = composition_coisotropic(&r1.source, &r1.target, &r2.target);
    let graph = reduce_lagrangian(&t, &r1.graph.product(&r2.graph))?;
    // C' is spanned by unit vectors on the outer blocks, so reduced coordinates are (a, d).
    CanonicalRelation::new(r1.source.clone(), r2.target.clone(), graph)
}

/// `r1 × r2 : V₁ ⊕ V₂ ↛ W₁ ⊕ W₂`.
pub fn product(r1: &CanonicalRelation, r2: &CanonicalRelation) -> CanonicalRelation {
    let sizes = [
        r1.source.dim(),
        r1.target.dim(),
        r2.source.dim(),
        r2.target.dim(),
    ];
    let graph = permute_blocks(&r1.graph.product(&r2.graph), &sizes, &[0, 2, 1, 3]);
    CanonicalRelation::new(
        r1.source.direct_sum(&r2.source),
        r1.target.direct_sum(&r2.target),
        graph,
    )
    .expect("products of Lagrangians are Lagrangian")
}

/// Product of split relations, with the product complement.
pub fn product_split(
    s1: &SplitCanonicalRelation,
    s2: &SplitCanonicalRelation,
) -> SplitCanonicalRelation {
    let r1 = &s1.relation;
    let r2 = &s2.relation;
    let sizes = [
        r1.source.dim(),
        r1.target.dim(),
        r2.source.dim(),
        r2.target.dim(),
    ];
    let complement = permute_blocks(
        &s1.complement.product(&s2.complement),
        &sizes,
        &[0, 2, 1, 3],
    );
    SplitCanonicalRelation::new(product(r1, r2), complement)
        .expect("products of complements are complements")
}

/// Transversal, and `(g₁ × g₂) ∩ C^ω = 0` for the composition triple, so the
/// fiber product projects injectively.
///
/// For a Lagrangian `L` and coisotropic `C`, `(L + C)^ω = L ∩ C^ω`, so the
/// second condition already implies the first.
pub fn is_strongly_transversal(r1: &CanonicalRelation, r2: &CanonicalRelation) -> Result<bool> {
    check_composable(r1, r2)?;
    let t = composition_coisotropic(&r1.source, &r1.target, &r2.target);
    let g = r1.graph.product(&r2.graph);
    Ok(g.sum(t.c())?.is_full() && g.intersect(t.c_omega())?.is_zero())
}

/// `g₁ × g₂ + C = V̄₁ ⊕ V₂ ⊕ V̄₂ ⊕ V₃`.
pub fn is_transversal(r1: &CanonicalRelation, r2: &CanonicalRelation) -> Result<bool> {
    check_composable(r1, r2)?;
    let t = composition_coisotropic(&r1.source, &r1.target, &r2.target);
    Ok(r1.graph.product(&r2.graph).sum(t.c())?.is_full())
}

fn composition_pair(
    s1: &SplitCanonicalRelation,
    s2: &SplitCanonicalRelation,
) -> Result<(SplittingLPair, SplittingCTriple)> {
    let (r1, r2) = (&s1.relation, &s2.relation);
    check_composable(r1, r2)?;
    let t = composition_coisotropic(&r1.source, &r1.target, &r2.target);
    let pair = SplittingLPair::new(
        t.space().clone(),
        r1.graph.product(&r2.graph),
        s1.complement.product(&s2.complement),
    )?;
    Ok((pair, t))
}

/// Whether the product split pair is neat for the composition triple.
pub fn neatly_related(s1: &SplitCanonicalRelation, s2: &SplitCanonicalRelation) -> Result<bool> {
    let (pair, t) = composition_pair(s1, s2)?;
    check_neat(&pair, &t)
}

/// Composition carrying the reduced complement; fails with a certificate when
/// the pair is not neatly related.
pub fn compose_split(
    s1: &SplitCanonicalRelation,
    s2: &SplitCanonicalRelation,
) -> Result<SplitCanonicalRelation> {
    let (pair, t) = composition_pair(s1, s2)?;
    if !check_neat(&pair, &t)? {
        let cp = t.c_prime();
        return Err(Error::NotNeat(Box::new(NeatFailure {
            l_part: pair.l().intersect(cp)?,
            l_prime_part: Some(pair.l_prime().intersect(cp)?),
            c_prime_dim: cp.dim(),
        })));
    }
    let (graph, complement) = neat_reduction_is_split(&pair, &t)?;
    let relation = CanonicalRelation::new(
        s1.relation.source.clone(),
        s2.relation.target.clone(),
        graph,
    )?;
    SplitCanonicalRelation::new(relation, complement)
}

/// `L_C ∘ L`, with `L` read as a relation from the zero space.
pub fn reduce_lagrangian_by_composition(t: &SplittingCTriple, l: &Subspace) -> Result<Subspace> {
    let lr = from_lagrangian(l, t.space())?;
    Ok(compose(&lr, &reduction_relation(t))?.graph.clone())
}
