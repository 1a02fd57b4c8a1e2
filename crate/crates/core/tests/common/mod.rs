//! Brute-force oracles and sample generators shared by the integration tests.
//!
//! The oracles use their own dense Gaussian elimination and explicit Gram
//! sums; none of them call the library's echelon forms, kernels or solvers.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use splitrel::relations::{graph_of_map, CanonicalRelation, SplitCanonicalRelation};
use splitrel::symplectic::{
    lagrangian_complement, random_isotropic, random_lagrangian_complement, random_lagrangian_with,
    random_symplectic_matrix,
};
use splitrel::{Matrix, Scalar, Subspace, SymplecticSpace};

pub type Rows = Vec<Vec<Scalar>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Oracles

/// Row echelon form by naive elimination; returns the nonzero rows.
fn echelon(rows: &[Vec<Scalar>]) -> Rows {
    let mut m: Rows = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= &d;
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    echelon(rows).len()
}

/// Basis of `{ x : Σ_j eq[i][j] x_j = 0 for all i }` in `Q^n`.
pub fn nullspace(equations: &[Vec<Scalar>], n: usize) -> Rows {
    let mut m: Rows = equations.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().unwrap();
        for j in 0..n {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -&m[row][free];
        }
        out.push(v);
    }
    out
}

/// `xᵀ F y` by explicit double sum.
pub fn pairing(form: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..y.len() {
            if !y[j].is_zero() && !form[(i, j)].is_zero() {
                s += &(&(&x[i] * &form[(i, j)]) * &y[j]);
            }
        }
    }
    s
}

pub fn gram_vanishes(form: &Matrix, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    a.iter()
        .all(|x| b.iter().all(|y| pairing(form, x, y).is_zero()))
}

pub fn is_isotropic(form: &Matrix, s: &Subspace) -> bool {
    let rows = s.basis().to_rows();
    gram_vanishes(form, &rows, &rows)
}

/// `W^ω` from the equations `ω(w_i, ·) = 0`.
pub fn orthogonal(form: &Matrix, w: &Subspace) -> Rows {
    let n = form.nrows();
    let eqs: Rows = w
        .basis()
        .row_iter()
        .map(|b| {
            (0..n)
                .map(|j| (0..n).map(|i| &b[i] * &form[(i, j)]).sum())
                .collect()
        })
        .collect();
    nullspace(&eqs, n)
}

/// The rows span exactly `s`.
pub fn same_span(rows: &[Vec<Scalar>], s: &Subspace) -> bool {
    let mut all = rows.to_vec();
    all.extend(s.basis().to_rows());
    let r = rank(rows);
    r == s.dim() && rank(&all) == r
}

/// `{ (a, d) : ∃ w, (a, w) ∈ g1, (w, d) ∈ g2 }` by solving for coefficient pairs.
pub fn compose(g1: &Subspace, a: usize, b: usize, g2: &Subspace, c: usize) -> Rows {
    let (m1, m2) = (g1.basis().to_rows(), g2.basis().to_rows());
    let (d1, d2) = (m1.len(), m2.len());
    // Unknowns (α, β); equations Σ α_i g1_i[a + k] − Σ β_j g2_j[k] = 0 for each middle k.
    let eqs: Rows = (0..b)
        .map(|k| {
            m1.iter()
                .map(|r| r[a + k].clone())
                .chain(m2.iter().map(|r| -&r[k]))
                .collect()
        })
        .collect();
    let sols = if b == 0 {
        identity_rows(d1 + d2)
    } else {
        nullspace(&eqs, d1 + d2)
    };
    sols.iter()
        .map(|s| {
            let mut v = vec![Scalar::zero(); a + c];
            for (i, r) in m1.iter().enumerate() {
                for k in 0..a {
                    v[k] += &(&s[i] * &r[k]);
                }
            }
            for (j, r) in m2.iter().enumerate() {
                for k in 0..c {
                    v[a + k] += &(&s[d1 + j] * &r[b + k]);
                }
            }
            v
        })
        .collect()
}

fn identity_rows(n: usize) -> Rows {
    (0..n)
        .map(|i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        })
        .collect()
}

/// `span { ½(k + k') : k ∈ basis(K), k' ∈ K^ω, k − k' ∈ L }`, solving for `k'`
/// and the `L` component directly.
pub fn average(form: &Matrix, l: &Subspace, k: &Subspace) -> Rows {
    let n = form.nrows();
    let k_omega = orthogonal(form, k);
    let lrows = l.basis().to_rows();
    let half = Scalar::ratio(1, 2);
    k.basis()
        .row_iter()
        .map(|kv| {
            // Σ μ_j u_j + Σ ν_i l_i − t k = 0 with t = 1.
            let unknowns = k_omega.len() + lrows.len() + 1;
            let eqs: Rows = (0..n)
                .map(|c| {
                    k_omega
                        .iter()
                        .map(|u| u[c].clone())
                        .chain(lrows.iter().map(|r| r[c].clone()))
                        .chain(std::iter::once(-&kv[c]))
                        .collect()
                })
                .collect();
            let sol = nullspace(&eqs, unknowns)
                .into_iter()
                .find(|s| !s[unknowns - 1].is_zero())
                .expect("K^ω ⊕ L = V");
            let t = sol[unknowns - 1].clone();
            let mut kp = vec![Scalar::zero(); n];
            for (j, u) in k_omega.iter().enumerate() {
                let coeff = &sol[j] / &t;
                for c in 0..n {
                    kp[c] += &(&coeff * &u[c]);
                }
            }
            (0..n).map(|c| &(&kv[c] + &kp[c]) * &half).collect()
        })
        .collect()
}

/// Dimension of the space of isotropic complements of `lag` near `comp`,
/// counted as the linear maps `A : comp → lag` whose graph is isotropic:
/// `ω(x, A y) + ω(A x, y) = 0` on a basis (the `ω(Ax, Ay)` term vanishes on `lag`).
pub fn complement_family_dimension(form: &Matrix, lag: &Subspace, comp: &Subspace) -> usize {
    let (lb, cb) = (lag.basis().to_rows(), comp.basis().to_rows());
    let (m, p) = (cb.len(), lb.len());
    // Unknown A[i][j]: A c_i = Σ_j A[i][j] l_j, index i * p + j.
    let mut eqs = Vec::new();
    for x in 0..m {
        for y in x..m {
            let mut row = vec![Scalar::zero(); m * p];
            for j in 0..p {
                row[y * p + j] += &pairing(form, &cb[x], &lb[j]);
                row[x * p + j] += &pairing(form, &lb[j], &cb[y]);
            }
            eqs.push(row);
        }
    }
    nullspace(&eqs, m * p).len()
}

// ---------------------------------------------------------------------------
// Generators

/// Space of dimension `2n` in a random integral frame: `Pᵀ J P` for a random
/// unimodular `P`, so the form is generally not in Darboux shape.
pub fn random_space<R: Rng>(n: usize, rng: &mut R) -> SymplecticSpace {
    let p = random_unimodular(2 * n, rng);
    let j = SymplecticSpace::standard(n).form().clone();
    SymplecticSpace::new(p.transpose().mul(&j).unwrap().mul(&p).unwrap()).unwrap()
}

pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(n);
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let f = Scalar::from_int(rng.gen_range(-1..=1));
        for c in 0..n {
            let d = &f * &m[(j, c)];
            m[(i, c)] += &d;
        }
    }
    m
}

/// Either the standard space or a randomly framed one.
pub fn some_space<R: Rng>(n: usize, rng: &mut R) -> SymplecticSpace {
    if rng.gen_bool(0.5) {
        SymplecticSpace::standard(n)
    } else {
        random_space(n, rng)
    }
}

pub fn random_rows<R: Rng>(count: usize, n: usize, rng: &mut R) -> Rows {
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
                .collect()
        })
        .collect()
}

/// Span of up to `n` random rows; low-rank outcomes are kept on purpose.
pub fn random_subspace<R: Rng>(n: usize, rng: &mut R) -> Subspace {
    let count = rng.gen_range(0..=n);
    if count == 0 {
        return Subspace::zero(n);
    }
    Subspace::from_rows(n, random_rows(count, n, rng)).unwrap()
}

/// A random Lagrangian in any space, grown as a random isotropic subspace.
pub fn random_lagrangian<R: Rng>(space: &SymplecticSpace, rng: &mut R) -> Subspace {
    random_isotropic(space, space.half_dim(), rng).unwrap()
}

/// A random complement of `l`, isotropic when `isotropic` is set.
pub fn random_complement<R: Rng>(
    space: &SymplecticSpace,
    l: &Subspace,
    isotropic: bool,
    rng: &mut R,
) -> Subspace {
    let whole = Subspace::full(space.dim());
    if isotropic {
        return random_lagrangian_complement(space, &whole, l, rng).unwrap();
    }
    loop {
        let k = Subspace::from_rows(space.dim(), random_rows(l.dim(), space.dim(), rng)).unwrap();
        if Subspace::is_direct_sum(&[l, &k], &whole).unwrap() {
            return k;
        }
    }
}

/// Random split relation `std(a) ↛ std(b)` of one of several shapes: a
/// symplectomorphism graph (when `a == b`), a generic Lagrangian graph, or a
/// product `L × M` of Lagrangians of the two sides.
pub fn random_relation<R: Rng>(a: usize, b: usize, rng: &mut R) -> SplitCanonicalRelation {
    let (v, w) = (SymplecticSpace::standard(a), SymplecticSpace::standard(b));
    let shape = rng.gen_range(0..3);
    if shape == 0 && a == b {
        let s = random_symplectic_matrix(a, rng);
        return graph_of_map(&s, &v, &w).unwrap();
    }
    if shape == 2 {
        return random_product_relation(a, b, rng);
    }
    let amb = v.opposite().direct_sum(&w);
    let g = random_lagrangian_with(&amb, rng).unwrap();
    let comp = lagrangian_complement(&amb, &g).unwrap();
    SplitCanonicalRelation::new(CanonicalRelation::new(v, w, g).unwrap(), comp).unwrap()
}

/// `L × M` split by `L' × M'` for random Lagrangian pairs of `std(a)` and `std(b)`.
pub fn random_product_relation<R: Rng>(a: usize, b: usize, rng: &mut R) -> SplitCanonicalRelation {
    let (v, w) = (SymplecticSpace::standard(a), SymplecticSpace::standard(b));
    let l = random_lagrangian(&v, rng);
    let lc = random_complement(&v, &l, true, rng);
    let m = random_lagrangian(&w, rng);
    let mc = random_complement(&w, &m, true, rng);
    SplitCanonicalRelation::new(
        CanonicalRelation::new(v, w, l.product(&m)).unwrap(),
        lc.product(&mc),
    )
    .unwrap()
}
