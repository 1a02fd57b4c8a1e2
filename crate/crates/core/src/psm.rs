//! Polynomial truncation of the boundary data of the Poisson sigma model with
//! target `ℝⁿ` and zero Poisson structure.
//!
//! Boundary fields are pairs `(X, η)` of `ℝⁿ`-valued polynomials of degree at
//! most `N` on `[0, 1]`, paired by `ω((X,η),(X̃,η̃)) = ∫₀¹ ⟨η̃,X⟩ − ⟨η,X̃⟩ dt`.
//! Coordinates are monomial coefficients: for each target coordinate, the
//! coefficients of `X` in degrees `0..=N` followed by those of `η`.
//!
//! All constraints used here are "constant in t" and linear functionals
//! `∫₀¹`, so every subspace is exact at every truncation degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::reduction::{check_neat, neat_reduction_is_split, reduce_space, SplittingCTriple};
use crate::relations::{compose, diagonal, product, CanonicalRelation, SplitCanonicalRelation};
use crate::symplectic::SymplecticSpace;

use Field::{Momentum as Eta, Position as X};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PolyTruncation {
    degree: usize,
    target_dim: usize,
}

impl PolyTruncation {
    /// Requires `degree ≥ 1` and `target_dim ≥ 1`.
    pub fn new(degree: usize, target_dim: usize) -> Result<Self> {
        if degree < 1 || target_dim < 1 {
            return Err(Error::InvalidArgument(format!(
                "truncation needs degree ≥ 1 and target dimension ≥ 1, got {degree} and {target_dim}"
            )));
        }
        Ok(PolyTruncation { degree, target_dim })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    /// The map `X : [0,1] → ℝⁿ`.
    Position,
    /// The one-form component `η`.
    Momentum,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsmBoundarySpace {
    trunc: PolyTruncation,
    space: SymplecticSpace,
}

impl PsmBoundarySpace {
    pub fn trunc(&self) -> PolyTruncation {
        self.trunc
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn terms(&self) -> usize {
        self.trunc.degree + 1
    }

    /// Coordinate of the `t^power` coefficient of `field` in target coordinate `coord`.
    pub fn index(&self, coord: usize, field: Field, power: usize) -> usize {
        assert!(coord < self.trunc.target_dim && power < self.terms());
        let offset = match field {
            Field::Position => 0,
            Field::Momentum => self.terms(),
        };
        coord * 2 * self.terms() + offset + power
    }

    /// `∫₀¹` of `field` in target coordinate `coord` for the vector `v`.
    pub fn integral(&self, v: &[Scalar], coord: usize, field: Field) -> Scalar {
        (0..self.terms())
            .map(|j| &v[self.index(coord, field, j)] * Scalar::ratio(1, j as i64 + 1))
            .sum()
    }
}

/// `H[i][j] = ∫₀¹ tⁱ tʲ dt = 1/(i+j+1)` for `0 ≤ i, j ≤ degree`.
pub fn moments(degree: usize) -> Matrix {
    let m = degree + 1;
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| Scalar::ratio(1, (i + j + 1) as i64))
                .collect()
        })
        .collect();
    Matrix::from_rows(m, rows).expect("square moment matrix")
}

pub fn build_space(t: PolyTruncation) -> PsmBoundarySpace {
    let m = t.degree + 1;
    let h = moments(t.degree);
    let mut block = Matrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..m {
            block[(i, m + j)] = h[(i, j)].clone();
            block[(m + i, j)] = -&h[(i, j)];
        }
    }
    let blocks: Vec<&Matrix> = (0..t.target_dim).map(|_| &block).collect();
    let space =
        SymplecticSpace::new(Matrix::block_diag(&blocks)).expect("Hilbert blocks are nonsingular");
    PsmBoundarySpace { trunc: t, space }
}

/// Linear constraints on `copies` consecutive copies of the boundary space.
struct Constraints<'a> {
    s: &'a PsmBoundarySpace,
    copies: usize,
    rows: Vec<Vec<Scalar>>,
}

impl<'a> Constraints<'a> {
    fn new(s: &'a PsmBoundarySpace, copies: usize) -> Self {
        Constraints {
            s,
            copies,
            rows: Vec::new(),
        }
    }

    fn width(&self) -> usize {
        self.copies * self.s.dim()
    }

    fn at(&self, copy: usize, coord: usize, field: Field, power: usize) -> usize {
        copy * self.s.dim() + self.s.index(coord, field, power)
    }

    fn push(&mut self, entries: &[(usize, Scalar)]) {
        let mut row = vec![Scalar::zero(); self.width()];
        for (i, x) in entries {
            row[*i] += x;
        }
        self.rows.push(row);
    }

    /// `field` has no terms of positive degree.
    fn constant(mut self, copy: usize, field: Field) -> Self {
        for c in 0..self.s.trunc.target_dim {
            for j in 1..self.s.terms() {
                let i = self.at(copy, c, field, j);
                self.push(&[(i, Scalar::one())]);
            }
        }
        self
    }

    /// `field` vanishes identically.
    fn vanishes(mut self, copy: usize, field: Field) -> Self {
        for c in 0..self.s.trunc.target_dim {
            for j in 0..self.s.terms() {
                let i = self.at(copy, c, field, j);
                self.push(&[(i, Scalar::one())]);
            }
        }
        self
    }

    /// `Σ sign · field[copy] = 0` coefficientwise.
    fn combination(mut self, field: Field, terms: &[(usize, i64)]) -> Self {
        for c in 0..self.s.trunc.target_dim {
            for j in 0..self.s.terms() {
                let entries: Vec<_> = terms
                    .iter()
                    .map(|&(copy, sign)| (self.at(copy, c, field, j), Scalar::from_int(sign)))
                    .collect();
                self.push(&entries);
            }
        }
        self
    }

    /// `∫₀¹ Σ sign · field[copy] dt = 0`.
    fn integral(mut self, field: Field, terms: &[(usize, i64)]) -> Self {
        for c in 0..self.s.trunc.target_dim {
            let mut entries = Vec::new();
            for &(copy, sign) in terms {
                for j in 0..self.s.terms() {
                    let w = Scalar::ratio(sign, j as i64 + 1);
                    entries.push((self.at(copy, c, field, j), w));
                }
            }
            self.push(&entries);
        }
        self
    }

    fn solve(self) -> Subspace {
        let width = self.width();
        if self.rows.is_empty() {
            return Subspace::full(width);
        }
        Subspace::kernel(&Matrix::from_rows(width, self.rows).expect("uniform rows"))
    }
}

/// The Euler–Lagrange c-triple: `C = {X constant}`,
/// `C^c = {∫X = 0, η = 0}`, `C' = {X and η constant}`.
pub fn c_m(s: &PsmBoundarySpace) -> SplittingCTriple {
    let c = Constraints::new(s, 1).constant(0, X).solve();
    let c_c = Constraints::new(s, 1)
        .integral(X, &[(0, 1)])
        .vanishes(0, Eta)
        .solve();
    let c_prime = Constraints::new(s, 1)
        .constant(0, X)
        .constant(0, Eta)
        .solve();
    SplittingCTriple::new(s.space.clone(), c, c_c, c_prime).expect("C_M is a valid c-triple")
}

/// `{X = 0, ∫η = 0}`, the expected `C_M^ω`.
pub fn c_m_orthogonal(s: &PsmBoundarySpace) -> Subspace {
    Constraints::new(s, 1)
        .vanishes(0, X)
        .integral(Eta, &[(0, 1)])
        .solve()
}

fn split(
    source: SymplecticSpace,
    target: SymplecticSpace,
    graph: Subspace,
    complement: Subspace,
) -> SplitCanonicalRelation {
    let rel =
        CanonicalRelation::new(source, target, graph).expect("constraint subspace is Lagrangian");
    SplitCanonicalRelation::new(rel, complement).expect("constraint complement is isotropic")
}

/// `L¹ = {X constant, ∫η = 0}` as `{0} ↛ V`, split by `{η constant, ∫X = 0}`.
pub fn l1(s: &PsmBoundarySpace) -> SplitCanonicalRelation {
    let graph = Constraints::new(s, 1)
        .constant(0, X)
        .integral(Eta, &[(0, 1)])
        .solve();
    let complement = Constraints::new(s, 1)
        .constant(0, Eta)
        .integral(X, &[(0, 1)])
        .solve();
    split(SymplecticSpace::zero(), s.space.clone(), graph, complement)
}

/// `L² = {X = X' constant, ∫(η − η') = 0}` as `V ↛ V`, split by
/// `{∫(X + X') = 0, η = −η' constant}`.
pub fn l2(s: &PsmBoundarySpace) -> SplitCanonicalRelation {
    let graph = Constraints::new(s, 2)
        .constant(0, X)
        .combination(X, &[(0, 1), (1, -1)])
        .integral(Eta, &[(0, 1), (1, -1)])
        .solve();
    let complement = Constraints::new(s, 2)
        .integral(X, &[(0, 1), (1, 1)])
        .constant(0, Eta)
        .combination(Eta, &[(0, 1), (1, 1)])
        .solve();
    split(s.space.clone(), s.space.clone(), graph, complement)
}

/// `L³ = {X = X' = X'' constant, ∫η'' = ∫(η + η')}` as `V ⊕ V ↛ V`, split by
/// `{η = η' = −η'' constant, ∫(X + X' + X'') = 0}`.
///
/// The constraints are stated for `V ⊕ V ⊕ V̄`; `V̄ ⊕ V̄ ⊕ V` carries the
/// negated form and so has the same Lagrangian and isotropic subspaces.
pub fn l3(s: &PsmBoundarySpace) -> SplitCanonicalRelation {
    let graph = Constraints::new(s, 3)
        .constant(0, X)
        .combination(X, &[(0, 1), (1, -1)])
        .combination(X, &[(0, 1), (2, -1)])
        .integral(Eta, &[(0, 1), (1, 1), (2, -1)])
        .solve();
    let complement = Constraints::new(s, 3)
        .constant(0, Eta)
        .combination(Eta, &[(0, 1), (1, -1)])
        .combination(Eta, &[(0, 1), (2, 1)])
        .integral(X, &[(0, 1), (1, 1), (2, 1)])
        .solve();
    let v = s.space.clone();
    split(v.direct_sum(&v), v, graph, complement)
}

/// Adds `delta` to the constant term of `field` in `coord` of the given copy.
fn shift_constant(
    s: &PsmBoundarySpace,
    v: &mut [Scalar],
    copy: usize,
    coord: usize,
    field: Field,
    delta: &Scalar,
) {
    v[copy * s.dim() + s.index(coord, field, 0)] += delta;
}

/// Splits `w ∈ V̄ ⊕ V` as `a + b` with `a ∈ L²` and `b` in its complement.
///
/// With `s = ½∫(X + X')` and `d = ∫(η − η')` per coordinate,
/// `a = (s, η − d/2, s, η' + d/2)` and `b = (X − s, d/2, X' − s, −d/2)`.
pub fn l2_decomposition(s: &PsmBoundarySpace, w: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    assert_eq!(w.len(), 2 * s.dim(), "vector is not in V ⊕ V");
    let dim = s.dim();
    let (w0, w1) = w.split_at(dim);
    let half = Scalar::ratio(1, 2);
    let mut a = w.to_vec();
    let mut b = vec![Scalar::zero(); 2 * dim];
    for c in 0..s.trunc.target_dim {
        let mean = (s.integral(w0, c, X) + s.integral(w1, c, X)) * &half;
        let d2 = (s.integral(w0, c, Eta) - s.integral(w1, c, Eta)) * &half;
        for copy in 0..2 {
            for j in 0..s.terms() {
                let i = copy * dim + s.index(c, X, j);
                b[i] = a[i].clone();
                a[i] = Scalar::zero();
            }
            shift_constant(s, &mut a, copy, c, X, &mean);
            shift_constant(s, &mut b, copy, c, X, &-&mean);
        }
        shift_constant(s, &mut a, 0, c, Eta, &-&d2);
        shift_constant(s, &mut a, 1, c, Eta, &d2);
        shift_constant(s, &mut b, 0, c, Eta, &d2);
        shift_constant(s, &mut b, 1, c, Eta, &-&d2);
    }
    (a, b)
}

/// Splits `w ∈ V̄ ⊕ V̄ ⊕ V` as `a + b` with `a ∈ L³` and `b` in its complement.
///
/// With `σ = ⅓∫(X + X' + X'')` and `c = ⅓∫(η + η' − η'')` per coordinate,
/// `a = (σ, η − c, σ, η' − c, σ, η'' + c)` and
/// `b = (X − σ, c, X' − σ, c, X'' − σ, −c)`.
pub fn l3_decomposition(s: &PsmBoundarySpace, w: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    assert_eq!(w.len(), 3 * s.dim(), "vector is not in V ⊕ V ⊕ V");
    let dim = s.dim();
    let parts: Vec<&[Scalar]> = w.chunks(dim).collect();
    let third = Scalar::ratio(1, 3);
    let mut a = w.to_vec();
    let mut b = vec![Scalar::zero(); 3 * dim];
    for c in 0..s.trunc.target_dim {
        let sigma: Scalar = parts.iter().map(|p| s.integral(p, c, X)).sum::<Scalar>() * &third;
        let k = (s.integral(parts[0], c, Eta) + s.integral(parts[1], c, Eta)
            - s.integral(parts[2], c, Eta))
            * &third;
        for copy in 0..3 {
            for j in 0..s.terms() {
                let i = copy * dim + s.index(c, X, j);
                b[i] = a[i].clone();
                a[i] = Scalar::zero();
            }
            shift_constant(s, &mut a, copy, c, X, &sigma);
            shift_constant(s, &mut b, copy, c, X, &-&sigma);
            let sign = if copy == 2 { -&k } else { k.clone() };
            shift_constant(s, &mut a, copy, c, Eta, &-&sign);
            shift_constant(s, &mut b, copy, c, Eta, &sign);
        }
    }
    (a, b)
}

/// `C_M` for two and three copies, matching the ambient spaces of `L²` and `L³`.
pub fn doubled_triple(t: &SplittingCTriple) -> SplittingCTriple {
    t.opposite().direct_sum(t)
}

pub fn tripled_triple(t: &SplittingCTriple) -> SplittingCTriple {
    t.opposite().direct_sum(&t.opposite()).direct_sum(t)
}

/// Zero section `{μ = 0}` of `T*ℝⁿ` in coordinates `(x₁, μ₁, …, xₙ, μₙ)`,
/// split by the fiber `{x = 0}`.
pub fn zero_section(n: usize) -> SplitCanonicalRelation {
    let even: Vec<usize> = (0..n).map(|i| 2 * i).collect();
    let odd: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
    split(
        SymplecticSpace::zero(),
        SymplecticSpace::standard(n),
        Subspace::coordinate(2 * n, &even),
        Subspace::coordinate(2 * n, &odd),
    )
}

/// Graph of fiber addition `{((x, μ₁), (x, μ₂), (x, μ₁ + μ₂))}` as
/// `T*ℝⁿ ⊕ T*ℝⁿ ↛ T*ℝⁿ`, split by `{((x₁, ν), (x₂, ν), (−x₁ − x₂, −ν))}`.
pub fn fiber_addition(n: usize) -> SplitCanonicalRelation {
    let d = 2 * n;
    let vec_of = |entries: &[(usize, i64)]| {
        let mut v = vec![Scalar::zero(); 3 * d];
        for &(i, x) in entries {
            v[i] = Scalar::from_int(x);
        }
        v
    };
    let mut graph = Vec::new();
    let mut complement = Vec::new();
    for i in 0..n {
        let (x, mu) = (2 * i, 2 * i + 1);
        graph.push(vec_of(&[(x, 1), (d + x, 1), (2 * d + x, 1)]));
        graph.push(vec_of(&[(mu, 1), (2 * d + mu, 1)]));
        graph.push(vec_of(&[(d + mu, 1), (2 * d + mu, 1)]));
        complement.push(vec_of(&[(x, 1), (2 * d + x, -1)]));
        complement.push(vec_of(&[(d + x, 1), (2 * d + x, -1)]));
        complement.push(vec_of(&[(mu, 1), (d + mu, 1), (2 * d + mu, -1)]));
    }
    let t = SymplecticSpace::standard(n);
    split(
        t.direct_sum(&t),
        t,
        Subspace::from_rows(3 * d, graph).expect("uniform rows"),
        Subspace::from_rows(3 * d, complement).expect("uniform rows"),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PsmDimensions {
    pub dim_v: usize,
    pub dim_c: usize,
    pub dim_c_omega: usize,
    pub dim_reduced: usize,
    pub dim_l1: usize,
    pub dim_l2: usize,
    pub dim_l3: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PsmCheck {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PsmReport {
    pub degree: usize,
    pub target_dim: usize,
    pub dimensions: PsmDimensions,
    pub checks: Vec<PsmCheck>,
    pub all_passed: bool,
}

impl PsmReport {
    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }
}

/// Names of the checks performed by [`verify_psm`], in report order.
pub const PSM_CHECKS: &[&str] = &[
    "space.nondegenerate",
    "c_m.coisotropic",
    "c_m.orthogonal",
    "c_m.triple_valid",
    "c_m.dimensions",
    "c_m.reduced_is_cotangent",
    "l1.lagrangian",
    "l1.split",
    "l1.neat",
    "l1.reduced_zero_section",
    "l1.reduced_complement",
    "l2.lagrangian",
    "l2.split",
    "l2.decomposition",
    "l2.neat",
    "l2.reduced_diagonal",
    "l2.reduced_complement",
    "l3.lagrangian",
    "l3.split",
    "l3.decomposition",
    "l3.neat",
    "l3.reduced_fiber_addition",
    "l3.reduced_complement",
    "groupoid.unit",
    "groupoid.associativity",
    "groupoid.diagonal_idempotent",
];

struct Checks(Vec<PsmCheck>);

impl Checks {
    fn record(&mut self, name: &'static str, outcome: Result<bool>) {
        let (passed, error) = match outcome {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.0.push(PsmCheck {
            name,
            passed,
            error,
        });
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn check_relation(
    checks: &mut Checks,
    prefix: &'static [&'static str; 2],
    r: &SplitCanonicalRelation,
    expected_dim: usize,
) {
    let rel = r.relation();
    let amb = rel.ambient_space();
    checks.record(
        prefix[0],
        amb.is_lagrangian(rel.graph())
            .map(|lag| lag && rel.graph().dim() == expected_dim),
    );
    checks.record(
        prefix[1],
        amb.is_isotropic(r.complement()).and_then(|iso| {
            Ok(iso
                && Subspace::is_direct_sum(
                    &[rel.graph(), r.complement()],
                    &Subspace::full(amb.dim()),
                )?)
        }),
    );
}

fn check_decomposition(
    r: &SplitCanonicalRelation,
    dim: usize,
    f: impl Fn(&[Scalar]) -> (Vec<Scalar>, Vec<Scalar>),
) -> Result<bool> {
    for i in 0..dim {
        let w = unit_vector(dim, i);
        let (a, b) = f(&w);
        let sum_ok = a.iter().zip(&b).zip(&w).all(|((x, y), z)| &(x + y) == z);
        if !sum_ok
            || !r.relation().graph().contains_vector(&a)
            || !r.complement().contains_vector(&b)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_reduced(
    checks: &mut Checks,
    names: [&'static str; 3],
    r: &SplitCanonicalRelation,
    t: &SplittingCTriple,
    expected: &SplitCanonicalRelation,
) -> Option<Subspace> {
    let pair = r.as_pair();
    checks.record(names[0], check_neat(&pair, t));
    match neat_reduction_is_split(&pair, t) {
        Ok((graph, comp)) => {
            checks.record(names[1], Ok(&graph == expected.relation().graph()));
            checks.record(names[2], Ok(&comp == expected.complement()));
            Some(graph)
        }
        Err(e) => {
            checks.record(names[1], Err(e.clone()));
            checks.record(names[2], Err(e));
            None
        }
    }
}

/// Runs every identity of the zero-Poisson boundary model at the given truncation.
pub fn verify_psm(t: PolyTruncation) -> PsmReport {
    let (big_n, n) = (t.degree, t.target_dim);
    let s = build_space(t);
    let mut checks = Checks(Vec::new());
    let cotangent = SymplecticSpace::standard(n);

    checks.record(
        "space.nondegenerate",
        s.space.form().determinant().map(|d| !d.is_zero()),
    );
    let triple = c_m(&s);
    checks.record("c_m.coisotropic", s.space.is_coisotropic(triple.c()));
    checks.record(
        "c_m.orthogonal",
        Ok(triple.c_omega() == &c_m_orthogonal(&s)),
    );
    checks.record(
        "c_m.triple_valid",
        crate::reduction::validate_c_triple(&s.space, triple.c(), triple.c_c(), triple.c_prime())
            .map(|r| r.is_valid()),
    );
    let red = reduce_space(&triple);
    checks.record(
        "c_m.dimensions",
        Ok(triple.c().dim() == n * (big_n + 2)
            && triple.c_omega().dim() == n * big_n
            && red.dim() == 2 * n),
    );
    checks.record("c_m.reduced_is_cotangent", Ok(red.space() == &cotangent));

    let r1 = l1(&s);
    check_relation(
        &mut checks,
        &["l1.lagrangian", "l1.split"],
        &r1,
        n * (big_n + 1),
    );
    let red1 = check_reduced(
        &mut checks,
        [
            "l1.neat",
            "l1.reduced_zero_section",
            "l1.reduced_complement",
        ],
        &r1,
        &triple,
        &zero_section(n),
    );

    let r2 = l2(&s);
    check_relation(
        &mut checks,
        &["l2.lagrangian", "l2.split"],
        &r2,
        2 * n * (big_n + 1),
    );
    checks.record(
        "l2.decomposition",
        check_decomposition(&r2, 2 * s.dim(), |w| l2_decomposition(&s, w)),
    );
    let delta = diagonal(&cotangent);
    let red2 = check_reduced(
        &mut checks,
        ["l2.neat", "l2.reduced_diagonal", "l2.reduced_complement"],
        &r2,
        &doubled_triple(&triple),
        &delta,
    );

    let r3 = l3(&s);
    check_relation(
        &mut checks,
        &["l3.lagrangian", "l3.split"],
        &r3,
        3 * n * (big_n + 1),
    );
    checks.record(
        "l3.decomposition",
        check_decomposition(&r3, 3 * s.dim(), |w| l3_decomposition(&s, w)),
    );
    let plus = fiber_addition(n);
    let red3 = check_reduced(
        &mut checks,
        [
            "l3.neat",
            "l3.reduced_fiber_addition",
            "l3.reduced_complement",
        ],
        &r3,
        &tripled_triple(&triple),
        &plus,
    );

    let t2 = cotangent.direct_sum(&cotangent);
    let as_relation = |source: &SymplecticSpace, target: &SymplecticSpace, g: Option<Subspace>| {
        g.ok_or_else(|| Error::InvalidArgument("reduction unavailable".into()))
            .and_then(|g| CanonicalRelation::new(source.clone(), target.clone(), g))
    };
    let unit = as_relation(&SymplecticSpace::zero(), &cotangent, red1);
    let diag = as_relation(&cotangent, &cotangent, red2);
    let add = as_relation(&t2, &cotangent, red3);
    checks.record(
        "groupoid.unit",
        (|| {
            let (unit, diag, add) = (unit.clone()?, diag.clone()?, add.clone()?);
            let left = compose(&product(&unit, &diag), &add)?;
            let right = compose(&product(&diag, &unit), &add)?;
            Ok(&left == delta.relation() && &right == delta.relation())
        })(),
    );
    checks.record(
        "groupoid.associativity",
        (|| {
            let (diag, add) = (diag.clone()?, add.clone()?);
            let left = compose(&product(&add, &diag), &add)?;
            let right = compose(&product(&diag, &add), &add)?;
            Ok(left == right)
        })(),
    );
    checks.record(
        "groupoid.diagonal_idempotent",
        (|| {
            let diag = diag.clone()?;
            Ok(compose(&diag, &diag)? == diag)
        })(),
    );

    let checks = checks.0;
    debug_assert_eq!(
        checks.iter().map(|c| c.name).collect::<Vec<_>>(),
        PSM_CHECKS.to_vec()
    );
    PsmReport {
        degree: big_n,
        target_dim: n,
        dimensions: PsmDimensions {
            dim_v: s.dim(),
            dim_c: triple.c().dim(),
            dim_c_omega: triple.c_omega().dim(),
            dim_reduced: red.dim(),
            dim_l1: r1.relation().graph().dim(),
            dim_l2: r2.relation().graph().dim(),
            dim_l3: r3.relation().graph().dim(),
        },
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Dimensions showing why the symplectic-target boundary space has no
/// faithful polynomial truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TargetObstruction {
    pub degree: usize,
    pub dim_v: usize,
    pub dim_c: usize,
    pub dim_c_omega: usize,
    pub dim_c_cap_c_omega: usize,
    pub isotropic: bool,
    pub coisotropic: bool,
}

/// `C = {(X, Ω dX/dt)}` for target `ℝ²` with `Ω = [[0, −1], [1, 0]]`.
///
/// `dim C` is half of `dim V`, so coisotropy would force `C` to be
/// Lagrangian, but `ω` restricted to `C` is the boundary term `XᵀΩY|₀¹`.
pub fn symplectic_target_obstruction(degree: usize) -> Result<TargetObstruction> {
    let s = build_space(PolyTruncation::new(degree, 2)?);
    let mut rows = Vec::new();
    for coord in 0..2 {
        // Ω e₀ = e₁ and Ω e₁ = −e₀.
        let (image, sign) = if coord == 0 { (1, 1) } else { (0, -1) };
        for j in 0..=degree {
            let mut v = vec![Scalar::zero(); s.dim()];
            v[s.index(coord, X, j)] = Scalar::one();
            if j > 0 {
                v[s.index(image, Eta, j - 1)] = Scalar::from_int(sign * j as i64);
            }
            rows.push(v);
        }
    }
    let c = Subspace::from_rows(s.dim(), rows)?;
    let c_omega = s.space.orthogonal(&c)?;
    Ok(TargetObstruction {
        degree,
        dim_v: s.dim(),
        dim_c: c.dim(),
        dim_c_omega: c_omega.dim(),
        dim_c_cap_c_omega: c.intersect(&c_omega)?.dim(),
        isotropic: c.dim() == 0 || c_omega.contains(&c)?,
        coisotropic: c.contains(&c_omega)?,
    })
}
