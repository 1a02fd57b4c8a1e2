//! Polynomial truncation of the zero-Poisson boundary model.

mod common;

use rand::Rng;

use splitrel::psm::{
    build_space, c_m, c_m_orthogonal, fiber_addition, l1, l2, l2_decomposition, l3,
    l3_decomposition, moments, symplectic_target_obstruction, verify_psm, zero_section,
    PolyTruncation, PSM_CHECKS,
};
use splitrel::reduction::{reduce_lagrangian, reduce_space, SplittingCTriple};
use splitrel::relations::diagonal;
use splitrel::{Scalar, SymplecticSpace};

fn trunc(n_deg: usize, n: usize) -> PolyTruncation {
    PolyTruncation::new(n_deg, n).unwrap()
}

#[test]
fn forms_are_nondegenerate() {
    for degree in 1..=8 {
        for n in 1..=2 {
            let s = build_space(trunc(degree, n));
            assert_eq!(s.dim(), 2 * n * (degree + 1));
            assert!(!s.space().form().determinant().unwrap().is_zero());
        }
    }
}

#[test]
fn moment_blocks_are_hilbert_matrices() {
    let h = moments(3);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(h[(i, j)], Scalar::ratio(1, (i + j + 1) as i64));
        }
    }
}

#[test]
fn c_m_at_degree_two() {
    let s = build_space(trunc(2, 1));
    let t = c_m(&s);
    assert_eq!(s.dim(), 6);
    assert_eq!(t.c().dim(), 4);
    assert_eq!(t.c_omega().dim(), 2);
    assert_eq!(t.c_omega(), &c_m_orthogonal(&s));
    let red = reduce_space(&t);
    assert_eq!(red.space(), &SymplecticSpace::standard(1));
}

#[test]
fn relation_dimensions_at_degree_two() {
    let s = build_space(trunc(2, 1));
    assert_eq!(l1(&s).relation().graph().dim(), 3);
    assert_eq!(l2(&s).relation().graph().dim(), 6);
    assert_eq!(l3(&s).relation().graph().dim(), 9);
}

#[test]
fn reductions_do_not_depend_on_degree() {
    for n in 1..=2 {
        let mut seen = None;
        for degree in 1..=4 {
            let s = build_space(trunc(degree, n));
            let t = c_m(&s);
            let r1 = reduce_lagrangian(&t, l1(&s).relation().graph()).unwrap();
            let t2 = t.opposite().direct_sum(&t);
            let r2 = reduce_lagrangian(&t2, l2(&s).relation().graph()).unwrap();
            let t3: SplittingCTriple = t.opposite().direct_sum(&t.opposite()).direct_sum(&t);
            let r3 = reduce_lagrangian(&t3, l3(&s).relation().graph()).unwrap();
            let current = (r1, r2, r3);
            if let Some(prev) = &seen {
                assert_eq!(prev, &current);
            }
            seen = Some(current);
        }
        let (r1, r2, r3) = seen.unwrap();
        assert_eq!(&r1, zero_section(n).relation().graph());
        assert_eq!(
            &r2,
            diagonal(&SymplecticSpace::standard(n)).relation().graph()
        );
        assert_eq!(&r3, fiber_addition(n).relation().graph());
    }
}

#[test]
fn decompositions_split_random_vectors() {
    let mut rng = common::rng(21);
    for degree in 1..=3 {
        let s = build_space(trunc(degree, 2));
        let (r2, r3) = (l2(&s), l3(&s));
        for _ in 0..10 {
            let w: Vec<Scalar> = (0..2 * s.dim())
                .map(|_| Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect();
            let (a, b) = l2_decomposition(&s, &w);
            assert!(r2.relation().graph().contains_vector(&a));
            assert!(r2.complement().contains_vector(&b));
            let w3: Vec<Scalar> = w.iter().chain(&w[..s.dim()]).cloned().collect();
            let (a, b) = l3_decomposition(&s, &w3);
            assert!(r3.relation().graph().contains_vector(&a));
            assert!(r3.complement().contains_vector(&b));
            let sum: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            assert_eq!(sum, w3);
        }
    }
}

#[test]
fn verify_reports_every_check_once() {
    for (degree, n) in [(1, 1), (2, 2), (3, 1)] {
        let report = verify_psm(trunc(degree, n));
        assert!(
            report.all_passed,
            "failures at N={degree}, n={n}: {:?}",
            report.failed()
        );
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, PSM_CHECKS);
        let d = report.dimensions;
        assert_eq!(d.dim_c, n * (degree + 2));
        assert_eq!(d.dim_c_omega, n * degree);
        assert_eq!(d.dim_reduced, 2 * n);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["all_passed"], true);
    }
}

#[test]
fn symplectic_target_has_no_faithful_truncation() {
    for degree in 1..=4 {
        let o = symplectic_target_obstruction(degree).unwrap();
        assert_eq!(o.dim_v, 4 * (degree + 1));
        assert_eq!(2 * o.dim_c, o.dim_v);
        assert!(!o.isotropic);
        assert!(!o.coisotropic);
        assert!(o.dim_c_cap_c_omega < o.dim_c);
    }
}

#[test]
fn truncation_rejects_degenerate_parameters() {
    assert!(PolyTruncation::new(0, 2).is_err());
    assert!(PolyTruncation::new(2, 0).is_err());
    assert!(symplectic_target_obstruction(0).is_err());
}
