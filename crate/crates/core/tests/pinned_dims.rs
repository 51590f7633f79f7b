//! Regression constants for cohomology dimensions on the fixture corpus,
//! with cocycle/coboundary ranks re-derived through the independent
//! fraction-free elimination oracle.

mod common;

use common::{bareiss_rank, sl2_lts, t2, zero_lts};
use ltscalc::cochain_complex::{
    cochain_space_basis, cohomology_dim, delta_matrix_on, is_3_cocycle, is_5_cocycle,
    yamaguti_delta,
};
use ltscalc::exact_linalg::{Field, Scalar};
use ltscalc::lts_core::LieTripleSystem;
use ltscalc::representation::{adjoint_rep, Representation};

/// Assert pinned (cochain space, cocycles, coboundaries, dim) for a degree
/// and cross-check the two ranks through the Bareiss path.
fn check(
    t: &LieTripleSystem,
    rep: &Representation,
    degree: usize,
    pinned: (usize, usize, usize, usize),
) {
    let report = cohomology_dim(t, rep, degree).unwrap();
    assert_eq!(
        (
            report.cochain_space_dim,
            report.cocycle_dim,
            report.coboundary_dim,
            report.dim
        ),
        pinned,
        "degree {}",
        degree
    );

    // Representatives are genuine cocycles of their degree.
    for r in &report.representatives {
        let closed = match degree {
            1 => yamaguti_delta(t, rep, r).unwrap().is_zero(),
            3 => is_3_cocycle(t, rep, r).unwrap(),
            _ => is_5_cocycle(t, rep, r).unwrap(),
        };
        assert!(closed, "representative not closed at degree {}", degree);
    }

    let level = (degree - 1) / 2;
    let cons = cochain_space_basis(t, rep.dim_v(), level).unwrap();
    let mat = delta_matrix_on(t, rep, &cons, yamaguti_delta).unwrap();
    let cocycles: Vec<Vec<Scalar>> = mat
        .kernel_basis()
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![t.field().zero(); cons[0].as_flat().len()];
            for (ci, a) in coeffs.iter().enumerate() {
                for (slot, s) in cons[ci].as_flat().iter().enumerate() {
                    v[slot] = v[slot].add_ref(&s.mul_ref(a));
                }
            }
            v
        })
        .collect();
    assert_eq!(bareiss_rank(&cocycles), pinned.1, "cocycle rank differs");
    if level > 0 {
        let lower = cochain_space_basis(t, rep.dim_v(), level - 1).unwrap();
        let boundaries: Vec<Vec<Scalar>> = lower
            .iter()
            .map(|b| yamaguti_delta(t, rep, b).unwrap().as_flat().to_vec())
            .collect();
        assert_eq!(bareiss_rank(&boundaries), pinned.2, "boundary rank differs");
    }
}

#[test]
fn t2_adjoint_dims() {
    let t = t2();
    let rep = adjoint_rep(&t);
    check(&t, &rep, 1, (4, 2, 0, 2));
    check(&t, &rep, 3, (4, 3, 2, 1));
    check(&t, &rep, 5, (16, 5, 1, 4));
}

#[test]
fn sl2_adjoint_dims() {
    let t = sl2_lts();
    let rep = adjoint_rep(&t);
    check(&t, &rep, 1, (9, 3, 0, 3));
    check(&t, &rep, 3, (24, 6, 6, 0));
    check(&t, &rep, 5, (216, 20, 18, 2));
}

#[test]
fn zero2_trivial_rep_dims() {
    let t = zero_lts(2);
    let rep = Representation::zero(Field::Rational, 2, 1);
    check(&t, &rep, 1, (2, 2, 0, 2));
    check(&t, &rep, 3, (2, 2, 0, 2));
    check(&t, &rep, 5, (8, 8, 0, 8));
}
