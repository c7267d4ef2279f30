//! Dimensions recomputed from scratch: monomials evaluated one by one and
//! ranked by plain Gaussian elimination, without the conditions matrix.

use fatpoint_core::exact::{int_coords, random_point, Rng};
use fatpoint_core::linalg::oracle_rank;
use fatpoint_core::mpoly::monomial_basis;
use fatpoint_core::systems::{expected_dim, linear_system, unexpectedness_probe, FatPoint, Verdict};
use fatpoint_core::witness::{b3_config, fermat_w_config};
use fatpoint_core::{ExactMatrix, FatPointConfig, Field, MultiPoly, Scalar};
use proptest::prelude::*;

/// Rank of the conditions "every partial of order < m vanishes at p", built by
/// differentiating each monomial symbolically.
fn brute_force_rank(z: &FatPointConfig, degree: u32) -> usize {
    let n = z.nvars();
    let field = z.field();
    let monos = monomial_basis(n, degree);
    let mut rows = Vec::new();
    for p in z.points() {
        for order in 0..p.mult {
            for alpha in monomial_basis(n, order) {
                let row: Vec<Scalar> = monos
                    .iter()
                    .map(|m| {
                        MultiPoly::term(m.clone(), Scalar::one(field))
                            .derivative(alpha.exponents())
                            .evaluate(&p.coords)
                            .unwrap()
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    oracle_rank(&ExactMatrix::from_rows(rows, monos.len(), field).unwrap())
}

fn brute_force_vdim(z: &FatPointConfig, degree: u32) -> usize {
    monomial_basis(z.nvars(), degree).len() - brute_force_rank(z, degree)
}

#[test]
fn b3_quartics() {
    let z = b3_config();
    assert_eq!(brute_force_rank(&z, 4), 9);
    assert_eq!(brute_force_vdim(&z, 4), 6);
    assert_eq!(linear_system(&z, 4).unwrap().vdim_actual, 6);
}

#[test]
fn fermat_quartics() {
    let w = fermat_w_config();
    assert_eq!(brute_force_rank(&w, 4), 27);
    let r = linear_system(&w, 4).unwrap();
    assert_eq!(r.vdim_actual, 8);
    assert!(r.special);
}

#[test]
fn three_general_points_and_a_double_point() {
    let mut rng = Rng::new(5);
    let pts: Vec<FatPoint> = (0..3).map(|_| FatPoint::simple(random_point(&mut rng, 2, Field::Rational))).collect();
    let z = FatPointConfig::new(2, Field::Rational, pts, "three").unwrap();
    let probe = unexpectedness_probe(&z, 2, 2, 3, &mut rng).unwrap();
    assert_eq!(probe.verdict, Verdict::NotUnexpected);
    assert_eq!(probe.generic.result.vdim_actual, 0);
    let with_p = z
        .with_point(FatPoint::new(probe.generic.trials[0].point.clone(), 2))
        .unwrap();
    assert_eq!(brute_force_vdim(&with_p, 2), 0);
    assert_eq!(expected_dim(2, 2, &[1, 1, 1, 2]), -1);
}

#[test]
fn b3_with_a_general_triple_point() {
    let z = b3_config();
    let p = int_coords(&[7, -11, 13], Field::Rational);
    let cfg = z.with_point(FatPoint::new(p, 3)).unwrap();
    assert_eq!(brute_force_vdim(&cfg, 4), 1);
    assert_eq!(linear_system(&cfg, 4).unwrap().vdim_actual, 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn linear_system_matches_brute_force(
        seed in any::<u64>(),
        n in 1usize..4,
        npts in 0usize..5,
        degree in 0u32..4,
        mults in proptest::collection::vec(1u32..4, 5),
    ) {
        let mut rng = Rng::new(seed);
        let mut pts: Vec<FatPoint> = Vec::new();
        for m in mults.into_iter().take(npts) {
            let p = FatPoint::new(random_point(&mut rng, n, Field::Rational), m);
            if pts.iter().all(|q| !fatpoint_core::exact::projectively_equal(&q.coords, &p.coords)) {
                pts.push(p);
            }
        }
        let z = FatPointConfig::new(n, Field::Rational, pts, "").unwrap();
        let r = linear_system(&z, degree).unwrap();
        prop_assert_eq!(r.vdim_actual, brute_force_vdim(&z, degree));
        prop_assert!(r.pdim_actual >= r.edim);
    }
}
