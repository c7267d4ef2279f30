use fatpoint_core::exact::{random_point, Rng};
use fatpoint_core::mpoly::random_homogeneous;
use fatpoint_core::syzygy::{
    conjecture_harness, koszul_syzygies, phi_plane, syzygies_in_degree, GeneratorList, HarnessOptions, PlaneOutcome,
    RunStatus,
};
use fatpoint_core::witness::{coord4plus_config, phi_annihilation};
use fatpoint_core::{Field, Scalar};
use proptest::prelude::*;

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(a[0].field()), |acc, (x, y)| &acc + &(x * y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kernel_vectors_are_relations(seed in any::<u64>(), d1 in 1u32..3, d2 in 1u32..3, d3 in 1u32..3, t in 2u32..5) {
        let mut rng = Rng::new(seed);
        let gens: Vec<_> = [d1, d2, d3].iter().map(|&d| random_homogeneous(&mut rng, 3, d, Field::Rational, 3)).collect();
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let list = GeneratorList::from_polys(gens).unwrap();
        let syz = syzygies_in_degree(&list, t).unwrap();
        for v in &syz {
            prop_assert_eq!(v.degree, t);
            prop_assert!(v.is_syzygy_of(&list).unwrap());
        }
        // Koszul relations live in the same space, so there are at least as many.
        for k in koszul_syzygies(&list, t) {
            prop_assert!(k.is_syzygy_of(&list).unwrap());
        }
    }

    #[test]
    fn phi_plane_contains_its_points(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let q = random_point(&mut rng, 3, Field::Rational);
        let s = random_point(&mut rng, 3, Field::Rational);
        let s2 = random_point(&mut rng, 3, Field::Rational);
        match phi_plane(&q, &s, &s2).unwrap() {
            PlaneOutcome::Plane(h) => {
                prop_assert!(dot(&h, &q).is_zero());
                prop_assert!(dot(&h, &s).is_zero());
                prop_assert!(dot(&h, &s2).is_zero());
                prop_assert!(h.iter().any(|c| !c.is_zero()));
            }
            PlaneOutcome::Collinear => {}
        }
    }
}

#[test]
fn phi_degenerates_on_collinear_points() {
    let f = Field::Rational;
    let q = fatpoint_core::exact::int_coords(&[1, 0, 0, 0], f);
    let s = fatpoint_core::exact::int_coords(&[0, 1, 0, 0], f);
    let s2 = fatpoint_core::exact::int_coords(&[1, 1, 0, 0], f);
    assert_eq!(phi_plane(&q, &s, &s2).unwrap(), PlaneOutcome::Collinear);
}

#[test]
fn phi_annihilates_sampled_triples() {
    let (planes, good) = phi_annihilation(50, &mut Rng::new(4)).unwrap();
    assert!(planes > 0);
    assert_eq!(planes, good);
}

#[test]
fn harness_on_coordinate_points() {
    let z = coord4plus_config();
    let opts = HarnessOptions { runs: 1, ..HarnessOptions::default() };
    let a = conjecture_harness(&z, &opts, &mut Rng::new(9)).unwrap();
    assert_eq!(a.runs.len(), 1);
    assert!(a.pair_found_everywhere());
    assert!(a.lines_hold_everywhere());
    let run = &a.runs[0];
    assert_eq!(run.status, RunStatus::Complete);
    let first = run.first.as_ref().unwrap();
    let gens = GeneratorList::jacobian_plus_line(
        &fatpoint_core::syzygy::dual_plane_product(&z).unwrap(),
        &fatpoint_core::syzygy::dual_linear_form(&run.line).unwrap(),
    )
    .unwrap();
    assert!(first.is_syzygy_of(&gens).unwrap());
    let b = conjecture_harness(&z, &opts, &mut Rng::new(9)).unwrap();
    assert_eq!(a, b);
}
