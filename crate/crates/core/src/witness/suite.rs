//! Named groups of checks, as run by the command-line verifier.

use alloc::string::String;
use alloc::vec::Vec;

use super::*;
use crate::exact::random_point_bounded;
use crate::syzygy::{
    conjecture_harness, dual_linear_form, dual_plane_product, phi_plane, syzygies_in_degree, syzygy_matrix,
    GeneratorList, HarnessOptions, HarnessRun, PlaneOutcome,
};
use crate::systems::{linear_system, unexpectedness_probe, Verdict, MIN_TRIALS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Section {
    B3,
    Dual2,
    Fermat,
    Theorem1,
    Param,
    Syzygy,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::B3,
        Section::Dual2,
        Section::Fermat,
        Section::Theorem1,
        Section::Param,
        Section::Syzygy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::B3 => "b3",
            Section::Dual2 => "dual2",
            Section::Fermat => "fermat",
            Section::Theorem1 => "theorem1",
            Section::Param => "param",
            Section::Syzygy => "syzygy",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

pub const PLANE_SAMPLES: usize = 20;
pub const SPACE_SAMPLES: usize = 10;
pub const PARAM_SAMPLES: usize = 20;
pub const DEGENERATION_SAMPLES: usize = 5;
pub const BASE_PROBES: usize = 100;
pub const PHI_TRIPLES: usize = 100;

/// Merge per-sample check lists into one check per name.
fn merge(name_prefix: &str, runs: Vec<(String, Vec<Check>)>) -> Vec<Check> {
    let mut merged: Vec<Check> = Vec::new();
    for (label, checks) in runs {
        for c in checks {
            let name = alloc::format!("{name_prefix}.{}", c.name);
            match merged.iter_mut().find(|m| m.name == name) {
                Some(m) => {
                    if !c.passed && m.passed {
                        m.passed = false;
                        m.detail = alloc::format!("first failure at {label}: {}", c.detail);
                    }
                }
                None => {
                    let detail = if c.passed {
                        String::from("all samples")
                    } else {
                        alloc::format!("first failure at {label}: {}", c.detail)
                    };
                    merged.push(Check::new(name, c.passed, detail));
                }
            }
        }
    }
    merged
}

fn fmt_point(p: &[Scalar]) -> String {
    let parts: Vec<String> = p.iter().map(|s| alloc::format!("{s}")).collect();
    alloc::format!("({})", parts.join(":"))
}

fn probe_check(name: &str, z: &FatPointConfig, rng: &mut Rng) -> Result<Check> {
    let out = unexpectedness_probe(z, 4, 3, MIN_TRIALS, rng)?;
    let r = &out.generic.result;
    Ok(Check::new(
        name,
        out.verdict == Verdict::Unexpected && r.vdim_actual >= 1 && out.edim == -1 && out.generic.stable,
        alloc::format!("vdim {} edim {} stable {}", r.vdim_actual, out.edim, out.generic.stable),
    ))
}

pub fn run_section(section: Section, rng: &mut Rng) -> Result<Vec<Check>> {
    match section {
        Section::B3 => b3_section(rng),
        Section::Dual2 => dual2_section(rng),
        Section::Fermat => fermat_section(),
        Section::Theorem1 => theorem1_section(rng),
        Section::Param => param_section(rng),
        Section::Syzygy => syzygy_section(rng),
    }
}

fn b3_section(rng: &mut Rng) -> Result<Vec<Check>> {
    let z = b3_config();
    let sys = linear_system(&z, 4)?;
    let m = conditions_matrix(&z, 4);
    let mut checks = alloc::vec![
        Check::new("b3.point_count", z.len() == 9, alloc::format!("{} points", z.len())),
        Check::new(
            "b3.independent_conditions",
            m.rank() == 9 && oracle_rank(&m) == 9 && (m.rows(), m.cols()) == (9, 15),
            alloc::format!("{}x{} matrix of rank {}", m.rows(), m.cols(), m.rank()),
        ),
        Check::new("b3.quartic_dimension", sys.vdim_actual == 6, alloc::format!("vdim {}", sys.vdim_actual)),
    ];
    let mut runs = Vec::new();
    for _ in 0..PLANE_SAMPLES {
        let r = random_point(rng, 2, Field::Rational);
        runs.push((fmt_point(&r), plane_quartic_checks(&r)?));
    }
    checks.extend(merge("b3.quartic", runs));
    checks.push(probe_check("b3.unexpected_triple_point", &z, rng)?);
    Ok(checks)
}

fn dual2_section(rng: &mut Rng) -> Result<Vec<Check>> {
    let dual = dual_triple_point_check(DualForm::PlaneCubic)?;
    let nonzero = dual.second_order.iter().filter(|p| !p.is_zero()).count();
    let degen = dual_degenerations(DEGENERATION_SAMPLES, rng)?;
    let zero_rows = degen.config_rows.iter().filter(|r| r.cubic.is_zero()).count();
    let good_others = degen
        .other_rows
        .iter()
        .filter(|r| !r.cubic.is_zero() && r.triple_point)
        .count();
    let probes = base_locus_probe(BASE_PROBES, rng)?;
    let stuck: Vec<String> = probes
        .iter()
        .filter(|p| p.witness.is_none())
        .map(|p| fmt_point(&p.point))
        .collect();
    Ok(alloc::vec![
        Check::new("dual2.same_form", dual.matches_quartic, "dual cubic equals the quartic family"),
        Check::new(
            "dual2.triple_point_on_diagonal",
            dual.passed(),
            alloc::format!("{} second partials, {nonzero} nonzero residues", dual.second_order.len()),
        ),
        Check::new(
            "dual2.vanishes_identically_at_config",
            zero_rows == degen.config_rows.len(),
            alloc::format!("{zero_rows} of {} cubics are zero", degen.config_rows.len()),
        ),
        Check::new(
            "dual2.nonzero_elsewhere",
            good_others == degen.other_rows.len(),
            alloc::format!("{good_others} of {} other cubics nonzero with a triple point", degen.other_rows.len()),
        ),
        Check::new(
            "dual2.no_base_points",
            stuck.is_empty(),
            alloc::format!("{} probes, unresolved {stuck:?}", probes.len()),
        ),
    ])
}

fn fermat_section() -> Result<Vec<Check>> {
    let w = fermat_w_config();
    let gens = fermat_generators(w.field());
    let mut fermat_ok = true;
    for p in &w.points()[..27] {
        for g in &gens {
            fermat_ok &= g.evaluate(&p.coords)?.is_zero();
        }
    }
    let l = lemma1_check()?;
    Ok(alloc::vec![
        Check::new("fermat.point_count", w.len() == 31, alloc::format!("{} points", w.len())),
        Check::new("fermat.cubics_vanish", fermat_ok, "on the 27 non-coordinate points"),
        Check::new(
            "fermat.binomials_vanish",
            l.vanishing_failures.is_empty(),
            alloc::format!("failures {:?}", l.vanishing_failures),
        ),
        Check::new(
            "fermat.binomials_independent",
            l.coefficient_rank == 8,
            alloc::format!("rank {}", l.coefficient_rank),
        ),
        Check::new(
            "fermat.evaluation_rank",
            l.evaluation_rank == 27 && l.evaluation_oracle_rank == 27,
            alloc::format!(
                "{}x{} rank {} oracle {}",
                l.evaluation_rows, l.evaluation_cols, l.evaluation_rank, l.evaluation_oracle_rank
            ),
        ),
        Check::new(
            "fermat.quartics_spanned",
            l.kernel_dim == 8 && l.spans_kernel,
            alloc::format!("kernel dim {}", l.kernel_dim),
        ),
    ])
}

fn theorem1_section(rng: &mut Rng) -> Result<Vec<Check>> {
    let w = fermat_w_config();
    let mut runs = Vec::new();
    while runs.len() < SPACE_SAMPLES {
        let r = random_point(rng, 3, Field::Rational);
        let re: Vec<Scalar> = r.iter().map(|s| s.embed(Field::Eisenstein)).collect::<Result<_>>()?;
        if w.points().iter().any(|p| projectively_equal(&p.coords, &re)) {
            continue;
        }
        runs.push((fmt_point(&r), space_quartic_checks(&r)?));
    }
    let mut checks = merge("theorem1.quartic", runs);
    checks.push(probe_check("theorem1.unexpected_triple_point", &w, rng)?);
    let dual = dual_triple_point_check(DualForm::SpaceQuintic)?;
    let nonzero = dual.second_order.iter().filter(|p| !p.is_zero()).count();
    checks.push(Check::new("theorem1.dual_same_form", dual.matches_quartic, "dual quintic equals the quartic family"));
    checks.push(Check::new(
        "theorem1.dual_triple_point_on_diagonal",
        dual.passed(),
        alloc::format!("{} second partials, {nonzero} nonzero residues", dual.second_order.len()),
    ));
    Ok(checks)
}

/// A random parameter point accepted by [`build_parametrization`], off the
/// three lines where the coordinates cancel in pairs. On those lines the
/// known points of `gamma` are closed under chords and no new points appear.
pub fn random_param_point(rng: &mut Rng) -> Vec<Scalar> {
    loop {
        let r = random_point_bounded(rng, 3, Field::Rational, 9);
        if !cancels_in_pairs(&r) && build_parametrization(&r).is_ok() {
            return r;
        }
    }
}

fn cancels_in_pairs(r: &[Scalar]) -> bool {
    let zero = |i: usize, j: usize| (&r[i] + &r[j]).is_zero();
    (zero(0, 1) && zero(2, 3)) || (zero(0, 2) && zero(1, 3)) || (zero(0, 3) && zero(1, 2))
}

fn param_section(rng: &mut Rng) -> Result<Vec<Check>> {
    let fixed = int_coords(&[1, 2, 3, 5], Field::Rational);
    let outcomes = reading_validation(&fixed)?;
    let passing: Vec<&str> = outcomes
        .iter()
        .filter(|o| o.passed())
        .map(|o| o.resolution.label())
        .collect();
    let mut checks = alloc::vec![Check::new(
        "param.reading_validation",
        passing == [VALIDATED_RESOLUTION.label()],
        alloc::format!("readings passing at (1:2:3:5): {passing:?}"),
    )];
    let mut runs = Vec::new();
    for _ in 0..PARAM_SAMPLES {
        let r = random_param_point(rng);
        let bundle = build_parametrization(&r)?;
        runs.push((fmt_point(&r), verify_parametrization(&bundle, rng)?.checks));
    }
    checks.extend(merge("param", runs));
    Ok(checks)
}

fn index_text(v: crate::systems::IndexValue) -> String {
    match v {
        crate::systems::IndexValue::Found(j) => alloc::format!("{j}"),
        crate::systems::IndexValue::NotFound { jmax } => alloc::format!("not found up to {jmax}"),
    }
}

fn run_gens(z: &FatPointConfig, run: &HarnessRun) -> Result<GeneratorList> {
    GeneratorList::jacobian_plus_line(&dual_plane_product(z)?, &dual_linear_form(&run.line)?)
}

/// Planes through random triples contain all three points.
pub fn phi_annihilation(triples: usize, rng: &mut Rng) -> Result<(usize, usize)> {
    let (mut planes, mut good) = (0, 0);
    for _ in 0..triples {
        let pts: Vec<Vec<Scalar>> = (0..3).map(|_| random_point(rng, 3, Field::Rational)).collect();
        if let PlaneOutcome::Plane(c) = phi_plane(&pts[0], &pts[1], &pts[2])? {
            planes += 1;
            let l = dual_linear_form(&c)?;
            if pts.iter().map(|q| l.evaluate(q)).collect::<Result<Vec<_>>>()?.iter().all(Scalar::is_zero) {
                good += 1;
            }
        }
    }
    Ok((planes, good))
}

fn syzygy_section(rng: &mut Rng) -> Result<Vec<Check>> {
    let z = coord4plus_config();
    let opts = HarnessOptions::default();
    let report = conjecture_harness(&z, &opts, rng)?;
    let degrees: Vec<String> = report
        .runs
        .iter()
        .map(|r| alloc::format!("{} ({:?}/{:?})", r.pair_status.name(), r.syzygy_degree, r.second_degree))
        .collect();
    let mut exact = true;
    let mut consistent = true;
    for run in &report.runs {
        let gens = run_gens(&z, run)?;
        for v in run.first.iter().chain(&run.second) {
            exact &= v.is_syzygy_of(&gens)?;
        }
        for row in &run.sweep {
            let (m, _) = syzygy_matrix(&gens, row.t)?;
            let direct = syzygies_in_degree(&gens, row.t)?.len();
            consistent &= direct == row.raw_dim && direct == m.cols() - oracle_rank(&m);
        }
    }
    let samples: usize = report.runs.iter().flat_map(|r| &r.lines).map(|r| r.samples.len()).sum();
    let collinear: usize = report.runs.iter().flat_map(|r| &r.lines).map(|r| r.collinear()).sum();
    let (planes, good) = phi_annihilation(PHI_TRIPLES, rng)?;
    let mut checks = alloc::vec![
        Check::new(
            "syzygy.pair_found",
            report.pair_found_everywhere(),
            alloc::format!("tmax {} runs {degrees:?}", opts.tmax),
        ),
        Check::new("syzygy.pair_is_exact", exact, "sum s_i g_i = 0 for every returned vector"),
        Check::new(
            "syzygy.dimension_consistency",
            consistent,
            "kernel basis size matches columns minus oracle rank at every swept degree",
        ),
        Check::new(
            "syzygy.line_property",
            report.lines_hold_everywhere(),
            alloc::format!("{samples} sampled points on the lines l ∩ l_i, {collinear} with a collinear triple"),
        ),
        Check::new(
            "syzygy.phi_annihilates_triples",
            good == planes && planes > 0,
            alloc::format!("{good} of {planes} planes from {PHI_TRIPLES} triples"),
        ),
        Check::info(
            "syzygy.indices",
            alloc::format!(
                "m_Z {} u_Z strict {} clamped {}",
                index_text(report.multiplicity_index),
                index_text(report.speciality_index_strict),
                index_text(report.speciality_index_clamped)
            ),
        ),
    ];
    for (k, run) in report.runs.iter().enumerate() {
        let mut detail = alloc::format!("plane {} koszul {:?}", fmt_point(&run.line), run.koszul_trivial);
        if let Some(cb) = &run.independence {
            detail += &alloc::format!("; independent at {} of {} points", cb.independent, cb.sampled);
        }
        if let Some(hits) = &run.plane_hits {
            detail += &alloc::format!("; {} of {} points with both images on l", hits.hits, hits.sampled);
        }
        if let Some(im) = &run.image {
            match im.degree {
                Some(e) => {
                    let orders: Vec<String> = im.incidence.iter().map(|r| alloc::format!("{}:{}", r.label, r.order)).collect();
                    detail += &alloc::format!(
                        "; image in degree {e} ({} surfaces) orders {}",
                        im.surfaces_in_degree,
                        orders.join(" ")
                    );
                }
                None => detail += "; no image surface up to the bound",
            }
        }
        checks.push(Check::info(alloc::format!("syzygy.run{}", k + 1), detail));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_names_round_trip() {
        for s in Section::ALL {
            assert_eq!(Section::from_name(s.name()), Some(s));
        }
        assert_eq!(Section::from_name("all"), None);
    }

    #[test]
    fn merge_keeps_first_failure() {
        let runs = alloc::vec![
            ("s1".into(), alloc::vec![Check::new("a", true, "")]),
            ("s2".into(), alloc::vec![Check::new("a", false, "bad")]),
            ("s3".into(), alloc::vec![Check::new("a", false, "worse")]),
        ];
        let m = merge("p", runs);
        assert_eq!(m.len(), 1);
        assert!(!m[0].passed);
        assert_eq!(m[0].detail, "first failure at s2: bad");
    }

    #[test]
    fn parameter_points_avoid_cancelling_pairs() {
        let f = Field::Rational;
        assert!(cancels_in_pairs(&int_coords(&[-7, 7, 4, -4], f)));
        assert!(cancels_in_pairs(&int_coords(&[1, 4, -4, -1], f)));
        assert!(!cancels_in_pairs(&int_coords(&[1, -1, 2, 3], f)));
        let mut rng = Rng::new(0);
        for _ in 0..50 {
            assert!(!cancels_in_pairs(&random_param_point(&mut rng)));
        }
    }

    #[test]
    fn phi_planes_contain_their_triples() {
        let (planes, good) = phi_annihilation(PHI_TRIPLES, &mut Rng::new(4)).unwrap();
        assert_eq!(planes, good);
        assert!(planes > 90);
    }

    #[test]
    fn fermat_section_passes() {
        assert!(all_passed(&fermat_section().unwrap()));
    }
}
