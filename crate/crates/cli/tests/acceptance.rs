//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fatpoint_core::exact::{projectively_equal, random_point, Rng};
use fatpoint_core::linalg::oracle_rank;
use fatpoint_core::syzygy::{conjecture_harness, HarnessOptions};
use fatpoint_core::systems::{
    conditions_matrix, index_sweep, linear_system, unexpectedness_probe, FatPoint, IndexValue, Verdict, MIN_TRIALS,
};
use fatpoint_core::witness::{
    all_passed, b3_config, build_parametrization, coord4plus_config, dual_degenerations, dual_triple_point_check,
    fermat_w_config, lemma1_check, phi_annihilation, plane_quartic_checks, random_param_point, reading_validation,
    space_quartic_checks, verify_parametrization, DualForm, VALIDATED_RESOLUTION,
};
use fatpoint_core::{Field, Scalar};

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1() -> Outcome {
    let z = b3_config();
    let m = conditions_matrix(&z, 4);
    let vdim = linear_system(&z, 4).map_err(|e| e.to_string())?.vdim_actual;
    let (rank, oracle) = (m.rank(), oracle_rank(&m));
    ensure(
        (m.rows(), m.cols()) == (9, 15) && rank == 9 && oracle == 9 && vdim == 6,
        format!("{}x{} rank {rank} oracle {oracle} vdim {vdim}", m.rows(), m.cols()),
    )
}

fn c2() -> Outcome {
    let mut rng = Rng::new(2);
    let mut failed = Vec::new();
    for _ in 0..20 {
        let r = random_point(&mut rng, 2, Field::Rational);
        let checks = plane_quartic_checks(&r).map_err(|e| e.to_string())?;
        if !all_passed(&checks) {
            failed.push(r);
        }
    }
    let probe = unexpectedness_probe(&b3_config(), 4, 3, MIN_TRIALS, &mut rng).map_err(|e| e.to_string())?;
    let vdim = probe.generic.result.vdim_actual;
    ensure(
        failed.is_empty() && probe.verdict == Verdict::Unexpected && vdim == 1 && probe.edim == -1,
        format!("20 quartics, {} failed; probe vdim {vdim} edim {}", failed.len(), probe.edim),
    )
}

fn c3() -> Outcome {
    let dual = dual_triple_point_check(DualForm::PlaneCubic).map_err(|e| e.to_string())?;
    let second_zero = dual.second_order.len() == 6 && dual.second_order.iter().all(|p| p.is_zero());
    let degen = dual_degenerations(5, &mut Rng::new(3)).map_err(|e| e.to_string())?;
    let config_zero = degen.config_rows.len() == 9 && degen.config_rows.iter().all(|r| r.cubic.is_zero());
    let random_nonzero = degen.other_rows.len() >= 6 && degen.other_rows.iter().all(|r| !r.cubic.is_zero());
    ensure(
        second_zero && config_zero && random_nonzero,
        format!(
            "{} second partials vanish: {second_zero}; zero at the nine points: {config_zero}; nonzero at {} others: {random_nonzero}",
            dual.second_order.len(),
            degen.other_rows.len()
        ),
    )
}

fn c4() -> Outcome {
    let l = lemma1_check().map_err(|e| e.to_string())?;
    ensure(
        l.passed() && (l.evaluation_rows, l.evaluation_cols) == (31, 35),
        format!(
            "vanishing failures {}, coefficient rank {}, {}x{} rank {} oracle {} kernel {}",
            l.vanishing_failures.len(),
            l.coefficient_rank,
            l.evaluation_rows,
            l.evaluation_cols,
            l.evaluation_rank,
            l.evaluation_oracle_rank,
            l.kernel_dim
        ),
    )
}

fn c5() -> Outcome {
    let w = fermat_w_config();
    let mut rng = Rng::new(5);
    let (mut tested, mut failed) = (0, 0);
    while tested < 10 {
        let r = random_point(&mut rng, 3, Field::Rational);
        let re: Vec<Scalar> = r.iter().map(|s| s.embed(Field::Eisenstein).unwrap()).collect();
        if w.points().iter().any(|p| projectively_equal(&p.coords, &re)) {
            continue;
        }
        tested += 1;
        if !all_passed(&space_quartic_checks(&r).map_err(|e| e.to_string())?) {
            failed += 1;
        }
    }
    let probe = unexpectedness_probe(&w, 4, 3, MIN_TRIALS, &mut rng).map_err(|e| e.to_string())?;
    let vdim = probe.generic.result.vdim_actual;
    ensure(
        failed == 0 && probe.verdict == Verdict::Unexpected && vdim >= 1 && probe.edim == -1,
        format!("{tested} quartics, {failed} failed; probe vdim {vdim} edim {}", probe.edim),
    )
}

fn c6() -> Outcome {
    let dual = dual_triple_point_check(DualForm::SpaceQuintic).map_err(|e| e.to_string())?;
    let zero = dual.second_order.iter().filter(|p| p.is_zero()).count();
    ensure(
        dual.second_order.len() == 10 && zero == 10,
        format!("{zero} of {} second partials vanish on the diagonal", dual.second_order.len()),
    )
}

fn c7() -> Outcome {
    let fixed = fatpoint_core::exact::int_coords(&[1, 2, 3, 5], Field::Rational);
    let passing: Vec<&str> = reading_validation(&fixed)
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|o| o.passed())
        .map(|o| o.resolution.label())
        .collect();
    let mut rng = Rng::new(7);
    let mut failed = Vec::new();
    for _ in 0..20 {
        let r = random_param_point(&mut rng);
        let bundle = build_parametrization(&r).map_err(|e| e.to_string())?;
        let report = verify_parametrization(&bundle, &mut rng).map_err(|e| e.to_string())?;
        if bundle.resolution != VALIDATED_RESOLUTION || !report.passed() {
            failed.push(r);
        }
    }
    ensure(
        passing == [VALIDATED_RESOLUTION.label()] && failed.is_empty(),
        format!("selected reading {passing:?}; 20 points, {} failed", failed.len()),
    )
}

fn c8() -> Outcome {
    let z = b3_config();
    let mut specials = Vec::new();
    let mut detail = String::new();
    for seed in 0..3u64 {
        let r = index_sweep(&z, 4, MIN_TRIALS, &mut Rng::new(seed)).map_err(|e| e.to_string())?;
        if r.multiplicity_index != IndexValue::Found(3) {
            return Err(format!("seed {seed}: multiplicity index {:?}", r.multiplicity_index));
        }
        for j in 1..=3u32 {
            let row = &r.rows[j as usize];
            let want_success = j == 3;
            if (row.vdim > 0) != want_success {
                return Err(format!("seed {seed}: j = {j} has vdim {}", row.vdim));
            }
            // Rebuild each trial point from its seed and rank by the oracle.
            for (&s, &v) in r.seeds.iter().zip(&row.trial_vdims) {
                let p = random_point(&mut Rng::new(s), 2, Field::Rational);
                let cfg = z.with_point(FatPoint::new(p, j)).map_err(|e| e.to_string())?;
                let m = conditions_matrix(&cfg, j + 1);
                if m.cols() - oracle_rank(&m) != v {
                    return Err(format!("seed {seed}: oracle disagrees at j = {j}"));
                }
            }
        }
        specials.push((r.speciality_index_strict, r.speciality_index_clamped));
        if seed == 0 {
            detail = format!(
                "m_Z = 3, u_Z strict {:?} clamped {:?}",
                r.speciality_index_strict, r.speciality_index_clamped
            );
        }
    }
    let stable = specials.windows(2).all(|w| w[0] == w[1]);
    ensure(stable, format!("{detail}, stable across 3 seeds: {stable}"))
}

fn c9() -> Outcome {
    let opts = HarnessOptions { tmax: 8, ..HarnessOptions::default() };
    let report = conjecture_harness(&coord4plus_config(), &opts, &mut Rng::new(0)).map_err(|e| e.to_string())?;
    let degrees: Vec<(Option<u32>, Option<u32>)> =
        report.runs.iter().map(|r| (r.syzygy_degree, r.second_degree)).collect();
    let below = degrees.iter().all(|d| matches!(d, (Some(a), Some(b)) if *a < 8 && *b < 8));
    let on_lines = report.lines_hold_everywhere();
    let (planes, good) = phi_annihilation(100, &mut Rng::new(9)).map_err(|e| e.to_string())?;
    ensure(
        below && report.pair_found_everywhere() && on_lines && planes > 0 && planes == good,
        format!("pair degrees {degrees:?}; line property holds on every l ∩ l_i: {on_lines}; {good} of {planes} planes contain their triples"),
    )
}

fn configs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn invoke(args: &[String]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fatpoint"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !matches!(out.status.code(), Some(0 | 2)) {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn c10() -> Outcome {
    let cfg = |name: &str| configs().join(name).display().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["dim".into(), cfg("b3.json"), "--degree".into(), "4".into(), "--kernel".into()],
        vec!["dim".into(), cfg("fermat_w.json"), "--degree".into(), "4".into()],
        vec!["unexpected".into(), cfg("b3.json"), "--degree".into(), "4".into(), "--mult".into(), "3".into(), "--seed".into(), "4".into()],
        vec!["indices".into(), cfg("b3.json"), "--jmax".into(), "5".into(), "--seed".into(), "4".into()],
        vec!["verify-paper".into(), "--section".into(), "all".into(), "--seed".into(), "4".into()],
        vec!["syzygy".into(), cfg("coord4plus.json"), "--runs".into(), "1".into(), "--seed".into(), "4".into()],
        vec!["export-config".into(), cfg("coord4plus.json")],
    ];
    let handles: Vec<_> = runs
        .into_iter()
        .map(|args| std::thread::spawn(move || -> Result<bool, String> { Ok(invoke(&args)? == invoke(&args)?) }))
        .collect();
    let mut same = 0;
    let total = handles.len();
    for h in handles {
        if h.join().map_err(|_| "thread panicked".to_string())?? {
            same += 1;
        }
    }
    ensure(same == total, format!("{same} of {total} commands byte-identical on rerun"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 10] = [
        (1, "b3 independence and dimension", c1, Duration::from_secs(1)),
        (2, "planar unexpected quartic", c2, Duration::from_secs(5)),
        (3, "dual cubic", c3, Duration::from_secs(5)),
        (4, "eight binomials", c4, Duration::from_secs(30)),
        (5, "space quartic family", c5, Duration::from_secs(60)),
        (6, "dual quintic", c6, Duration::from_secs(30)),
        (7, "parametrization", c7, Duration::from_secs(120)),
        (8, "indices", c8, Duration::from_secs(30)),
        (9, "syzygy harness", c9, Duration::from_secs(300)),
        (10, "determinism", c10, Duration::MAX),
    ];
    let mut failures = 0;
    for (n, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over the {budget:?} budget")),
            Err(d) => (false, d),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{} criterion {n:>2} {name}: {detail} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
