//! JSON renderings of library results.
//!
//! Objects are built with `serde_json::Map`, which keeps keys sorted, so equal
//! inputs always serialize to equal bytes.

use fatpoint_core::syzygy::{
    DegreeRow, HarnessReport, HarnessRun, ImageReport, PairStatus, LineRow, RunStatus, SyzygyVector,
};
use fatpoint_core::systems::{GenericOutcome, IndexReport, IndexValue, ProbeOutcome, Verdict};
use fatpoint_core::witness::Check;
use fatpoint_core::{FatPointConfig, LinearSystemResult, MultiPoly, RingContext, Scalar};
use serde_json::{json, Value};

pub fn point(p: &[Scalar]) -> Value {
    Value::from(p.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn poly(p: &MultiPoly) -> Value {
    Value::from(RingContext::standard(p.nvars(), p.field()).format(p))
}

pub fn config_summary(z: &FatPointConfig) -> Value {
    json!({
        "label": z.label(),
        "ambient_dim": z.ambient_dim(),
        "field": z.field().name(),
        "points": z.len(),
        "conditions": z.condition_count(),
    })
}

pub fn linear_system(r: &LinearSystemResult, kernel: bool) -> Value {
    let mut v = json!({
        "degree": r.degree,
        "monomials": r.monomial_count,
        "condition_rows": r.condition_rows,
        "conditions_rank": r.conditions_rank,
        "vdim_actual": r.vdim_actual,
        "pdim_actual": r.pdim_actual,
        "edim": r.edim,
        "special": r.special,
    });
    if kernel {
        let n = nvars_for(r);
        let field = r.kernel.vectors.first().and_then(|v| v.first()).map(Scalar::field);
        let polys = match field {
            Some(f) => r.kernel_polys(n, f).iter().map(poly).collect(),
            None => Vec::new(),
        };
        v["kernel"] = Value::from(polys);
    }
    v
}

/// Number of variables whose degree-`d` monomial count matches the result.
fn nvars_for(r: &LinearSystemResult) -> usize {
    (1..64)
        .find(|&n| fatpoint_core::mpoly::monomial_basis(n, r.degree).len() == r.monomial_count)
        .unwrap_or(1)
}

fn generic(g: &GenericOutcome) -> Value {
    json!({
        "stable": g.stable,
        "trials": g.trials.iter().map(|t| json!({
            "seed": t.seed,
            "point": point(&t.point),
            "vdim": t.vdim,
        })).collect::<Vec<_>>(),
        "system": linear_system(&g.result, false),
    })
}

pub fn probe(p: &ProbeOutcome) -> Value {
    json!({
        "verdict": match p.verdict {
            Verdict::Unexpected => "unexpected",
            Verdict::NotUnexpected => "not-unexpected",
        },
        "edim": p.edim,
        "vdim_actual": p.generic.result.vdim_actual,
        "pdim_actual": p.generic.result.pdim_actual,
        "generic": generic(&p.generic),
    })
}

pub fn index_value(v: IndexValue) -> Value {
    match v {
        IndexValue::Found(j) => json!({ "found": true, "value": j }),
        IndexValue::NotFound { jmax } => json!({ "found": false, "searched_up_to": jmax }),
    }
}

pub fn indices(r: &IndexReport) -> Value {
    json!({
        "multiplicity_index": index_value(r.multiplicity_index),
        "speciality_index": {
            "strict": index_value(r.speciality_index_strict),
            "clamped": index_value(r.speciality_index_clamped),
        },
        "stable": r.stable,
        "trials": r.trials,
        "seeds": r.seeds,
        "rows": r.rows.iter().map(|row| json!({
            "j": row.j,
            "degree": row.degree,
            "vdim": row.vdim,
            "trial_vdims": row.trial_vdims,
            "stable": row.stable,
            "independent_count": row.independent_count,
            "independent_strict": row.independent_strict,
            "independent_clamped": row.independent_clamped,
        })).collect::<Vec<_>>(),
    })
}

pub fn checks(cs: &[Check]) -> Value {
    let failed = cs.iter().filter(|c| !c.passed).count();
    json!({
        "passed": failed == 0,
        "failed": failed,
        "total": cs.len(),
        "checks": cs.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "informational": c.informational,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn pair_status(s: PairStatus) -> &'static str {
    s.name()
}

fn sweep(rows: &[DegreeRow]) -> Value {
    rows.iter()
        .map(|r| json!({ "t": r.t, "raw_dim": r.raw_dim, "nontrivial_dim": r.nontrivial_dim }))
        .collect::<Vec<_>>()
        .into()
}

fn syzygy(v: &SyzygyVector) -> Value {
    json!({
        "degree": v.degree,
        "components": v.components.iter().map(poly).collect::<Vec<_>>(),
    })
}

fn lines(row: &LineRow) -> Value {
    json!({
        "index": row.index,
        "point": point(&row.point),
        "holds": row.holds(),
        "skipped": row.skipped,
        "samples": row.samples.iter().map(|s| json!({
            "q": point(&s.q),
            "sigma": point(&s.sigma),
            "sigma_prime": point(&s.sigma_prime),
            "sigma_on_plane": s.sigma_on_plane,
            "sigma_prime_on_plane": s.sigma_prime_on_plane,
            "phi": s.phi.as_deref().map(point),
            "phi_is_dual_point": s.phi_is_dual_point,
        })).collect::<Vec<_>>(),
    })
}

fn image(im: &ImageReport) -> Value {
    json!({
        "sampled": im.sampled,
        "distinct_images": im.distinct_images,
        "degenerate_samples": im.degenerate_samples,
        "degree": im.degree,
        "surfaces_in_degree": im.surfaces_in_degree,
        "surface": im.surface.as_ref().map(poly),
        "unexpected_shape": im.has_unexpected_shape(),
        "incidence": im.incidence.iter().map(|r| json!({
            "label": r.label,
            "point": point(&r.point),
            "order": r.order,
            "required": r.required,
        })).collect::<Vec<_>>(),
    })
}

fn run(r: &HarnessRun) -> Value {
    let status = match r.status {
        RunStatus::Complete => "complete".to_owned(),
        RunStatus::NoPair(s) => format!("no-pair ({})", pair_status(s)),
        RunStatus::DegeneratePhi => "degenerate-phi".to_owned(),
    };
    json!({
        "seed": r.seed,
        "plane": point(&r.line),
        "status": status,
        "pair_status": pair_status(r.pair_status),
        "syzygy_degree": r.syzygy_degree,
        "second_degree": r.second_degree,
        "sweep": sweep(&r.sweep),
        "first": r.first.as_ref().map(syzygy),
        "second": r.second.as_ref().map(syzygy),
        "koszul_trivial": r.koszul_trivial.map(|(a, b)| json!([a, b])),
        "lines_hold": r.lines_hold(),
        "lines": r.lines.iter().map(lines).collect::<Vec<_>>(),
        "independence": r.independence.as_ref().map(|c| json!({
            "sampled": c.sampled,
            "independent": c.independent,
            "proportional": c.proportional,
            "undefined": c.undefined,
            "holds_at_samples": c.holds_at_samples(),
        })),
        "plane_hits": r.plane_hits.as_ref().map(|c| json!({
            "sigma_preserves_plane": c.sigma_preserves_plane,
            "sigma_prime_preserves_plane": c.sigma_prime_preserves_plane,
            "sampled": c.sampled,
            "hits": c.hits,
            "hits_mapped_to_p": c.hits_mapped_to_p,
            "collinear_hits": c.collinear_hits,
            "holds_at_hits": c.holds_at_hits(),
        })),
        "image": r.image.as_ref().map(image),
    })
}

pub fn harness(h: &HarnessReport) -> Value {
    json!({
        "label": h.label,
        "points": h.points,
        "f_degree": h.f_degree,
        "multiplicity_index": index_value(h.multiplicity_index),
        "speciality_index": {
            "strict": index_value(h.speciality_index_strict),
            "clamped": index_value(h.speciality_index_clamped),
        },
        "pair_found_everywhere": h.pair_found_everywhere(),
        "lines_hold_everywhere": h.lines_hold_everywhere(),
        "runs": h.runs.iter().map(run).collect::<Vec<_>>(),
    })
}
