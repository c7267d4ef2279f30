//! Generic specialization: systems with an added general point.
//!
//! A "general" point is realized by a seeded random integer point. Each trial
//! seed gives one specialization; the rank is lower semicontinuous, so the
//! generic value is the maximal rank seen (minimal dimension). A generic
//! value is reported as stable only when at least [`MIN_TRIALS`] trials agree.

use alloc::vec::Vec;

use super::{expected_dim, linear_system, FatPoint, FatPointConfig, LinearSystemResult};
use crate::exact::{random_point, Rng, Scalar};
use crate::{binomial, Error, Result};

/// Minimum number of agreeing trials before a generic value is accepted.
pub const MIN_TRIALS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub seed: u64,
    /// The general point used in this trial; empty when no point was added.
    pub point: Vec<Scalar>,
    pub vdim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericOutcome {
    /// The maximal-rank specialization.
    pub result: LinearSystemResult,
    pub trials: Vec<TrialRecord>,
    /// All trials agree and there were at least [`MIN_TRIALS`] of them.
    pub stable: bool,
}

/// Draws the per-trial seeds used by every generic computation.
pub fn trial_seeds(rng: &mut Rng, trials: usize) -> Vec<u64> {
    (0..trials).map(|_| rng.next_u64()).collect()
}

/// Degree-`degree` forms through `z` plus a general point of multiplicity `mult`
/// (`mult == 0` adds nothing).
pub fn generic_system(z: &FatPointConfig, degree: u32, mult: u32, seeds: &[u64]) -> Result<GenericOutcome> {
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let mut best: Option<LinearSystemResult> = None;
    let mut trials = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let (cfg, point) = if mult == 0 {
            (z.clone(), Vec::new())
        } else {
            let mut rng = Rng::new(seed);
            loop {
                let point = random_point(&mut rng, z.ambient_dim(), z.field());
                // Redraw in the unlikely event the point is already in Z.
                if let Ok(cfg) = z.with_point(FatPoint::new(point.clone(), mult)) {
                    break (cfg, point);
                }
            }
        };
        let result = linear_system(&cfg, degree)?;
        trials.push(TrialRecord {
            seed,
            point,
            vdim: result.vdim_actual,
        });
        if best.as_ref().is_none_or(|b| result.vdim_actual < b.vdim_actual) {
            best = Some(result);
        }
    }
    let result = best.expect("at least one trial");
    let stable = trials.len() >= MIN_TRIALS && trials.iter().all(|t| t.vdim == result.vdim_actual);
    Ok(GenericOutcome { result, trials, stable })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unexpected,
    NotUnexpected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    pub generic: GenericOutcome,
    /// Expected projective dimension counting Z and the general point naively.
    pub edim: i64,
    pub verdict: Verdict,
}

/// Is `L(d; Z, m P)` special for a general point `P`?
pub fn unexpectedness_probe(z: &FatPointConfig, degree: u32, mult: u32, trials: usize, rng: &mut Rng) -> Result<ProbeOutcome> {
    if mult < 2 {
        return Err(Error::InvalidArgument("the general point needs multiplicity at least 2".into()));
    }
    let seeds = trial_seeds(rng, trials);
    let generic = generic_system(z, degree, mult, &seeds)?;
    let mut mults = z.mults();
    mults.push(mult);
    let edim = expected_dim(z.ambient_dim(), degree, &mults);
    let verdict = if generic.result.pdim_actual > edim {
        Verdict::Unexpected
    } else {
        Verdict::NotUnexpected
    };
    Ok(ProbeOutcome { generic, edim, verdict })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexValue {
    Found(u32),
    NotFound { jmax: u32 },
}

impl IndexValue {
    pub fn found(self) -> Option<u32> {
        match self {
            IndexValue::Found(j) => Some(j),
            IndexValue::NotFound { .. } => None,
        }
    }
}

/// One `j` of the index sweep: forms of degree `j + 1` through `Z + jP`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRow {
    pub j: u32,
    pub degree: u32,
    pub vdim: usize,
    pub trial_vdims: Vec<usize>,
    pub stable: bool,
    /// `binom(j+1+n, n) - binom(n-1+j, n) - |Z|`; may be negative.
    pub independent_count: i64,
    /// `vdim == independent_count`, so never true when the count is negative.
    pub independent_strict: bool,
    /// `vdim == max(0, independent_count)`.
    pub independent_clamped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub multiplicity_index: IndexValue,
    /// Speciality index where a negative count never matches.
    pub speciality_index_strict: IndexValue,
    /// Speciality index where a negative count is read as zero.
    pub speciality_index_clamped: IndexValue,
    pub rows: Vec<IndexRow>,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub stable: bool,
}

/// Sweep `j = 0..=jmax` computing the generic dimension of `[I_{Z+jP}]_{j+1}`.
///
/// `|Z|` in the independence count is the naive number of conditions of `Z`,
/// which is the number of points for a reduced scheme.
pub fn index_sweep(z: &FatPointConfig, jmax: u32, trials: usize, rng: &mut Rng) -> Result<IndexReport> {
    if jmax < 1 {
        return Err(Error::InvalidArgument("jmax must be at least 1".into()));
    }
    let n = z.ambient_dim() as u64;
    let z_size = z.condition_count() as i64;
    let seeds = trial_seeds(rng, trials);
    let mut rows = Vec::new();
    for j in 0..=jmax {
        let generic = generic_system(z, j + 1, j, &seeds)?;
        let jj = u64::from(j);
        let count = binomial(jj + 1 + n, n) as i64 - if j == 0 { 0 } else { binomial(n - 1 + jj, n) as i64 } - z_size;
        let vdim = generic.result.vdim_actual;
        rows.push(IndexRow {
            j,
            degree: j + 1,
            vdim,
            trial_vdims: generic.trials.iter().map(|t| t.vdim).collect(),
            stable: generic.stable,
            independent_count: count,
            independent_strict: vdim as i64 == count,
            independent_clamped: vdim as i64 == count.max(0),
        });
    }
    let first = |pred: &dyn Fn(&IndexRow) -> bool| {
        rows.iter()
            .find(|r| pred(r))
            .map_or(IndexValue::NotFound { jmax }, |r| IndexValue::Found(r.j))
    };
    let multiplicity_index = first(&|r| r.vdim > 0);
    let speciality_index_strict = first(&|r| r.independent_strict);
    let speciality_index_clamped = first(&|r| r.independent_clamped);
    let stable = rows.iter().all(|r| r.stable);
    Ok(IndexReport {
        multiplicity_index,
        speciality_index_strict,
        speciality_index_clamped,
        rows,
        trials,
        seeds,
        stable,
    })
}

/// Least `j` with a nonzero degree-`(j+1)` form through `Z` and a general `j`-fold point.
pub fn multiplicity_index(z: &FatPointConfig, jmax: u32, trials: usize, rng: &mut Rng) -> Result<IndexValue> {
    Ok(index_sweep(z, jmax, trials, rng)?.multiplicity_index)
}

/// Least `j` at which `Z + jP` imposes independent conditions in degree `j + 1`,
/// as `(strict, clamped)` readings of a negative count.
pub fn speciality_index(z: &FatPointConfig, jmax: u32, trials: usize, rng: &mut Rng) -> Result<(IndexValue, IndexValue)> {
    let r = index_sweep(z, jmax, trials, rng)?;
    Ok((r.speciality_index_strict, r.speciality_index_clamped))
}
