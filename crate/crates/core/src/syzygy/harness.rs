//! Empirical harness for the surface swept by the plane map on a general plane.
//!
//! For a reduced `Z` in P^3 with dual product `f` and a random plane `l`, the
//! harness finds two least-degree syzygies of `(f_x, f_y, f_z, f_w, l)` and
//! samples the map `Q -> plane(Q, sigma(Q), sigma'(Q))` on `l`. Everything it
//! reports is descriptive; nothing here proves anything.
//!
//! Dual space is identified with P^3 through coefficient vectors, so the
//! plane `l_i` dual to `P_i` is the point `P_i`, and the general point `P`
//! belonging to `l` is `l`'s own coefficient vector.

use alloc::string::String;
use alloc::vec::Vec;

use super::*;
use crate::binomial;
use crate::exact::{projectively_equal, Rng};
use crate::linalg::ExactMatrix;
use crate::systems::{index_sweep, linear_system, FatPoint, IndexValue, MIN_TRIALS};

/// Number of independent runs, each with its own plane.
pub const DEFAULT_RUNS: usize = 3;
/// Sampled points per line `l ∩ l_i`.
pub const LINE_SAMPLES: usize = 3;
/// Largest configuration accepted without `allow_large`.
pub const DESK_SCALE_POINTS: usize = 8;
const LINE_ATTEMPTS: usize = 60;
const PLANE_BOUND: i64 = 5;
const SAMPLE_BOUND: i64 = 4;
const WEIGHT_BOUND: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessOptions {
    pub tmax: u32,
    /// Points of `l` probed for the non-collinearity condition.
    pub samples: usize,
    pub runs: usize,
    /// Largest image degree tried by interpolation.
    pub max_image_degree: u32,
    /// Largest `j` in the index sweep.
    pub index_jmax: u32,
    /// Accept more than [`DESK_SCALE_POINTS`] points. The syzygy matrices grow
    /// like `t^3` per generator and the 31-point configuration takes hours.
    pub allow_large: bool,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        Self {
            tmax: 8,
            samples: 20,
            runs: DEFAULT_RUNS,
            max_image_degree: 6,
            index_jmax: 4,
            allow_large: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSample {
    pub q: Vec<Scalar>,
    pub sigma: Vec<Scalar>,
    pub sigma_prime: Vec<Scalar>,
    pub sigma_on_plane: bool,
    pub sigma_prime_on_plane: bool,
    /// `None` when the three points are collinear.
    pub phi: Option<Vec<Scalar>>,
    pub phi_is_dual_point: bool,
}

impl LineSample {
    pub fn holds(&self) -> bool {
        self.sigma_on_plane && self.sigma_prime_on_plane && (self.phi.is_none() || self.phi_is_dual_point)
    }
}

/// Sampled points of the line `l ∩ l_i` for one point `P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRow {
    pub index: usize,
    pub point: Vec<Scalar>,
    pub samples: Vec<LineSample>,
    /// Candidates skipped because a map was undefined or the point lay on another `l_j`.
    pub skipped: usize,
}

impl LineRow {
    pub fn holds(&self) -> bool {
        self.samples.len() == LINE_SAMPLES && self.samples.iter().all(LineSample::holds)
    }

    pub fn collinear(&self) -> usize {
        self.samples.iter().filter(|s| s.phi.is_none()).count()
    }
}

/// Whether `sigma(Q)` and `sigma'(Q)` are independent at sampled points of `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub sampled: usize,
    pub independent: usize,
    pub proportional: usize,
    pub undefined: usize,
}

impl IndependenceReport {
    pub fn holds_at_samples(&self) -> bool {
        self.sampled > 0 && self.independent == self.sampled
    }
}

/// Points `Q` of `l` with `sigma(Q)` and `sigma'(Q)` also on `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneHits {
    /// `l ∘ sigma` vanishes identically on `l`.
    pub sigma_preserves_plane: bool,
    pub sigma_prime_preserves_plane: bool,
    pub sampled: usize,
    pub hits: usize,
    /// Hits whose image plane is `l` itself (collinear hits excluded).
    pub hits_mapped_to_p: usize,
    pub collinear_hits: usize,
}

impl PlaneHits {
    pub fn holds_at_hits(&self) -> bool {
        self.hits_mapped_to_p + self.collinear_hits == self.hits
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceRow {
    /// `"P1"`, `"P2"`, ... for points of `Z`, `"P"` for the point dual to `l`.
    pub label: String,
    pub point: Vec<Scalar>,
    pub order: u32,
    pub required: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageReport {
    pub sampled: usize,
    pub distinct_images: usize,
    pub degenerate_samples: usize,
    /// Least degree of a surface through all images, if one exists up to the bound.
    pub degree: Option<u32>,
    pub surfaces_in_degree: usize,
    pub surface: Option<MultiPoly>,
    /// Order of the surface at each `P_i` (needs 1) and at `P` (needs `degree - 1`).
    pub incidence: Vec<IncidenceRow>,
}

impl ImageReport {
    pub fn has_unexpected_shape(&self) -> bool {
        self.surfaces_in_degree == 1 && !self.incidence.is_empty() && self.incidence.iter().all(|r| r.order >= r.required)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Complete,
    /// No usable syzygy pair up to `tmax`.
    NoPair(PairStatus),
    /// The plane map is undefined or collinear at every sampled point of `l`.
    DegeneratePhi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessRun {
    pub seed: u64,
    pub line: Vec<Scalar>,
    pub status: RunStatus,
    pub pair_status: PairStatus,
    pub syzygy_degree: Option<u32>,
    pub second_degree: Option<u32>,
    pub sweep: Vec<DegreeRow>,
    pub first: Option<SyzygyVector>,
    pub second: Option<SyzygyVector>,
    pub koszul_trivial: Option<(bool, bool)>,
    pub lines: Vec<LineRow>,
    pub independence: Option<IndependenceReport>,
    pub plane_hits: Option<PlaneHits>,
    pub image: Option<ImageReport>,
}

impl HarnessRun {
    pub fn lines_hold(&self) -> bool {
        !self.lines.is_empty() && self.lines.iter().all(LineRow::holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub label: String,
    pub points: usize,
    pub f_degree: u32,
    pub multiplicity_index: IndexValue,
    pub speciality_index_strict: IndexValue,
    pub speciality_index_clamped: IndexValue,
    pub runs: Vec<HarnessRun>,
}

impl HarnessReport {
    pub fn pair_found_everywhere(&self) -> bool {
        self.runs.iter().all(|r| r.syzygy_degree.is_some() && r.second_degree.is_some())
    }

    pub fn lines_hold_everywhere(&self) -> bool {
        !self.runs.is_empty() && self.runs.iter().all(HarnessRun::lines_hold)
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(a[0].field()), |acc, (x, y)| &acc + &(x * y))
}

/// Same point of projective space, or both undefined.
fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn combine(basis: &[Vec<Scalar>], weights: &[i64]) -> Vec<Scalar> {
    let field = basis[0][0].field();
    let mut out = alloc::vec![Scalar::zero(field); basis[0].len()];
    for (v, &w) in basis.iter().zip(weights) {
        let w = Scalar::from_int(w, field);
        for (o, x) in out.iter_mut().zip(v) {
            *o = &*o + &(&w * x);
        }
    }
    out
}

fn random_nonzero_combination(rng: &mut Rng, basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    loop {
        let w = rng.int_vector(basis.len(), SAMPLE_BOUND);
        let v = combine(basis, &w);
        if !v.iter().all(Scalar::is_zero) {
            return v;
        }
    }
}

/// A plane with nonzero coefficients through no point of `Z` and dual to none.
fn draw_plane(rng: &mut Rng, z: &FatPointConfig) -> Vec<Scalar> {
    loop {
        let v = rng.int_vector(4, PLANE_BOUND);
        if v.contains(&0) {
            continue;
        }
        let c: Vec<Scalar> = v.into_iter().map(|x| Scalar::from_int(x, z.field())).collect();
        let special = z
            .points()
            .iter()
            .any(|p| projectively_equal(&p.coords, &c) || dot(&p.coords, &c).is_zero());
        if !special {
            return c;
        }
    }
}

struct Maps {
    sigma: SigmaMap,
    sigma_prime: SigmaMap,
}

impl Maps {
    fn eval(&self, q: &[Scalar]) -> Result<(Option<Vec<Scalar>>, Option<Vec<Scalar>>)> {
        Ok((self.sigma.eval(q)?, self.sigma_prime.eval(q)?))
    }
}

fn line_row(
    rng: &mut Rng,
    maps: &Maps,
    z: &FatPointConfig,
    line: &[Scalar],
    index: usize,
) -> Result<LineRow> {
    let point = z.points()[index].coords.clone();
    let m = ExactMatrix::from_rows(alloc::vec![line.to_vec(), point.clone()], 4, z.field())?;
    let basis = m.kernel_basis().vectors;
    let mut row = LineRow {
        index,
        point: point.clone(),
        samples: Vec::new(),
        skipped: 0,
    };
    for _ in 0..LINE_ATTEMPTS {
        if row.samples.len() == LINE_SAMPLES {
            break;
        }
        let q = random_nonzero_combination(rng, &basis);
        let on_other = z
            .points()
            .iter()
            .enumerate()
            .any(|(j, p)| j != index && dot(&p.coords, &q).is_zero());
        let (Some(s), Some(s2)) = maps.eval(&q)? else {
            row.skipped += 1;
            continue;
        };
        if on_other || row.samples.iter().any(|x| projectively_equal(&x.q, &q)) {
            row.skipped += 1;
            continue;
        }
        let phi = match phi_plane(&q, &s, &s2)? {
            PlaneOutcome::Plane(c) => Some(c),
            PlaneOutcome::Collinear => None,
        };
        row.samples.push(LineSample {
            sigma_on_plane: dot(&point, &s).is_zero(),
            sigma_prime_on_plane: dot(&point, &s2).is_zero(),
            phi_is_dual_point: phi.as_ref().is_some_and(|c| projectively_equal(c, &point)),
            phi,
            q,
            sigma: s,
            sigma_prime: s2,
        });
    }
    Ok(row)
}

fn restricted_composition_is_zero(sigma: &SigmaMap, line: &MultiPoly, coeffs: &[Scalar]) -> Result<bool> {
    let n = line.nvars();
    let mut comp = MultiPoly::zero(n, line.field());
    for (s, c) in sigma.components.iter().zip(coeffs) {
        comp = &comp + &s.scale(c)?;
    }
    let images = restriction_images(line)?;
    Ok(restrict(&comp, &images)?.is_zero())
}

struct PlaneSamples {
    independence: IndependenceReport,
    plane_hits: PlaneHits,
    images: Vec<Vec<Scalar>>,
    degenerate: usize,
}

fn sample_plane(
    rng: &mut Rng,
    maps: &Maps,
    line_poly: &MultiPoly,
    line: &[Scalar],
    probes: usize,
    wanted_images: usize,
) -> Result<PlaneSamples> {
    let m = ExactMatrix::from_rows(alloc::vec![line.to_vec()], 4, line_poly.field())?;
    let basis = m.kernel_basis().vectors;
    let mut cb = IndependenceReport {
        sampled: 0,
        independent: 0,
        proportional: 0,
        undefined: 0,
    };
    let mut hits = PlaneHits {
        sigma_preserves_plane: restricted_composition_is_zero(&maps.sigma, line_poly, line)?,
        sigma_prime_preserves_plane: restricted_composition_is_zero(&maps.sigma_prime, line_poly, line)?,
        sampled: 0,
        hits: 0,
        hits_mapped_to_p: 0,
        collinear_hits: 0,
    };
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    let mut degenerate = 0;
    let mut seen: Vec<Vec<Scalar>> = Vec::new();
    let budget = 4 * probes.max(wanted_images);
    for _ in 0..budget {
        if seen.len() >= probes && images.len() >= wanted_images {
            break;
        }
        let q = random_nonzero_combination(rng, &basis);
        if seen.iter().any(|x| projectively_equal(x, &q)) {
            continue;
        }
        seen.push(q.clone());
        let (s, s2) = maps.eval(&q)?;
        cb.sampled += 1;
        hits.sampled += 1;
        let (Some(s), Some(s2)) = (s, s2) else {
            cb.undefined += 1;
            degenerate += 1;
            continue;
        };
        if proportional(&s, &s2) {
            cb.proportional += 1;
        } else {
            cb.independent += 1;
        }
        let phi = phi_plane(&q, &s, &s2)?;
        if dot(line, &s).is_zero() && dot(line, &s2).is_zero() {
            hits.hits += 1;
            match &phi {
                PlaneOutcome::Plane(c) if projectively_equal(c, line) => hits.hits_mapped_to_p += 1,
                PlaneOutcome::Plane(_) => {}
                PlaneOutcome::Collinear => hits.collinear_hits += 1,
            }
        }
        match phi {
            PlaneOutcome::Plane(c) => {
                let c = crate::exact::primitive_vector(&c);
                if !images.iter().any(|x| projectively_equal(x, &c)) {
                    images.push(c);
                }
            }
            PlaneOutcome::Collinear => degenerate += 1,
        }
    }
    Ok(PlaneSamples {
        independence: cb,
        plane_hits: hits,
        images,
        degenerate,
    })
}

/// Degree-`e` surfaces through all `images`: interpolate through the first
/// `first` of them, then keep the combinations that vanish on the rest.
/// Returns one such surface and the dimension of the space of them.
fn surfaces_through(field: Field, images: &[Vec<Scalar>], first: usize, e: u32) -> Result<Option<(MultiPoly, usize)>> {
    let pts: Vec<FatPoint> = images[..first].iter().cloned().map(FatPoint::simple).collect();
    let cfg = FatPointConfig::new(3, field, pts, "image samples")?;
    let sys = linear_system(&cfg, e)?;
    if sys.vdim_actual == 0 {
        return Ok(None);
    }
    let candidates = sys.kernel_polys(4, field);
    let rest = &images[first..];
    if rest.is_empty() {
        let count = candidates.len();
        return Ok(Some((candidates.into_iter().next().expect("nonzero kernel"), count)));
    }
    let rows = rest
        .iter()
        .map(|q| candidates.iter().map(|c| c.evaluate(q)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let kernel = ExactMatrix::from_rows(rows, candidates.len(), field)?.kernel_basis();
    let Some(w) = kernel.vectors.first() else {
        return Ok(None);
    };
    let mut surface = MultiPoly::zero(4, field);
    for (c, x) in candidates.iter().zip(w) {
        surface = &surface + &c.scale(x)?;
    }
    Ok(Some((surface, kernel.dim())))
}

/// Least-degree surface through the sampled images, with its incidence table.
fn interpolate_image(
    z: &FatPointConfig,
    line: &[Scalar],
    samples: &PlaneSamples,
    max_degree: u32,
) -> Result<ImageReport> {
    let mut report = ImageReport {
        sampled: samples.independence.sampled,
        distinct_images: samples.images.len(),
        degenerate_samples: samples.degenerate,
        degree: None,
        surfaces_in_degree: 0,
        surface: None,
        incidence: Vec::new(),
    };
    for e in 1..=max_degree {
        // Too few samples would make every degree look like it fits.
        let needed = binomial(u64::from(e) + 3, 3) as usize + 10;
        if samples.images.len() < needed {
            break;
        }
        let Some((surface, count)) = surfaces_through(z.field(), &samples.images, needed, e)? else {
            continue;
        };
        let mut incidence = Vec::new();
        for (i, p) in z.points().iter().enumerate() {
            incidence.push(IncidenceRow {
                label: alloc::format!("P{}", i + 1),
                point: p.coords.clone(),
                order: surface.order_at(&p.coords, e)?,
                required: 1,
            });
        }
        incidence.push(IncidenceRow {
            label: "P".into(),
            point: line.to_vec(),
            order: surface.order_at(line, e)?,
            required: e.saturating_sub(1),
        });
        report.degree = Some(e);
        report.surfaces_in_degree = count;
        report.surface = Some(surface);
        report.incidence = incidence;
        break;
    }
    Ok(report)
}

/// A random member of the degree-`t` syzygies that is independent of the
/// multiples of `first` on the plane. The plane map only sees this class, so a
/// random member stands in for a general one.
fn generic_second(rng: &mut Rng, gens: &GeneratorList, first: &SyzygyVector, t: u32) -> Result<SyzygyVector> {
    let basis = syzygies_in_degree(gens, t)?;
    let mut base = multiples(first, t, gens.nvars(), gens.field());
    let rank = nontrivial_rank(gens, &base)?;
    loop {
        let weights = rng.int_vector(basis.len(), WEIGHT_BOUND);
        let mut components = alloc::vec![MultiPoly::zero(gens.nvars(), gens.field()); gens.len()];
        for (v, &w) in basis.iter().zip(&weights) {
            let w = Scalar::from_int(w, gens.field());
            for (c, s) in components.iter_mut().zip(&v.components) {
                *c = &*c + &s.scale(&w)?;
            }
        }
        let candidate = SyzygyVector { components, degree: t };
        base.push(candidate.clone());
        if nontrivial_rank(gens, &base)? > rank {
            return Ok(candidate);
        }
        base.pop();
    }
}

/// Image samples needed to test every degree up to `max_degree`.
pub fn image_samples_needed(max_degree: u32) -> usize {
    (binomial(u64::from(max_degree) + 3, 3) + 10) as usize
}

fn run_once(z: &FatPointConfig, f: &MultiPoly, opts: &HarnessOptions, mut rng: Rng) -> Result<HarnessRun> {
    let seed = rng.seed();
    let line = draw_plane(&mut rng, z);
    let line_poly = dual_linear_form(&line)?;
    let gens = GeneratorList::jacobian_plus_line(f, &line_poly)?;
    let pair = least_degree_syzygy_pair(&gens, opts.tmax)?;
    let mut run = HarnessRun {
        seed,
        line: line.clone(),
        status: RunStatus::Complete,
        pair_status: pair.status,
        syzygy_degree: pair.first.as_ref().map(|v| v.degree),
        second_degree: pair.second.as_ref().map(|v| v.degree),
        sweep: pair.sweep,
        first: pair.first.clone(),
        second: pair.second.clone(),
        koszul_trivial: None,
        lines: Vec::new(),
        independence: None,
        plane_hits: None,
        image: None,
    };
    let (Some(a), Some(mut b)) = (pair.first, pair.second) else {
        run.status = RunStatus::NoPair(pair.status);
        return Ok(run);
    };
    if pair.status == PairStatus::SplitDegrees {
        b = generic_second(&mut rng, &gens, &a, b.degree)?;
        run.second = Some(b.clone());
    }
    for v in [&a, &b] {
        if !v.is_syzygy_of(&gens)? {
            return Err(Error::SelfCheck("kernel vector is not a syzygy".into()));
        }
    }
    run.koszul_trivial = Some((is_koszul_trivial(&gens, &a)?, is_koszul_trivial(&gens, &b)?));
    let maps = Maps {
        sigma: sigma_map(&a)?,
        sigma_prime: sigma_map(&b)?,
    };
    for i in 0..z.len() {
        run.lines.push(line_row(&mut rng, &maps, z, &line, i)?);
    }
    let wanted = if opts.max_image_degree == 0 { 0 } else { image_samples_needed(opts.max_image_degree) };
    let samples = sample_plane(&mut rng, &maps, &line_poly, &line, opts.samples, wanted)?;
    if samples.images.is_empty() {
        run.status = RunStatus::DegeneratePhi;
    }
    run.image = Some(interpolate_image(z, &line, &samples, opts.max_image_degree)?);
    run.independence = Some(samples.independence);
    run.plane_hits = Some(samples.plane_hits);
    Ok(run)
}

/// Run the harness on a reduced configuration in P^3.
pub fn conjecture_harness(z: &FatPointConfig, opts: &HarnessOptions, rng: &mut Rng) -> Result<HarnessReport> {
    if z.ambient_dim() != 3 {
        return Err(Error::InvalidArgument("the harness works in P^3".into()));
    }
    if z.is_empty() || !z.is_reduced() {
        return Err(Error::InvalidArgument("the harness needs a nonempty set of simple points".into()));
    }
    if z.len() > DESK_SCALE_POINTS && !opts.allow_large {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} points exceeds the desk-scale limit of {DESK_SCALE_POINTS}; large runs must be allowed explicitly",
            z.len()
        )));
    }
    if opts.runs == 0 {
        return Err(Error::InvalidArgument("at least one run is required".into()));
    }
    let f = dual_plane_product(z)?;
    let index = index_sweep(z, opts.index_jmax, MIN_TRIALS, rng)?;
    let mut runs = Vec::with_capacity(opts.runs);
    for _ in 0..opts.runs {
        let sub = rng.split();
        runs.push(run_once(z, &f, opts, sub)?);
    }
    Ok(HarnessReport {
        label: z.label().into(),
        points: z.len(),
        f_degree: f.degree().unwrap_or(0),
        multiplicity_index: index.multiplicity_index,
        speciality_index_strict: index.speciality_index_strict,
        speciality_index_clamped: index.speciality_index_clamped,
        runs,
    })
}
