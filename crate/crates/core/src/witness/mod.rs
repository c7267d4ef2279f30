//! Explicit configurations and closed-form hypersurfaces, with exact checks.
//!
//! Every check here is an exact identity: a polynomial that must be the zero
//! polynomial, a value that must vanish, or a rank.

mod forms;
mod param;
mod suite;

pub use forms::{
    plane_cubic_dual_form, plane_quartic, plane_quartic_form, space_quartic, space_quartic_form,
    space_quintic_dual_form,
};
pub use param::{
    build_parametrization, build_parametrization_with, chord_points, reading_validation, verify_parametrization,
    G2Reading, G3Reading, ParamReport, ParametrizationBundle, ReadingOutcome, TypoResolution, VALIDATED_RESOLUTION,
};
pub use suite::{
    phi_annihilation, random_param_point, run_section, Section, BASE_PROBES, DEGENERATION_SAMPLES, PARAM_SAMPLES,
    PHI_TRIPLES, PLANE_SAMPLES, SPACE_SAMPLES,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::{int_coords, projectively_equal, random_point, Eisenstein, Field, Rng, Scalar};
use crate::linalg::{oracle_rank, ExactMatrix};
use crate::mpoly::{monomial_basis, MultiPoly, RingContext};
use crate::systems::{conditions_matrix, FatPoint, FatPointConfig};
use crate::{Error, Result};

/// One named pass/fail item of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Descriptive output that always counts as passed.
    pub informational: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
            informational: false,
        }
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            informational: true,
            ..Self::new(name, true, detail)
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

const B3_POINTS: [[i64; 3]; 9] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
];

/// The nine points dual to the lines of `xyz(x^2-y^2)(x^2-z^2)(y^2-z^2)`.
pub fn b3_config() -> FatPointConfig {
    let points = B3_POINTS
        .iter()
        .map(|c| FatPoint::simple(int_coords(c, Field::Rational)))
        .collect();
    FatPointConfig::new(2, Field::Rational, points, "b3").expect("distinct points")
}

/// The 27 points `(1 : w^i : w^j : w^k)` cut out by the Fermat cubics, followed
/// by the four coordinate points, over `Q(w)`.
pub fn fermat_w_config() -> FatPointConfig {
    let f = Field::Eisenstein;
    let mut points = Vec::with_capacity(31);
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                let coords = [0, i, j, k]
                    .iter()
                    .map(|&e| Scalar::Eis(Eisenstein::w_pow(e)))
                    .collect();
                points.push(FatPoint::simple(coords));
            }
        }
    }
    for i in 0..4 {
        let mut c = [0; 4];
        c[i] = 1;
        points.push(FatPoint::simple(int_coords(&c, f)));
    }
    FatPointConfig::new(3, f, points, "fermat_w").expect("distinct points")
}

/// The four coordinate points of P^3 and `(1:1:1:1)`.
pub fn coord4plus_config() -> FatPointConfig {
    let f = Field::Rational;
    let points = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]
        .iter()
        .map(|c| FatPoint::simple(int_coords(c, f)))
        .collect();
    FatPointConfig::new(3, f, points, "coord4plus").expect("distinct points")
}

fn space_forms(texts: &[&str], field: Field) -> Vec<MultiPoly> {
    let ctx = RingContext::standard(4, Field::Rational);
    texts
        .iter()
        .map(|t| {
            ctx.parse_expr(t)
                .and_then(|p| p.to_field(field))
                .expect("built-in form parses")
        })
        .collect()
}

/// `x^3 - y^3, y^3 - z^3, z^3 - w^3`.
pub fn fermat_generators(field: Field) -> Vec<MultiPoly> {
    space_forms(&["x^3-y^3", "y^3-z^3", "z^3-w^3"], field)
}

/// The eight quartic binomials generating the ideal of the Fermat configuration.
pub fn lemma1_binomials(field: Field) -> Vec<MultiPoly> {
    space_forms(
        &[
            "x*(y^3-z^3)",
            "x*(z^3-w^3)",
            "y*(x^3-z^3)",
            "y*(z^3-w^3)",
            "z*(x^3-y^3)",
            "z*(y^3-w^3)",
            "w*(x^3-y^3)",
            "w*(y^3-z^3)",
        ],
        field,
    )
}

fn coefficient_matrix(polys: &[MultiPoly], nvars: usize, degree: u32, field: Field) -> Result<ExactMatrix> {
    let basis = monomial_basis(nvars, degree);
    let rows = polys
        .iter()
        .map(|p| p.coefficient_vector(&basis))
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows, basis.len(), field)
}

/// Is `p` in the span of `basis` (all homogeneous of one degree)?
pub fn in_span(p: &MultiPoly, basis: &[MultiPoly], degree: u32) -> Result<bool> {
    let field = p.field();
    let m = coefficient_matrix(basis, p.nvars(), degree, field)?;
    let with = coefficient_matrix(core::slice::from_ref(p), p.nvars(), degree, field)?;
    Ok(m.stack(&with)?.rank() == m.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    /// `(binomial, point)` pairs where a binomial fails to vanish.
    pub vanishing_failures: Vec<(usize, usize)>,
    pub coefficient_rank: usize,
    pub evaluation_rows: usize,
    pub evaluation_cols: usize,
    pub evaluation_rank: usize,
    pub evaluation_oracle_rank: usize,
    pub kernel_dim: usize,
    /// The binomials and the evaluation kernel span the same space.
    pub spans_kernel: bool,
}

impl Lemma1Report {
    pub fn passed(&self) -> bool {
        self.vanishing_failures.is_empty()
            && self.coefficient_rank == 8
            && self.evaluation_rank == 27
            && self.evaluation_oracle_rank == 27
            && self.kernel_dim == 8
            && self.spans_kernel
    }
}

pub fn lemma1_check() -> Result<Lemma1Report> {
    let w = fermat_w_config();
    let field = w.field();
    let binomials = lemma1_binomials(field);
    let mut vanishing_failures = Vec::new();
    for (i, b) in binomials.iter().enumerate() {
        for (j, p) in w.points().iter().enumerate() {
            if !b.evaluate(&p.coords)?.is_zero() {
                vanishing_failures.push((i, j));
            }
        }
    }
    let coeffs = coefficient_matrix(&binomials, 4, 4, field)?;
    let eval = conditions_matrix(&w, 4);
    let kernel = eval.kernel_basis();
    let kernel_m = ExactMatrix::from_rows(kernel.vectors.clone(), eval.cols(), field)?;
    let spans_kernel = coeffs.stack(&kernel_m)?.rank() == coeffs.rank() && kernel.dim() == coeffs.rank();
    Ok(Lemma1Report {
        vanishing_failures,
        coefficient_rank: coeffs.rank(),
        evaluation_rows: eval.rows(),
        evaluation_cols: eval.cols(),
        evaluation_rank: eval.rank(),
        evaluation_oracle_rank: oracle_rank(&eval),
        kernel_dim: kernel.dim(),
        spans_kernel,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraSingularity {
    pub point: Vec<Scalar>,
    /// With a zero coordinate the point equals `R` itself.
    pub coincides_with_r: bool,
}

/// `R_i`: `R` with its `i`-th coordinate multiplied by `-2`.
pub fn extra_singularities(r: &[Scalar]) -> Result<Vec<ExtraSingularity>> {
    if r.len() != 4 {
        return Err(Error::LengthMismatch {
            expected: 4,
            found: r.len(),
        });
    }
    if r.iter().all(Scalar::is_zero) {
        return Err(Error::InvalidArgument("the point has all coordinates zero".into()));
    }
    let minus_two = Scalar::from_int(-2, r[0].field());
    Ok((0..4)
        .map(|i| {
            let mut point = r.to_vec();
            point[i] = &point[i] * &minus_two;
            let coincides_with_r = projectively_equal(&point, r);
            ExtraSingularity { point, coincides_with_r }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualForm {
    PlaneCubic,
    SpaceQuintic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFormCheck {
    pub which: DualForm,
    /// The dual form as printed, in the product ring.
    pub form: MultiPoly,
    /// The printed dual form equals the quartic family term by term.
    pub matches_quartic: bool,
    /// First partials in the parameter block, restricted to the diagonal.
    pub first_order: Vec<MultiPoly>,
    /// Second partials in the parameter block, restricted to the diagonal.
    pub second_order: Vec<MultiPoly>,
}

impl DualFormCheck {
    pub fn passed(&self) -> bool {
        self.matches_quartic
            && self.first_order.iter().all(MultiPoly::is_zero)
            && self.second_order.iter().all(MultiPoly::is_zero)
    }
}

/// Symbolic triple-point check of a dual form at the diagonal `parameters = point`.
pub fn dual_triple_point_check(which: DualForm) -> Result<DualFormCheck> {
    let (form, quartic, n) = match which {
        DualForm::PlaneCubic => (plane_cubic_dual_form(), plane_quartic_form(), 3),
        DualForm::SpaceQuintic => (space_quintic_dual_form(), space_quartic_form(), 4),
    };
    let field = form.field();
    let diagonal: Vec<MultiPoly> = (0..2 * n).map(|i| MultiPoly::var(i % n, n, field)).collect();
    let residues = |order: u32| -> Result<Vec<MultiPoly>> {
        monomial_basis(n, order)
            .iter()
            .map(|alpha| {
                let mut full = alloc::vec![0; n];
                full.extend_from_slice(alpha.exponents());
                let d = form.derivative(&full);
                if d.is_zero() {
                    Ok(MultiPoly::zero(n, field))
                } else {
                    d.substitute(&diagonal)
                }
            })
            .collect()
    };
    Ok(DualFormCheck {
        which,
        matches_quartic: form == quartic,
        first_order: residues(1)?,
        second_order: residues(2)?,
        form,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationRow {
    pub s: Vec<Scalar>,
    /// The cubic in `a, b, c` for this parameter point.
    pub cubic: MultiPoly,
    pub triple_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationReport {
    /// One row per point of the B3 configuration.
    pub config_rows: Vec<DegenerationRow>,
    /// `(1:2:3)` followed by random parameter points.
    pub other_rows: Vec<DegenerationRow>,
}

impl DegenerationReport {
    pub fn passed(&self) -> bool {
        self.config_rows.iter().all(|r| r.cubic.is_zero())
            && self.other_rows.iter().all(|r| !r.cubic.is_zero() && r.triple_point)
    }
}

/// The dual cubic at the B3 points and at `random + 1` other points.
pub fn dual_degenerations(random: usize, rng: &mut Rng) -> Result<DegenerationReport> {
    let form = plane_cubic_dual_form();
    let b3 = b3_config();
    let row = |s: Vec<Scalar>| -> Result<DegenerationRow> {
        let cubic = form.specialize(&[0, 1, 2], &s)?;
        let triple_point = cubic.vanishes_to_order(&s, 3)?;
        Ok(DegenerationRow { s, cubic, triple_point })
    };
    let config_rows = b3
        .points()
        .iter()
        .map(|p| row(p.coords.clone()))
        .collect::<Result<_>>()?;
    let mut others = alloc::vec![int_coords(&[1, 2, 3], Field::Rational)];
    while others.len() < random + 1 {
        let s = random_point(rng, 2, Field::Rational);
        if !b3.points().iter().any(|p| projectively_equal(&p.coords, &s)) {
            others.push(s);
        }
    }
    let other_rows = others.into_iter().map(row).collect::<Result<_>>()?;
    Ok(DegenerationReport { config_rows, other_rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseProbe {
    pub point: Vec<Scalar>,
    /// A parameter point whose cubic does not vanish at `point`.
    pub witness: Option<Vec<Scalar>>,
    pub attempts: usize,
}

/// Attempts per probed point before it is reported as a possible base point.
pub const BASE_PROBE_ATTEMPTS: usize = 64;

/// Look for base points of the family of dual cubics: probes `(1:1:1)`,
/// `(1:0:0)` and `trials` random points.
pub fn base_locus_probe(trials: usize, rng: &mut Rng) -> Result<Vec<BaseProbe>> {
    let form = plane_cubic_dual_form();
    let f = Field::Rational;
    let mut points = alloc::vec![int_coords(&[1, 1, 1], f), int_coords(&[1, 0, 0], f)];
    for _ in 0..trials {
        points.push(random_point(rng, 2, f));
    }
    let mut out = Vec::with_capacity(points.len());
    for point in points {
        let mut witness = None;
        let mut attempts = 0;
        while attempts < BASE_PROBE_ATTEMPTS && witness.is_none() {
            attempts += 1;
            let s = random_point(rng, 2, f);
            let mut full = s.clone();
            full.extend_from_slice(&point);
            if !form.evaluate(&full)?.is_zero() {
                witness = Some(s);
            }
        }
        out.push(BaseProbe { point, witness, attempts });
    }
    Ok(out)
}

/// Rank of the Jacobian matrix of `polys` at `point`.
pub fn gradient_rank(polys: &[MultiPoly], point: &[Scalar]) -> Result<usize> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let n = first.nvars();
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        rows.push((0..n).map(|i| p.partial(i).evaluate(point)).collect::<Result<Vec<_>>>()?);
    }
    Ok(ExactMatrix::from_rows(rows, n, first.field())?.rank())
}

/// Checks on the plane quartic for one parameter point `r`.
pub fn plane_quartic_checks(r: &[Scalar]) -> Result<Vec<Check>> {
    let q = plane_quartic(r)?;
    let b3 = b3_config();
    let missed: Vec<usize> = (0..9)
        .filter(|&i| !q.evaluate(&b3.points()[i].coords).is_ok_and(|v| v.is_zero()))
        .collect();
    let order = q.order_at(r, 4)?;
    let kernel = crate::systems::linear_system(&b3, 4)?.kernel_polys(3, Field::Rational);
    let member = in_span(&q, &kernel, 4)?;
    Ok(alloc::vec![
        Check::new("vanishes_at_nine_points", missed.is_empty(), alloc::format!("missed points {missed:?}")),
        Check::new("triple_point_at_r", order >= 3, alloc::format!("order {order}")),
        Check::new("in_quartic_system", member, "rank test against the kernel basis"),
    ])
}

/// Checks on the space quartic for one parameter point `r` (rational).
pub fn space_quartic_checks(r: &[Scalar]) -> Result<Vec<Check>> {
    let q = space_quartic(r)?;
    let w = fermat_w_config();
    let qe = q.to_field(Field::Eisenstein)?;
    let missed: Vec<usize> = (0..w.len())
        .filter(|&i| !qe.evaluate(&w.points()[i].coords).is_ok_and(|v| v.is_zero()))
        .collect();
    let order = q.order_at(r, 4)?;
    let mut singular = Vec::new();
    for (i, s) in extra_singularities(r)?.iter().enumerate() {
        if !s.coincides_with_r {
            singular.push((i + 1, q.order_at(&s.point, 3)?));
        }
    }
    let member = in_span(&q, &lemma1_binomials(q.field()), 4)?;
    Ok(alloc::vec![
        Check::new("vanishes_on_w", missed.is_empty(), alloc::format!("missed points {missed:?}")),
        Check::new("order_three_at_r", order == 3, alloc::format!("order {order}")),
        Check::new(
            "double_points_r1_to_r4",
            singular.iter().all(|&(_, o)| o == 2),
            alloc::format!("orders {singular:?}"),
        ),
        Check::new("in_binomial_span", member, "rank test against the eight binomials"),
    ])
}
