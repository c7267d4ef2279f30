//! Projection of the unexpected quartic surface from its triple point and the
//! inverse map given by plane quartics through a length-12 scheme.
//!
//! Two coefficients of the printed inverse are not usable as written. The
//! `f_1` coefficient of `g_2` is printed ambiguously, and the `f_1`
//! coefficient of `g_3` lacks the factor `a^3 - b^3` that its neighbours
//! carry. [`reading_validation`] runs all four combinations through the
//! composition and inversion identities; only [`VALIDATED_RESOLUTION`]
//! passes, and it is the one every other function uses.

use alloc::string::String;
use alloc::vec::Vec;

use super::{gradient_rank, space_quartic, Check};
use crate::exact::{normalize_projective, projectively_equal, random_point, Field, Rng, Scalar};
use crate::mpoly::{MultiPoly, RingContext};
use crate::{Error, Result};

const GAMMA: &str = "
    b*c^2*d*(a^3-b^3)*p^2*q + c^2*d^2*(a^3-b^3)*p*q^2 + a^2*b*d*(c^3-b^3)*p^2*r
    + 2*a^2*d^2*(c^3-b^3)*p*q*r + a^2*b^2*(c^3-d^3)*q^2*r + a*c*d^2*(c^3-b^3)*p*r^2
    + a*b^2*c*(c^3-d^3)*q*r^2";

const DELTA: &str = "
    a^2*b*c^2*(a^3-b^3)*(c^3-d^3)*p*q^2*r + a^2*c^2*d*(a^3-b^3)*(c^3-d^3)*q^3*r
    - a*b^2*d^2*(a^3-c^3)*(b^3-c^3)*p^2*r^2 + b^3*c*d*(a^3-c^3)*(c^3-d^3)*q*r^3
    + a*d*(c^3-d^3)*(a^3*b^3+a^3*c^3-2*b^3*c^3)*q^2*r^2 - b*c*d^3*(a^3-c^3)*(b^3-c^3)*p*r^3
    - a*b*(b^3*c^6-a^3*c^6+2*a^3*b^3*d^3-a^3*c^3*d^3-3*b^3*c^3*d^3+2*c^6*d^3)*p*q*r^2";

/// Coefficients of `f_0..f_3` in `g_0..g_3`. The two empty slots depend on the reading.
const G_COEFFS: [[&str; 4]; 4] = [
    ["a*b*c^2*(a^3-b^3)", "2*a*c^2*d*(a^3-b^3)", "d*(a^3*b^3+2*a^3*c^3-3*b^3*c^3)", "-a*b^2"],
    ["b^2*c^2*(a^3-b^3)", "2*b*c^2*d*(a^3-b^3)", "a^2*b*d*(b^3-c^3)", "-b^3"],
    ["b*c^3*(a^3-b^3)", "", "a^2*c*d*(b^3-c^3)", "-b^2*c"],
    ["-2*b*c^2*d*(a^3-b^3)", "", "a^2*d^2*(b^3-c^3)", "-b^2*d"],
];

/// Reading of the `f_1` coefficient of `g_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum G2Reading {
    /// `-c^3 d (a^3 - b^3)`
    CubeCD,
    /// `-3 c d (a^3 - b^3)`
    ThreeCD,
}

/// Reading of the `f_1` coefficient of `g_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum G3Reading {
    /// `-c^2 d^2`
    AsPrinted,
    /// `-c^2 d^2 (a^3 - b^3)`
    WithCubeDifference,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypoResolution {
    pub g2_f1: G2Reading,
    pub g3_f1: G3Reading,
}

pub const VALIDATED_RESOLUTION: TypoResolution = TypoResolution {
    g2_f1: G2Reading::CubeCD,
    g3_f1: G3Reading::WithCubeDifference,
};

impl TypoResolution {
    pub const ALL: [TypoResolution; 4] = [
        TypoResolution {
            g2_f1: G2Reading::CubeCD,
            g3_f1: G3Reading::AsPrinted,
        },
        TypoResolution {
            g2_f1: G2Reading::ThreeCD,
            g3_f1: G3Reading::AsPrinted,
        },
        VALIDATED_RESOLUTION,
        TypoResolution {
            g2_f1: G2Reading::ThreeCD,
            g3_f1: G3Reading::WithCubeDifference,
        },
    ];

    pub fn label(self) -> &'static str {
        match (self.g2_f1, self.g3_f1) {
            (G2Reading::CubeCD, G3Reading::AsPrinted) => "g2:c^3*d g3:as-printed",
            (G2Reading::ThreeCD, G3Reading::AsPrinted) => "g2:3*c*d g3:as-printed",
            (G2Reading::CubeCD, G3Reading::WithCubeDifference) => "g2:c^3*d g3:with-(a^3-b^3)",
            (G2Reading::ThreeCD, G3Reading::WithCubeDifference) => "g2:3*c*d g3:with-(a^3-b^3)",
        }
    }

    fn g2_f1_text(self) -> &'static str {
        match self.g2_f1 {
            G2Reading::CubeCD => "-c^3*d*(a^3-b^3)",
            G2Reading::ThreeCD => "-3*c*d*(a^3-b^3)",
        }
    }

    fn g3_f1_text(self) -> &'static str {
        match self.g3_f1 {
            G3Reading::AsPrinted => "-c^2*d^2",
            G3Reading::WithCubeDifference => "-c^2*d^2*(a^3-b^3)",
        }
    }
}

/// Everything needed to check the parametrization at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametrizationBundle {
    /// The triple point `(a:b:c:d)`.
    pub r: Vec<Scalar>,
    /// Plane cubic in `p, q, r`.
    pub gamma: MultiPoly,
    /// Plane quartic in `p, q, r`.
    pub delta: MultiPoly,
    /// `p*gamma, q*gamma, r*gamma, delta`.
    pub f: Vec<MultiPoly>,
    /// Coordinates of the inverse map to P^3.
    pub g: Vec<MultiPoly>,
    pub b_points: Vec<Vec<Scalar>>,
    pub f_points: Vec<Vec<Scalar>>,
    /// The projection from `r`, three linear forms in `x, y, z, w`.
    pub projection: Vec<MultiPoly>,
    pub resolution: TypoResolution,
}

pub fn build_parametrization(r: &[Scalar]) -> Result<ParametrizationBundle> {
    build_parametrization_with(r, VALIDATED_RESOLUTION)
}

/// Rejects parameters with a zero coordinate or with one of
/// `a^3 = b^3`, `a^3 = c^3`, `b^3 = c^3`, `c^3 = d^3`.
pub fn build_parametrization_with(r: &[Scalar], resolution: TypoResolution) -> Result<ParametrizationBundle> {
    if r.len() != 4 {
        return Err(Error::LengthMismatch {
            expected: 4,
            found: r.len(),
        });
    }
    let field = r[0].field();
    for s in r {
        s.check_field(field)?;
    }
    if let Some(i) = r.iter().position(Scalar::is_zero) {
        return Err(Error::DegenerateParameter(alloc::format!("coordinate {i} is zero")));
    }
    let cubes: Vec<Scalar> = r.iter().map(|s| s.pow(3)).collect();
    for (i, j) in [(0, 1), (0, 2), (1, 2), (2, 3)] {
        if cubes[i] == cubes[j] {
            return Err(Error::DegenerateParameter(alloc::format!(
                "coordinates {i} and {j} have equal cubes"
            )));
        }
    }
    let plane_ctx = RingContext::new(["p", "q", "r", "a", "b", "c", "d"], Field::Rational)?;
    let in_plane = |text: &str| -> Result<MultiPoly> {
        plane_ctx.parse_expr(text)?.to_field(field)?.specialize(&[3, 4, 5, 6], r)
    };
    let gamma = in_plane(GAMMA)?;
    let delta = in_plane(DELTA)?;
    let f: Vec<MultiPoly> = (0..3)
        .map(|i| &MultiPoly::var(i, 3, field) * &gamma)
        .chain(core::iter::once(delta.clone()))
        .collect();

    let coeff_ctx = RingContext::new(["a", "b", "c", "d"], Field::Rational)?;
    let coeff = |text: &str| -> Result<Scalar> { coeff_ctx.parse_expr(text)?.to_field(field)?.evaluate(r) };
    let mut g = Vec::with_capacity(4);
    for (row, texts) in G_COEFFS.iter().enumerate() {
        let mut gi = MultiPoly::zero(3, field);
        for (col, text) in texts.iter().enumerate() {
            let text = match (row, col) {
                (2, 1) => resolution.g2_f1_text(),
                (3, 1) => resolution.g3_f1_text(),
                _ => text,
            };
            gi = &gi + &f[col].scale(&coeff(text)?)?;
        }
        g.push(gi);
    }

    let (a, b, c, d) = (&r[0], &r[1], &r[2], &r[3]);
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let ab = a * b;
    let cd = c * d;
    let b_points = alloc::vec![
        alloc::vec![cd.clone(), -&(c * b), ab.clone()],
        alloc::vec![cd, zero.clone(), -&ab],
        alloc::vec![
            &(&(a * a) * &(b * b)) * &(&cubes[2] - &cubes[3]),
            &(&(a * a) * &(d * d)) * &(&cubes[1] - &cubes[2]),
            &(&(c * c) * &(d * d)) * &(&cubes[0] - &cubes[1]),
        ],
        alloc::vec![zero.clone(), one.clone(), zero.clone()],
    ];
    let f_points = alloc::vec![
        alloc::vec![zero.clone(), zero.clone(), one.clone()],
        alloc::vec![zero.clone(), -c, a.clone()],
        alloc::vec![-d, b.clone(), zero.clone()],
        alloc::vec![one, zero.clone(), zero],
    ];
    let linear = |coeffs: [(usize, &Scalar); 2]| -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(4, field);
        for (i, s) in coeffs {
            out = &out + &MultiPoly::var(i, 4, field).scale(s)?;
        }
        Ok(out)
    };
    let projection = alloc::vec![
        linear([(2, d), (3, &-c)])?,
        linear([(1, c), (2, &-b)])?,
        linear([(0, b), (1, &-a)])?,
    ];
    Ok(ParametrizationBundle {
        r: r.to_vec(),
        gamma,
        delta,
        f,
        g,
        b_points,
        f_points,
        projection,
        resolution,
    })
}

fn eval_all(polys: &[MultiPoly], point: &[Scalar]) -> Result<Vec<Scalar>> {
    polys.iter().map(|p| p.evaluate(point)).collect()
}

/// Sample points of a plane cubic by chords: the line through two known
/// points meets the cubic in a third point, which is rational whenever the
/// first two are. Starting from `known`, returns up to `count` new points
/// satisfying `accept`, trying at most `max_chords` chords.
pub fn chord_points(
    cubic: &MultiPoly,
    known: &[Vec<Scalar>],
    count: usize,
    max_chords: usize,
    accept: impl Fn(&[Scalar]) -> Result<bool>,
) -> Result<Vec<Vec<Scalar>>> {
    let field = cubic.field();
    let two = Scalar::from_int(2, field);
    let mut pool: Vec<Vec<Scalar>> = known.iter().map(|p| normalize_projective(p)).collect();
    let mut found = Vec::new();
    let mut chords = 0;
    let mut i = 1;
    while i < pool.len() && found.len() < count && chords < max_chords {
        let mut j = 0;
        while j < i && found.len() < count && chords < max_chords {
            chords += 1;
            let (p1, p2) = (&pool[j], &pool[i]);
            let plus: Vec<Scalar> = p1.iter().zip(p2).map(|(u, v)| u + v).collect();
            let minus: Vec<Scalar> = p1.iter().zip(p2).map(|(u, v)| u - v).collect();
            // On the chord s*p1 + t*p2 the cubic is s*t*(alpha*s + beta*t).
            let h_plus = cubic.evaluate(&plus)?;
            let h_minus = cubic.evaluate(&minus)?;
            let alpha = &(&h_plus - &h_minus) / &two;
            let beta = &(&h_plus + &h_minus) / &two;
            j += 1;
            if alpha.is_zero() && beta.is_zero() {
                continue;
            }
            let third: Vec<Scalar> = p1.iter().zip(p2).map(|(u, v)| &(&beta * u) - &(&alpha * v)).collect();
            let third = normalize_projective(&third);
            if pool.iter().any(|p| projectively_equal(p, &third)) {
                continue;
            }
            if accept(&third)? {
                found.push(third.clone());
            }
            pool.push(third);
        }
        i += 1;
    }
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamReport {
    pub resolution: TypoResolution,
    pub checks: Vec<Check>,
    /// Rank of the gradients of `(gamma, delta)` at `F_1..F_4`; 1 means tangency.
    pub f_gradient_ranks: Vec<usize>,
    /// The same at `B_1..B_4`; reported, not asserted.
    pub b_gradient_ranks: Vec<usize>,
    pub gamma_samples: Vec<Vec<Scalar>>,
}

impl ParamReport {
    pub fn passed(&self) -> bool {
        super::all_passed(&self.checks)
    }
}

pub const INVERSE_SAMPLES: usize = 10;
pub const GAMMA_SAMPLES: usize = 5;
const MAX_CHORDS: usize = 500;

fn pi_of(bundle: &ParametrizationBundle, x: &[Scalar]) -> Result<Vec<Scalar>> {
    eval_all(&bundle.projection, x)
}

pub fn verify_parametrization(bundle: &ParametrizationBundle, rng: &mut Rng) -> Result<ParamReport> {
    let field = bundle.r[0].field();
    let tag = bundle.resolution.label();
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        let detail = if passed { detail } else { alloc::format!("{detail} [reading {tag}]") };
        checks.push(Check::new(name, passed, detail));
    };

    let mut bad = Vec::new();
    if !pi_of(bundle, &bundle.r)?.iter().all(Scalar::is_zero) {
        bad.push(0);
    }
    for (i, s) in super::extra_singularities(&bundle.r)?.iter().enumerate() {
        if !projectively_equal(&pi_of(bundle, &s.point)?, &bundle.f_points[i]) {
            bad.push(i + 1);
        }
    }
    push("line_contraction", bad.is_empty(), alloc::format!("failures at {bad:?}"));

    let curves = [bundle.gamma.clone(), bundle.delta.clone()];
    let mut missed: Vec<String> = Vec::new();
    for (kind, pts) in [("B", &bundle.b_points), ("F", &bundle.f_points)] {
        for (i, p) in pts.iter().enumerate() {
            if !eval_all(&curves, p)?.iter().all(Scalar::is_zero) {
                missed.push(alloc::format!("{kind}{}", i + 1));
            }
        }
    }
    push("base_points", missed.is_empty(), alloc::format!("missed {missed:?}"));

    let f_gradient_ranks = bundle
        .f_points
        .iter()
        .map(|p| gradient_rank(&curves, p))
        .collect::<Result<Vec<_>>>()?;
    let b_gradient_ranks = bundle
        .b_points
        .iter()
        .map(|p| gradient_rank(&curves, p))
        .collect::<Result<Vec<_>>>()?;
    // A curve singular at F_i meets the other one there with multiplicity at
    // least 2 as well; the rank condition covers both cases.
    let mut singular = Vec::new();
    for (i, p) in bundle.f_points.iter().enumerate() {
        for (name, c) in ["gamma", "delta"].iter().zip(&curves) {
            if gradient_rank(core::slice::from_ref(c), p)? == 0 {
                singular.push(alloc::format!("{name} at F{}", i + 1));
            }
        }
    }
    push(
        "tangency_at_f",
        f_gradient_ranks.iter().all(|&k| k == 1),
        alloc::format!("gradient ranks {f_gradient_ranks:?}, singular {singular:?}"),
    );

    let (dg, dd) = (bundle.gamma.degree(), bundle.delta.degree());
    let bezout = dg.zip(dd).map(|(x, y)| x * y);
    push("bezout_12", bezout == Some(12), alloc::format!("degrees {dg:?} and {dd:?}"));

    let composed = space_quartic(&bundle.r)?.substitute(&bundle.g)?;
    push(
        "quartic_composition",
        composed.is_zero(),
        alloc::format!("{} nonzero terms", composed.num_terms()),
    );

    let mut inverse_fail = Vec::new();
    let mut tested = 0;
    let mut draws = 0;
    while tested < INVERSE_SAMPLES && draws < 20 * INVERSE_SAMPLES {
        draws += 1;
        let pt = random_point(rng, 2, field);
        let image = eval_all(&bundle.g, &pt)?;
        if image.iter().all(Scalar::is_zero) {
            continue;
        }
        tested += 1;
        if !projectively_equal(&pi_of(bundle, &image)?, &pt) {
            inverse_fail.push(pt);
        }
    }
    push(
        "projection_inverse",
        tested == INVERSE_SAMPLES && inverse_fail.is_empty(),
        alloc::format!("{tested} points, {} failures", inverse_fail.len()),
    );

    let mut known = bundle.b_points.clone();
    known.extend(bundle.f_points.iter().cloned());
    let delta = &bundle.delta;
    let gamma_samples = chord_points(&bundle.gamma, &known, GAMMA_SAMPLES, MAX_CHORDS, |p| {
        Ok(!delta.evaluate(p)?.is_zero())
    })?;
    let mut contract_fail = 0;
    for p in &gamma_samples {
        if !projectively_equal(&eval_all(&bundle.g, p)?, &bundle.r) {
            contract_fail += 1;
        }
    }
    push(
        "gamma_contraction",
        gamma_samples.len() == GAMMA_SAMPLES && contract_fail == 0,
        alloc::format!("{} sampled points, {contract_fail} not mapped to R", gamma_samples.len()),
    );

    Ok(ParamReport {
        resolution: bundle.resolution,
        checks,
        f_gradient_ranks,
        b_gradient_ranks,
        gamma_samples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingOutcome {
    pub resolution: TypoResolution,
    /// The quartic composed with `g` is the zero polynomial.
    pub composition_zero: bool,
    /// The projection composed with `g` is `(p:q:r)` times a common factor,
    /// as a polynomial identity.
    pub inverse_identity: bool,
}

impl ReadingOutcome {
    pub fn passed(&self) -> bool {
        self.composition_zero && self.inverse_identity
    }
}

/// Evaluate every reading of the inverse map at `r`, symbolically.
pub fn reading_validation(r: &[Scalar]) -> Result<Vec<ReadingOutcome>> {
    let quartic = space_quartic(r)?;
    let mut out = Vec::new();
    for resolution in TypoResolution::ALL {
        let bundle = build_parametrization_with(r, resolution)?;
        let composition_zero = quartic.substitute(&bundle.g)?.is_zero();
        let images = bundle
            .projection
            .iter()
            .map(|l| l.substitute(&bundle.g))
            .collect::<Result<Vec<_>>>()?;
        let field = r[0].field();
        let vars: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(i, 3, field)).collect();
        let mut inverse_identity = !images.iter().all(MultiPoly::is_zero);
        for i in 0..3 {
            for j in (i + 1)..3 {
                let minor = &(&images[i] * &vars[j]) - &(&images[j] * &vars[i]);
                inverse_identity &= minor.is_zero();
            }
        }
        out.push(ReadingOutcome {
            resolution,
            composition_zero,
            inverse_identity,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_coords;

    const Q: Field = Field::Rational;

    fn r0() -> Vec<Scalar> {
        int_coords(&[1, 2, 3, 5], Q)
    }

    #[test]
    fn fixed_points_do_not_depend_on_r() {
        let b = build_parametrization(&r0()).unwrap();
        assert_eq!(b.f_points[3], int_coords(&[1, 0, 0], Q));
        assert_eq!(b.b_points[3], int_coords(&[0, 1, 0], Q));
        assert_eq!(b.f[0], &MultiPoly::var(0, 3, Q) * &b.gamma);
        assert_eq!(b.f[3], b.delta);
    }

    #[test]
    fn contracted_lines_share_an_image() {
        let b = build_parametrization(&r0()).unwrap();
        let r1 = int_coords(&[-2, 2, 3, 5], Q);
        assert!(projectively_equal(&pi_of(&b, &r1).unwrap(), &b.f_points[0]));
        // R itself is the centre of projection.
        assert!(pi_of(&b, &r0()).unwrap().iter().all(Scalar::is_zero));
        // A point on the line through R and R_1 lands on F_1 too.
        let mid: Vec<Scalar> = r0().iter().zip(&r1).map(|(u, v)| &(u * &Scalar::from_int(3, Q)) + v).collect();
        assert!(projectively_equal(&pi_of(&b, &mid).unwrap(), &b.f_points[0]));
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        for r in [[0, 1, 2, 3], [1, 1, 2, 3], [1, 2, 3, 3], [2, 1, 2, 3], [1, 2, 2, 3]] {
            assert!(matches!(
                build_parametrization(&int_coords(&r, Q)),
                Err(Error::DegenerateParameter(_))
            ));
        }
        assert!(build_parametrization(&int_coords(&[1, 2, 3], Q)).is_err());
    }

    #[test]
    fn only_the_validated_reading_passes() {
        let outcomes = reading_validation(&r0()).unwrap();
        assert_eq!(outcomes.len(), 4);
        for o in &outcomes {
            assert_eq!(o.passed(), o.resolution == VALIDATED_RESOLUTION, "{}", o.resolution.label());
        }
    }

    #[test]
    fn verification_at_a_fixed_point() {
        let b = build_parametrization(&r0()).unwrap();
        let report = verify_parametrization(&b, &mut Rng::new(1)).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.f_gradient_ranks, [1, 1, 1, 1]);
        assert_eq!(report.b_gradient_ranks, [2, 2, 2, 2]);
        assert_eq!(report.gamma_samples.len(), GAMMA_SAMPLES);
    }

    #[test]
    fn verification_fails_under_a_wrong_reading() {
        let wrong = TypoResolution {
            g2_f1: G2Reading::ThreeCD,
            g3_f1: G3Reading::AsPrinted,
        };
        let b = build_parametrization_with(&r0(), wrong).unwrap();
        let report = verify_parametrization(&b, &mut Rng::new(1)).unwrap();
        assert!(!report.passed());
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"quartic_composition"));
        assert!(report.checks.iter().any(|c| c.detail.contains(wrong.label())));
    }

    #[test]
    fn chords_find_points_on_a_cubic() {
        // y^2 = x^3 - 2 with P = (3, 5) and 2P.
        let ctx = RingContext::standard(3, Q);
        let cubic = ctx.parse("-x^3+y^2*z+2*z^3").unwrap();
        let known = [
            int_coords(&[3, 5, 1], Q),
            int_coords(&[1290, -383, 1000], Q),
            int_coords(&[0, 1, 0], Q),
        ];
        let pts = chord_points(&cubic, &known, 3, 100, |_| Ok(true)).unwrap();
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert!(cubic.evaluate(p).unwrap().is_zero());
        }
    }
}
