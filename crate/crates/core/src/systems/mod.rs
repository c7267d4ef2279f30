//! Linear systems of hypersurfaces through fat points.

mod probe;

pub use probe::{
    generic_system, index_sweep, multiplicity_index, speciality_index, unexpectedness_probe, GenericOutcome,
    trial_seeds, IndexReport, IndexRow, IndexValue, ProbeOutcome, TrialRecord, Verdict, MIN_TRIALS,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::{projectively_equal, Field, Scalar};
use crate::linalg::{ExactMatrix, KernelBasis};
use crate::mpoly::{monomial_basis, MultiPoly};
use crate::{binomial, Error, Result};

/// A projective point with a vanishing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPoint {
    pub coords: Vec<Scalar>,
    pub mult: u32,
}

impl FatPoint {
    pub fn new(coords: Vec<Scalar>, mult: u32) -> Self {
        Self { coords, mult }
    }

    pub fn simple(coords: Vec<Scalar>) -> Self {
        Self::new(coords, 1)
    }
}

/// A finite set of distinct fat points in P^N over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointConfig {
    ambient_dim: usize,
    field: Field,
    points: Vec<FatPoint>,
    label: String,
}

impl FatPointConfig {
    pub fn new(ambient_dim: usize, field: Field, points: Vec<FatPoint>, label: impl Into<String>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidConfig("ambient dimension must be at least 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != ambient_dim + 1 {
                return Err(Error::InvalidConfig(alloc::format!(
                    "point {i} has {} coordinates, expected {}",
                    p.coords.len(),
                    ambient_dim + 1
                )));
            }
            if p.mult == 0 {
                return Err(Error::InvalidConfig(alloc::format!("point {i} has multiplicity 0")));
            }
            if p.coords.iter().all(Scalar::is_zero) {
                return Err(Error::InvalidConfig(alloc::format!("point {i} is the zero vector")));
            }
            for s in &p.coords {
                s.check_field(field)?;
            }
            if let Some(j) = points[..i].iter().position(|q| projectively_equal(&q.coords, &p.coords)) {
                return Err(Error::InvalidConfig(alloc::format!("points {j} and {i} coincide")));
            }
        }
        Ok(Self {
            ambient_dim,
            field,
            points,
            label: label.into(),
        })
    }

    pub fn empty(ambient_dim: usize, field: Field, label: impl Into<String>) -> Self {
        Self::new(ambient_dim, field, Vec::new(), label).expect("empty configuration is valid")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &[FatPoint] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn mults(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.mult).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.points.iter().all(|p| p.mult == 1)
    }

    /// Number of linear conditions the points impose naively.
    pub fn condition_count(&self) -> u64 {
        let n = self.ambient_dim as u64;
        self.points
            .iter()
            .map(|p| binomial(n + u64::from(p.mult) - 1, n))
            .sum()
    }

    /// A copy with one more point appended.
    pub fn with_point(&self, point: FatPoint) -> Result<Self> {
        let mut points = self.points.clone();
        points.push(point);
        Self::new(self.ambient_dim, self.field, points, self.label.clone())
    }

    /// Re-tag every coordinate into `field` (rational configurations embed into Eisenstein ones).
    pub fn to_field(&self, field: Field) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| {
                Ok(FatPoint::new(
                    p.coords.iter().map(|s| s.embed(field)).collect::<Result<_>>()?,
                    p.mult,
                ))
            })
            .collect::<Result<_>>()?;
        Self::new(self.ambient_dim, field, points, self.label.clone())
    }
}

/// Dimensions and kernel of the degree-`d` system through a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystemResult {
    pub degree: u32,
    pub monomial_count: usize,
    pub condition_rows: usize,
    pub conditions_rank: usize,
    /// Dimension of the vector space of forms.
    pub vdim_actual: usize,
    /// Projective dimension, `vdim_actual - 1`.
    pub pdim_actual: i64,
    /// Projective expected dimension from the naive conditions count.
    pub edim: i64,
    pub special: bool,
    pub kernel: KernelBasis,
}

impl LinearSystemResult {
    /// Kernel vectors as polynomials in `nvars` variables.
    pub fn kernel_polys(&self, nvars: usize, field: Field) -> Vec<MultiPoly> {
        let basis = monomial_basis(nvars, self.degree);
        self.kernel
            .vectors
            .iter()
            .map(|v| MultiPoly::from_coefficient_vector(&basis, v, field).expect("kernel vector matches basis"))
            .collect()
    }
}

/// `max(-1, binom(N+d, N) - sum binom(N+m_i-1, N) - 1)`.
pub fn expected_dim(ambient_dim: usize, degree: u32, mults: &[u32]) -> i64 {
    let n = ambient_dim as u64;
    let forms = binomial(n + u64::from(degree), n) as i64;
    let conditions: i64 = mults
        .iter()
        .map(|&m| if m == 0 { 0 } else { binomial(n + u64::from(m) - 1, n) as i64 })
        .sum();
    (forms - conditions - 1).max(-1)
}

/// One row per point and per partial derivative of order `min(m - 1, d)` for
/// a point of multiplicity `m`; one column per degree-`d` monomial in graded-lex order. The
/// entry is that derivative of that monomial evaluated at the point.
pub fn conditions_matrix(cfg: &FatPointConfig, degree: u32) -> ExactMatrix {
    let nvars = cfg.nvars();
    let field = cfg.field();
    let basis = monomial_basis(nvars, degree);
    let mut rows = Vec::new();
    for p in cfg.points() {
        let powers: Vec<Vec<Scalar>> = p
            .coords
            .iter()
            .map(|x| {
                let mut row = alloc::vec![Scalar::one(field)];
                for k in 1..=degree as usize {
                    let next = &row[k - 1] * x;
                    row.push(next);
                }
                row
            })
            .collect();
        // By Euler's formula the partials of order exactly m - 1 suffice; below
        // that order every coefficient is forced to vanish.
        for alpha in monomial_basis(nvars, (p.mult - 1).min(degree)) {
            let row = basis
                .iter()
                .map(|mono| derivative_value(mono.exponents(), alpha.exponents(), &powers, field))
                .collect();
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(rows, basis.len(), field).expect("rows have basis length")
}

fn derivative_value(exps: &[u32], alpha: &[u32], powers: &[Vec<Scalar>], field: Field) -> Scalar {
    let mut factor: i64 = 1;
    let mut value = Scalar::one(field);
    for ((&e, &a), pw) in exps.iter().zip(alpha).zip(powers) {
        if a > e {
            return Scalar::zero(field);
        }
        for j in 0..a {
            factor *= i64::from(e - j);
        }
        let rest = (e - a) as usize;
        if rest > 0 {
            value = &value * &pw[rest];
        }
    }
    &value * &Scalar::from_int(factor, field)
}

/// Actual and expected dimension of the degree-`d` forms through `cfg`.
///
/// Before returning, every kernel form is checked to vanish to the required
/// order at every point.
pub fn linear_system(cfg: &FatPointConfig, degree: u32) -> Result<LinearSystemResult> {
    let m = conditions_matrix(cfg, degree);
    let kernel = m.kernel_basis();
    let conditions_rank = m.cols() - kernel.dim();
    let vdim_actual = kernel.dim();
    let pdim_actual = vdim_actual as i64 - 1;
    let edim = expected_dim(cfg.ambient_dim(), degree, &cfg.mults());
    let result = LinearSystemResult {
        degree,
        monomial_count: m.cols(),
        condition_rows: m.rows(),
        conditions_rank,
        vdim_actual,
        pdim_actual,
        edim,
        special: pdim_actual > edim,
        kernel,
    };
    for (k, f) in result.kernel_polys(cfg.nvars(), cfg.field()).iter().enumerate() {
        for (i, p) in cfg.points().iter().enumerate() {
            if !f.vanishes_to_order(&p.coords, p.mult)? {
                return Err(Error::SelfCheck(alloc::format!(
                    "kernel form {k} does not vanish to order {} at point {i}",
                    p.mult
                )));
            }
        }
    }
    Ok(result)
}
