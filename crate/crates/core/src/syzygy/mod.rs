//! Graded syzygies of `(f_x, f_y, f_z, f_w, l)` and the plane map they define.
//!
//! Syzygies are found one degree at a time as the kernel of an exact matrix.
//! When the last generator is a linear form `l`, relations whose first four
//! components are all multiples of `l` restrict to zero on the plane `l = 0`
//! and define no map there. They are counted separately: a syzygy is
//! *nontrivial* when its first four components do not all vanish on `l`.

mod harness;

pub use harness::{
    conjecture_harness, HarnessOptions, HarnessReport, HarnessRun, ImageReport, IncidenceRow, LineSample,
    LineRow, PlaneHits, IndependenceReport, RunStatus, DEFAULT_RUNS,
};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::{Field, Scalar};
use crate::linalg::ExactMatrix;
use crate::mpoly::{monomial_basis, Monomial, MultiPoly};
use crate::systems::FatPointConfig;
use crate::{Error, Result};

/// The linear form `sum c_i x_i` of the hyperplane dual to the point `c`.
pub fn dual_linear_form(coords: &[Scalar]) -> Result<MultiPoly> {
    let Some(first) = coords.first() else {
        return Err(Error::InvalidArgument("empty coordinate vector".into()));
    };
    let field = first.field();
    let n = coords.len();
    MultiPoly::from_terms(n, field, coords.iter().enumerate().map(|(i, c)| (Monomial::var(i, n), c.clone())))
}

/// Product of the forms dual to the points of a reduced configuration.
pub fn dual_plane_product(z: &FatPointConfig) -> Result<MultiPoly> {
    if !z.is_reduced() {
        return Err(Error::InvalidArgument("all points must be simple".into()));
    }
    let mut f = MultiPoly::constant(Scalar::one(z.field()), z.nvars());
    for p in z.points() {
        f = f.checked_mul(&dual_linear_form(&p.coords)?)?;
    }
    Ok(f)
}

/// The partial derivatives of a homogeneous form.
pub fn jacobian(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    Ok((0..f.nvars()).map(|i| f.partial(i)).collect())
}

/// Homogeneous generators with declared degrees (a zero generator keeps its
/// declared degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorList {
    gens: Vec<MultiPoly>,
    degrees: Vec<u32>,
    line: Option<MultiPoly>,
}

impl GeneratorList {
    pub fn new(gens: Vec<MultiPoly>, degrees: Vec<u32>) -> Result<Self> {
        if gens.len() != degrees.len() {
            return Err(Error::LengthMismatch {
                expected: gens.len(),
                found: degrees.len(),
            });
        }
        let Some(first) = gens.first() else {
            return Err(Error::InvalidArgument("no generators".into()));
        };
        for (g, &d) in gens.iter().zip(&degrees) {
            if g.nvars() != first.nvars() || g.field() != first.field() {
                return Err(Error::RingMismatch {
                    expected: first.nvars(),
                    found: g.nvars(),
                });
            }
            if !g.is_homogeneous() || g.degree().is_some_and(|e| e != d) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Self { gens, degrees, line: None })
    }

    /// Degrees read off the generators, which must all be nonzero.
    pub fn from_polys(gens: Vec<MultiPoly>) -> Result<Self> {
        let degrees = gens
            .iter()
            .map(|g| g.degree().ok_or_else(|| Error::InvalidArgument("zero generator needs a degree".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, degrees)
    }

    /// `(f_x, f_y, ..., l)`, remembering `l` so nontrivial syzygies can be told apart.
    pub fn jacobian_plus_line(f: &MultiPoly, line: &MultiPoly) -> Result<Self> {
        if line.degree() != Some(1) || !line.is_homogeneous() {
            return Err(Error::InvalidArgument("the last generator must be a linear form".into()));
        }
        let d = f.degree().ok_or(Error::NotHomogeneous)?;
        if d == 0 {
            return Err(Error::InvalidArgument("f must have positive degree".into()));
        }
        let mut gens = jacobian(f)?;
        let mut degrees = alloc::vec![d - 1; gens.len()];
        gens.push(line.clone());
        degrees.push(1);
        let mut out = Self::new(gens, degrees)?;
        out.line = Some(line.clone());
        Ok(out)
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn line(&self) -> Option<&MultiPoly> {
        self.line.as_ref()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.gens[0].nvars()
    }

    pub fn field(&self) -> Field {
        self.gens[0].field()
    }
}

/// A relation `sum s_i g_i = 0` of graded degree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector {
    pub components: Vec<MultiPoly>,
    pub degree: u32,
}

impl SyzygyVector {
    /// Does `sum s_i g_i` vanish identically?
    pub fn is_syzygy_of(&self, gens: &GeneratorList) -> Result<bool> {
        if self.components.len() != gens.len() {
            return Ok(false);
        }
        let mut acc = MultiPoly::zero(gens.nvars(), gens.field());
        for (s, g) in self.components.iter().zip(gens.gens()) {
            acc = acc.checked_add(&s.checked_mul(g)?)?;
        }
        Ok(acc.is_zero())
    }

    /// Coordinates on the column blocks of [`syzygy_matrix`].
    fn to_column_vector(&self, blocks: &[Vec<Monomial>], field: Field) -> Result<Vec<Scalar>> {
        let mut v = Vec::new();
        for (s, block) in self.components.iter().zip(blocks) {
            v.extend(s.coefficient_vector(block)?);
        }
        if v.is_empty() {
            return Ok(alloc::vec![Scalar::zero(field)]);
        }
        Ok(v)
    }
}

/// The matrix of `(s_i) -> sum s_i g_i` in degree `t`, with the monomial
/// blocks indexing its columns (an empty block when `t < deg g_i`).
pub fn syzygy_matrix(gens: &GeneratorList, t: u32) -> Result<(ExactMatrix, Vec<Vec<Monomial>>)> {
    let n = gens.nvars();
    let field = gens.field();
    let rows_basis = monomial_basis(n, t);
    let row_index: BTreeMap<&Monomial, usize> = rows_basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let blocks: Vec<Vec<Monomial>> = gens
        .degrees()
        .iter()
        .map(|&d| if d <= t { monomial_basis(n, t - d) } else { Vec::new() })
        .collect();
    let cols: usize = blocks.iter().map(Vec::len).sum();
    let mut m = ExactMatrix::zeros(rows_basis.len(), cols, field);
    let mut col = 0;
    for (g, block) in gens.gens().iter().zip(&blocks) {
        for mono in block {
            for (gm, c) in g.terms() {
                let target = gm.mul(mono);
                let row = *row_index.get(&target).ok_or(Error::NotHomogeneous)?;
                m.set(row, col, c.clone())?;
            }
            col += 1;
        }
    }
    Ok((m, blocks))
}

fn vector_to_syzygy(v: &[Scalar], blocks: &[Vec<Monomial>], t: u32, field: Field, nvars: usize) -> Result<SyzygyVector> {
    let v = crate::exact::primitive_vector(v);
    let mut components = Vec::with_capacity(blocks.len());
    let mut offset = 0;
    for block in blocks {
        let part = &v[offset..offset + block.len()];
        offset += block.len();
        components.push(if block.is_empty() {
            MultiPoly::zero(nvars, field)
        } else {
            MultiPoly::from_coefficient_vector(block, part, field)?
        });
    }
    Ok(SyzygyVector { components, degree: t })
}

/// A basis of all syzygies of degree `t`, Koszul and trivial ones included.
pub fn syzygies_in_degree(gens: &GeneratorList, t: u32) -> Result<Vec<SyzygyVector>> {
    let (m, blocks) = syzygy_matrix(gens, t)?;
    if m.cols() == 0 {
        return Ok(Vec::new());
    }
    m.kernel_basis()
        .vectors
        .iter()
        .map(|v| vector_to_syzygy(v, &blocks, t, gens.field(), gens.nvars()))
        .collect()
}

/// Restriction to the plane `line = 0`: eliminate the last variable with a
/// nonzero coefficient in `line`.
fn restriction_images(line: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let n = line.nvars();
    let field = line.field();
    let coeffs: Vec<Scalar> = (0..n).map(|i| line.coeff(&Monomial::var(i, n))).collect();
    let k = (0..n)
        .rev()
        .find(|&i| !coeffs[i].is_zero())
        .ok_or_else(|| Error::InvalidArgument("zero linear form".into()))?;
    let inv = coeffs[k].inv()?;
    let mut images: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(i, n, field)).collect();
    let mut sub = MultiPoly::zero(n, field);
    for (i, c) in coeffs.iter().enumerate() {
        if i != k && !c.is_zero() {
            sub = &sub - &MultiPoly::var(i, n, field).scale(&(c * &inv))?;
        }
    }
    images[k] = sub;
    Ok(images)
}

fn restrict(p: &MultiPoly, images: &[MultiPoly]) -> Result<MultiPoly> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    p.substitute(images)
}

/// Rows of restricted map components, for rank comparisons modulo the line.
fn restricted_rows(gens: &GeneratorList, vectors: &[SyzygyVector], line: &MultiPoly) -> Result<ExactMatrix> {
    let images = restriction_images(line)?;
    let n = line.nvars();
    let field = line.field();
    let mut rows = Vec::with_capacity(vectors.len());
    let mut width = 0;
    for v in vectors {
        let mut row = Vec::new();
        for (s, &dg) in v.components[..map_len(gens)].iter().zip(gens.degrees()) {
            let Some(d) = v.degree.checked_sub(dg) else {
                continue;
            };
            let r = restrict(s, &images)?;
            row.extend(r.coefficient_vector(&monomial_basis(n, d))?);
        }
        width = row.len();
        rows.push(row);
    }
    ExactMatrix::from_rows(rows, width, field)
}

fn map_len(gens: &GeneratorList) -> usize {
    if gens.line().is_some() {
        gens.len() - 1
    } else {
        gens.len()
    }
}

/// Dimension of the span of `vectors` modulo syzygies that vanish on the line
/// (all of `vectors` must share one degree). Without a line this is the rank.
pub fn nontrivial_rank(gens: &GeneratorList, vectors: &[SyzygyVector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    match gens.line() {
        None => {
            let t = vectors[0].degree;
            let (_, blocks) = syzygy_matrix(gens, t)?;
            let rows = vectors
                .iter()
                .map(|v| v.to_column_vector(&blocks, gens.field()))
                .collect::<Result<Vec<_>>>()?;
            let width = rows[0].len();
            Ok(ExactMatrix::from_rows(rows, width, gens.field())?.rank())
        }
        Some(line) => Ok(restricted_rows(gens, vectors, line)?.rank()),
    }
}

/// Koszul relations `g_j e_i - g_i e_j` multiplied up to degree `t`.
pub fn koszul_syzygies(gens: &GeneratorList, t: u32) -> Vec<SyzygyVector> {
    let n = gens.nvars();
    let field = gens.field();
    let k = gens.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let (di, dj) = (gens.degrees()[i], gens.degrees()[j]);
            if di + dj > t || (gens.gens()[i].is_zero() && gens.gens()[j].is_zero()) {
                continue;
            }
            for m in monomial_basis(n, t - di - dj) {
                let mp = MultiPoly::term(m, Scalar::one(field));
                let mut components = alloc::vec![MultiPoly::zero(n, field); k];
                components[i] = &mp * &gens.gens()[j];
                components[j] = -(&mp * &gens.gens()[i]);
                out.push(SyzygyVector { components, degree: t });
            }
        }
    }
    out
}

/// Is `v` a combination of Koszul relations of its degree?
pub fn is_koszul_trivial(gens: &GeneratorList, v: &SyzygyVector) -> Result<bool> {
    let (_, blocks) = syzygy_matrix(gens, v.degree)?;
    let field = gens.field();
    let kos = koszul_syzygies(gens, v.degree);
    let target = v.to_column_vector(&blocks, field)?;
    if target.iter().all(Scalar::is_zero) {
        return Ok(true);
    }
    if kos.is_empty() {
        return Ok(false);
    }
    let rows = kos
        .iter()
        .map(|k| k.to_column_vector(&blocks, field))
        .collect::<Result<Vec<_>>>()?;
    let width = target.len();
    let base = ExactMatrix::from_rows(rows, width, field)?;
    let with = base.stack(&ExactMatrix::from_rows(alloc::vec![target], width, field)?)?;
    Ok(with.rank() == base.rank())
}

/// Dimensions at one degree of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub t: u32,
    pub raw_dim: usize,
    pub nontrivial_dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairStatus {
    /// Two independent nontrivial syzygies in the least degree.
    Found,
    /// One nontrivial syzygy in the least degree; the second comes from a
    /// higher degree and is independent of the multiples of the first.
    SplitDegrees,
    /// Only one nontrivial syzygy up to the bound.
    OnlyOne,
    NotFound,
}

impl PairStatus {
    pub fn name(self) -> &'static str {
        match self {
            PairStatus::Found => "found",
            PairStatus::SplitDegrees => "split-degrees",
            PairStatus::OnlyOne => "only-one",
            PairStatus::NotFound => "not-found",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyPair {
    pub status: PairStatus,
    pub first: Option<SyzygyVector>,
    pub second: Option<SyzygyVector>,
    pub sweep: Vec<DegreeRow>,
}

fn multiples(v: &SyzygyVector, t: u32, nvars: usize, field: Field) -> Vec<SyzygyVector> {
    monomial_basis(nvars, t - v.degree)
        .into_iter()
        .map(|m| {
            let mp = MultiPoly::term(m, Scalar::one(field));
            SyzygyVector {
                components: v.components.iter().map(|s| &mp * s).collect(),
                degree: t,
            }
        })
        .collect()
}

/// Pick members of `candidates` that raise the nontrivial rank of `base`.
fn extend_independent(
    gens: &GeneratorList,
    base: &mut Vec<SyzygyVector>,
    candidates: Vec<SyzygyVector>,
    want: usize,
) -> Result<Vec<SyzygyVector>> {
    let mut picked = Vec::new();
    let mut rank = nontrivial_rank(gens, base)?;
    for c in candidates {
        if picked.len() == want {
            break;
        }
        base.push(c.clone());
        let r = nontrivial_rank(gens, base)?;
        if r > rank {
            rank = r;
            picked.push(c);
        } else {
            base.pop();
        }
    }
    Ok(picked)
}

/// Least-degree pair of syzygies that are independent modulo those vanishing
/// on the line, sweeping `t` up to `tmax`.
pub fn least_degree_syzygy_pair(gens: &GeneratorList, tmax: u32) -> Result<SyzygyPair> {
    let tmin = *gens.degrees().iter().min().expect("nonempty");
    let n = gens.nvars();
    let field = gens.field();
    let mut sweep = Vec::new();
    let mut first: Option<SyzygyVector> = None;
    for t in tmin..=tmax {
        let basis = syzygies_in_degree(gens, t)?;
        let nontrivial_dim = nontrivial_rank(gens, &basis)?;
        sweep.push(DegreeRow {
            t,
            raw_dim: basis.len(),
            nontrivial_dim,
        });
        match &first {
            None => {
                if nontrivial_dim == 0 {
                    continue;
                }
                let picked = extend_independent(gens, &mut Vec::new(), basis, 2)?;
                let mut it = picked.into_iter();
                let a = it.next().expect("positive rank");
                if let Some(b) = it.next() {
                    return Ok(SyzygyPair {
                        status: PairStatus::Found,
                        first: Some(a),
                        second: Some(b),
                        sweep,
                    });
                }
                first = Some(a);
            }
            Some(a) => {
                let mut base = multiples(a, t, n, field);
                let picked = extend_independent(gens, &mut base, basis, 1)?;
                if let Some(b) = picked.into_iter().next() {
                    return Ok(SyzygyPair {
                        status: PairStatus::SplitDegrees,
                        first,
                        second: Some(b),
                        sweep,
                    });
                }
            }
        }
    }
    let status = if first.is_some() {
        PairStatus::OnlyOne
    } else {
        PairStatus::NotFound
    };
    Ok(SyzygyPair {
        status,
        first,
        second: None,
        sweep,
    })
}

/// `(s_0 : s_1 : s_2 : s_3)`, the first four components of a syzygy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMap {
    pub components: Vec<MultiPoly>,
}

pub fn sigma_map(v: &SyzygyVector) -> Result<SigmaMap> {
    if v.components.len() < 4 {
        return Err(Error::InvalidArgument("a syzygy of at least four generators is required".into()));
    }
    let components = v.components[..4].to_vec();
    if components.iter().all(MultiPoly::is_zero) {
        return Err(Error::InvalidArgument("the map components are all zero".into()));
    }
    Ok(SigmaMap { components })
}

impl SigmaMap {
    /// The image point, or `None` where every component vanishes.
    pub fn eval(&self, q: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let v = self
            .components
            .iter()
            .map(|s| s.evaluate(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(if v.iter().all(Scalar::is_zero) { None } else { Some(v) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneOutcome {
    Plane(Vec<Scalar>),
    Collinear,
}

fn det3(m: [[&Scalar; 3]; 3]) -> Scalar {
    let t1 = m[0][0] * &(&(m[1][1] * m[2][2]) - &(m[1][2] * m[2][1]));
    let t2 = m[0][1] * &(&(m[1][0] * m[2][2]) - &(m[1][2] * m[2][0]));
    let t3 = m[0][2] * &(&(m[1][0] * m[2][1]) - &(m[1][1] * m[2][0]));
    &(&t1 - &t2) + &t3
}

/// The plane through three points of P^3, from the signed 3x3 minors.
pub fn phi_plane(q: &[Scalar], s: &[Scalar], s2: &[Scalar]) -> Result<PlaneOutcome> {
    for p in [q, s, s2] {
        if p.len() != 4 {
            return Err(Error::LengthMismatch {
                expected: 4,
                found: p.len(),
            });
        }
    }
    let rows = [q, s, s2];
    let mut coeffs = Vec::with_capacity(4);
    for skip in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m = [0, 1, 2].map(|r| [0, 1, 2].map(|k| &rows[r][cols[k]]));
        let d = det3(m);
        coeffs.push(if skip % 2 == 0 { d } else { -d });
    }
    if coeffs.iter().all(Scalar::is_zero) {
        Ok(PlaneOutcome::Collinear)
    } else {
        Ok(PlaneOutcome::Plane(coeffs))
    }
}
