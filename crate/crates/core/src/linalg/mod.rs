//! Dense exact matrices: fraction-free rank and kernel computation.
//!
//! [`ExactMatrix::rank`] and [`ExactMatrix::kernel_basis`] run Bareiss
//! elimination after scaling each row to algebraic-integer entries, so every
//! intermediate entry is a minor of the scaled matrix. [`oracle_rank`] is a
//! separate plain Gaussian elimination kept as an independent cross-check.

mod oracle;

pub use oracle::oracle_rank;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::exact::{Field, Rational, Scalar};
use crate::{Error, Result};

/// A dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Basis of a right kernel. Each vector is scaled so its first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<Scalar>>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, field: Field, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        for s in &data {
            s.check_field(field)?;
        }
        Ok(Self {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Self {
            rows,
            cols,
            field,
            data: alloc::vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// Builds from rows of equal length. An empty row list gives a `0 x cols` matrix.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: Field) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Self::new(n, cols, field, data)
    }

    pub fn from_ints(rows: usize, cols: usize, field: Field, values: &[i64]) -> Result<Self> {
        Self::new(rows, cols, field, values.iter().map(|&v| Scalar::from_int(v, field)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        value.check_field(self.field)?;
        self.data[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        for s in v {
            s.check_field(self.field)?;
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &ExactMatrix) -> Result<Self> {
        if other.cols != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        if other.field != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        })
    }

    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for &i in row_perm {
            for &j in col_perm {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: row_perm.len(),
            cols: col_perm.len(),
            field: self.field,
            data,
        }
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{v : M v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> KernelBasis {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let zero = Scalar::zero(self.field);
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = alloc::vec![zero.clone(); self.cols];
                v[f] = Scalar::one(self.field);
                for (k, &pc) in ech.pivots.iter().enumerate().rev() {
                    let row = &ech.rows[k];
                    let mut acc = zero.clone();
                    for j in (pc + 1)..self.cols {
                        if !row[j].is_zero() && !v[j].is_zero() {
                            acc = &acc + &(&row[j] * &v[j]);
                        }
                    }
                    v[pc] = -(&acc / &row[pc]);
                }
                crate::exact::normalize_projective(&v)
            })
            .collect();
        KernelBasis { vectors }
    }

    fn echelon(&self) -> Echelon {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows).map(|i| integral_row(self.row(i))).collect();
        let mut pivots = Vec::new();
        let mut prev = Scalar::one(self.field);
        let mut r = 0;
        for c in 0..self.cols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = &pivot_row[c];
            for row in bottom.iter_mut() {
                let lead = row[c].clone();
                for j in (c + 1)..self.cols {
                    let t = &(pivot * &row[j]) - &(&lead * &pivot_row[j]);
                    row[j] = if t.is_zero() { t } else { &t / &prev };
                }
                row[c] = Scalar::zero(self.field);
            }
            prev = pivot.clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        Echelon { rows: a, pivots }
    }

    /// Plain-text dump, one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.field);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| alloc::format!("{s}")).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Scales a row by the lcm of all denominators so its entries are algebraic integers.
fn integral_row(row: &[Scalar]) -> Vec<Scalar> {
    let lcm = Rational::lcm_denominator(row.iter().flat_map(Scalar::rational_parts));
    row.iter().map(|s| s.scale_int(&lcm)).collect()
}
