use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::monomial::{multi_indices_up_to, Monomial};
use crate::exact::{Field, Scalar};
use crate::{Error, Result};

/// A sparse polynomial in `nvars` variables over one [`Field`].
///
/// Zero coefficients are never stored, so the zero polynomial has no terms.
/// Constructors accept inhomogeneous input; use [`MultiPoly::homogeneous`]
/// where homogeneity is part of the contract.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, field: Field) -> Self {
        Self {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let mut p = Self::zero(nvars, c.field());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(index: usize, nvars: usize, field: Field) -> Self {
        Self::term(Monomial::var(index, nvars), Scalar::one(field))
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(m.nvars(), c.field());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sum of `(exponents, coefficient)` pairs. Repeated monomials are combined.
    pub fn from_terms<I>(nvars: usize, field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(nvars, field);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            c.check_field(field)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Like [`MultiPoly::from_terms`], but rejects inhomogeneous results.
    pub fn homogeneous<I>(nvars: usize, field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let p = Self::from_terms(nvars, field, terms)?;
        if p.is_homogeneous() {
            Ok(p)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Integer-coefficient shorthand: `&[(coeff, &[exponents])]`.
    pub fn from_int_terms(nvars: usize, field: Field, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(nvars, field);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial::new(e.to_vec()), Scalar::from_int(*c, field));
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn to_field(&self, field: Field) -> Result<Self> {
        let mut out = Self::zero(self.nvars, field);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.embed(field)?);
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.nvars, self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        c.check_field(self.field)?;
        if c.is_zero() {
            return Ok(Self::zero(self.nvars, self.field));
        }
        Ok(Self {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        })
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Scalar::from_int(k, self.field)).expect("same field")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Scalar::one(self.field), self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at a coordinate vector.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        self.check_point(point)?;
        let powers = PowerTable::new(point, self.max_exponents());
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            acc = &acc + &(c * &powers.monomial(m.exponents()));
        }
        Ok(acc)
    }

    fn check_point(&self, point: &[Scalar]) -> Result<()> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        for s in point {
            s.check_field(self.field)?;
        }
        Ok(())
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut out = alloc::vec![0; self.nvars];
        for m in self.terms.keys() {
            for (o, e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut order = alloc::vec![0; self.nvars];
        order[var] = 1;
        self.derivative(&order)
    }

    /// Mixed partial derivative `d^|order| / dx^order`.
    pub fn derivative(&self, order: &[u32]) -> Self {
        assert_eq!(order.len(), self.nvars);
        let mut out = Self::zero(self.nvars, self.field);
        for (m, c) in &self.terms {
            if let Some((factor, rest)) = differentiate_monomial(m.exponents(), order) {
                out.add_term(Monomial::new(rest), c * &Scalar::from_int(factor, self.field));
            }
        }
        out
    }

    /// True iff every partial derivative of order at most `m - 1` vanishes at `point`.
    pub fn vanishes_to_order(&self, point: &[Scalar], m: u32) -> Result<bool> {
        if m == 0 {
            return Err(Error::InvalidArgument("multiplicity must be at least 1".into()));
        }
        self.check_point(point)?;
        let powers = PowerTable::new(point, self.max_exponents());
        for alpha in multi_indices_up_to(self.nvars, m - 1) {
            let mut acc = Scalar::zero(self.field);
            for (mono, c) in &self.terms {
                if let Some((factor, rest)) = differentiate_monomial(mono.exponents(), alpha.exponents()) {
                    let v = c * &powers.monomial(&rest);
                    acc = &acc + &(&v * &Scalar::from_int(factor, self.field));
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest `m` (capped at `cap`) with `vanishes_to_order(point, m)`; 0 if `p(point) != 0`.
    pub fn order_at(&self, point: &[Scalar], cap: u32) -> Result<u32> {
        let mut m = 0;
        while m < cap && self.vanishes_to_order(point, m + 1)? {
            m += 1;
        }
        Ok(m)
    }

    /// Composition `p(images[0], ..., images[n-1])`.
    ///
    /// The images must share one ring and be homogeneous of one common degree
    /// (zero images are allowed).
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let Some(first) = images.first() else {
            return Err(Error::InvalidArgument("substitution into a ring with no variables".into()));
        };
        let (target_vars, field) = (first.nvars, first.field);
        if field != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: field,
            });
        }
        let mut common_degree = None;
        for img in images {
            img.check_compatible(first)?;
            if !img.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            if let Some(d) = img.degree() {
                match common_degree {
                    None => common_degree = Some(d),
                    Some(c) if c != d => {
                        return Err(Error::InvalidArgument("images have different degrees".into()))
                    }
                    _ => {}
                }
            }
        }
        let maxes = self.max_exponents();
        let powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .zip(&maxes)
            .map(|(img, &max)| {
                let mut row = Vec::with_capacity(max as usize + 1);
                row.push(MultiPoly::constant(Scalar::one(field), target_vars));
                for k in 1..=max as usize {
                    let next = &row[k - 1] * img;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut out = MultiPoly::zero(target_vars, field);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target_vars);
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[k][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Split off the variables in `block`: returns the map
    /// `monomial in block variables -> coefficient polynomial in the rest`.
    ///
    /// The remaining variables keep their relative order.
    pub fn coefficients_wrt(&self, block: &[usize]) -> Result<BTreeMap<Monomial, MultiPoly>> {
        let (block, rest) = split_indices(self.nvars, block)?;
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            let key = Monomial::new(block.iter().map(|&i| e[i]).collect());
            let inner = Monomial::new(rest.iter().map(|&i| e[i]).collect());
            out.entry(key)
                .or_insert_with(|| MultiPoly::zero(rest.len(), self.field))
                .add_term(inner, c.clone());
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Inverse of [`MultiPoly::coefficients_wrt`].
    pub fn from_block_coefficients(
        nvars: usize,
        field: Field,
        block: &[usize],
        coefficients: &BTreeMap<Monomial, MultiPoly>,
    ) -> Result<Self> {
        let (block, rest) = split_indices(nvars, block)?;
        let mut out = Self::zero(nvars, field);
        for (key, poly) in coefficients {
            if key.nvars() != block.len() || poly.nvars != rest.len() {
                return Err(Error::LengthMismatch {
                    expected: block.len(),
                    found: key.nvars(),
                });
            }
            for (inner, c) in &poly.terms {
                c.check_field(field)?;
                let mut e = alloc::vec![0; nvars];
                for (&i, &x) in block.iter().zip(key.exponents()) {
                    e[i] = x;
                }
                for (&i, &x) in rest.iter().zip(inner.exponents()) {
                    e[i] = x;
                }
                out.add_term(Monomial::new(e), c.clone());
            }
        }
        Ok(out)
    }

    /// Coefficients on the given monomial list; fails if a term falls outside it.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Result<Vec<Scalar>> {
        let covered = self.terms.keys().all(|m| basis.contains(m));
        if !covered {
            return Err(Error::InvalidArgument("polynomial has terms outside the basis".into()));
        }
        Ok(basis.iter().map(|m| self.coeff(m)).collect())
    }

    pub fn from_coefficient_vector(basis: &[Monomial], coeffs: &[Scalar], field: Field) -> Result<Self> {
        if basis.len() != coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: basis.len(),
                found: coeffs.len(),
            });
        }
        let nvars = basis.first().map_or(0, Monomial::nvars);
        Self::from_terms(nvars, field, basis.iter().cloned().zip(coeffs.iter().cloned()))
    }

    /// Set the variables in `vars` to `values`; the result lives in the ring
    /// of the remaining variables, in their original order.
    pub fn specialize(&self, vars: &[usize], values: &[Scalar]) -> Result<MultiPoly> {
        if vars.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: vars.len(),
                found: values.len(),
            });
        }
        for v in values {
            v.check_field(self.field)?;
        }
        let (sorted, rest) = split_indices(self.nvars, vars)?;
        let ordered: Vec<&Scalar> = sorted
            .iter()
            .map(|i| &values[vars.iter().position(|v| v == i).expect("index from block")])
            .collect();
        let mut out = Self::zero(rest.len(), self.field);
        for (key, coeff) in self.coefficients_wrt(vars)? {
            let mut value = Scalar::one(self.field);
            for (x, &e) in ordered.iter().zip(key.exponents()) {
                if e > 0 {
                    value = &value * &x.pow(e);
                }
            }
            out = &out + &coeff.scale(&value)?;
        }
        Ok(out)
    }

    /// Reinterpret in a ring with more variables by placing variable `i` at `positions[i]`.
    pub fn embed_vars(&self, new_nvars: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.nvars);
        let mut out = Self::zero(new_nvars, self.field);
        for (m, c) in &self.terms {
            let mut e = alloc::vec![0; new_nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[positions[i]] += x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }
}

/// Coefficient and exponents of `d^order x^exps`, or `None` if it is zero.
fn differentiate_monomial(exps: &[u32], order: &[u32]) -> Option<(i64, Vec<u32>)> {
    let mut factor: i64 = 1;
    let mut rest = Vec::with_capacity(exps.len());
    for (&e, &k) in exps.iter().zip(order) {
        if k > e {
            return None;
        }
        for j in 0..k {
            factor = factor
                .checked_mul(i64::from(e - j))
                .expect("derivative coefficient overflow");
        }
        rest.push(e - k);
    }
    Some((factor, rest))
}

fn split_indices(nvars: usize, block: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != block.len() || sorted.last().is_some_and(|&i| i >= nvars) {
        return Err(Error::InvalidArgument("block must be distinct variable indices".into()));
    }
    let rest = (0..nvars).filter(|i| !sorted.contains(i)).collect();
    Ok((sorted, rest))
}

struct PowerTable {
    powers: Vec<Vec<Scalar>>,
    field: Field,
}

impl PowerTable {
    fn new(point: &[Scalar], max: Vec<u32>) -> Self {
        let field = point.first().map_or(Field::Rational, Scalar::field);
        let powers = point
            .iter()
            .zip(max)
            .map(|(x, m)| {
                let mut row = Vec::with_capacity(m as usize + 1);
                row.push(Scalar::one(field));
                for k in 1..=m as usize {
                    let next = &row[k - 1] * x;
                    row.push(next);
                }
                row
            })
            .collect();
        Self { powers, field }
    }

    fn monomial(&self, exps: &[u32]) -> Scalar {
        let mut acc = Scalar::one(self.field);
        for (row, &e) in self.powers.iter().zip(exps) {
            if e > 0 {
                acc = &acc * &row[e as usize];
            }
        }
        acc
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            /// Panics if the operands live in different rings.
            fn $m(self, rhs: &'a MultiPoly) -> MultiPoly {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
