use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{Eisenstein, Rational};
use crate::{Error, Result};

/// Which coefficient field a value, polynomial, matrix or configuration lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Eisenstein,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Rational => "rational",
            Field::Eisenstein => "eisenstein",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "rational" => Some(Field::Rational),
            "eisenstein" => Some(Field::Eisenstein),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact field element tagged with its field.
///
/// The arithmetic operators panic when the operands disagree on the field or
/// when dividing by zero; the `checked_*` methods report those as errors.
/// Containers in this crate validate field tags on construction, so their
/// internal arithmetic never mixes fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Eis(Eisenstein),
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        match field {
            Field::Rational => Scalar::Rat(Rational::zero()),
            Field::Eisenstein => Scalar::Eis(Eisenstein::zero()),
        }
    }

    pub fn one(field: Field) -> Self {
        match field {
            Field::Rational => Scalar::Rat(Rational::one()),
            Field::Eisenstein => Scalar::Eis(Eisenstein::one()),
        }
    }

    pub fn from_int(n: i64, field: Field) -> Self {
        Self::from_rational(Rational::from(n), field)
    }

    pub fn from_rational(r: Rational, field: Field) -> Self {
        match field {
            Field::Rational => Scalar::Rat(r),
            Field::Eisenstein => Scalar::Eis(Eisenstein::from_rational(r)),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Eis(_) => Field::Eisenstein,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Eis(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Eis(e) => e.b.is_zero() && e.a.is_one(),
        }
    }

    /// The value as a rational, if it has no `w` component.
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Eis(e) if e.is_rational() => Some(e.a.clone()),
            Scalar::Eis(_) => None,
        }
    }

    /// Re-tag the value into `field`. Fails only when dropping a nonzero `w` part.
    pub fn embed(&self, field: Field) -> Result<Self> {
        match (self, field) {
            (Scalar::Rat(r), f) => Ok(Self::from_rational(r.clone(), f)),
            (Scalar::Eis(e), Field::Eisenstein) => Ok(Scalar::Eis(e.clone())),
            (Scalar::Eis(e), Field::Rational) if e.is_rational() => Ok(Scalar::Rat(e.a.clone())),
            (Scalar::Eis(_), Field::Rational) => Err(Error::FieldMismatch {
                expected: Field::Rational,
                found: Field::Eisenstein,
            }),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Scalar::Rat(r) => r.recip().map(Scalar::Rat).ok_or(Error::DivisionByZero),
            Scalar::Eis(e) => e.inv().map(Scalar::Eis).ok_or(Error::DivisionByZero),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one(self.field());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub(crate) fn check_field(&self, field: Field) -> Result<()> {
        if self.field() == field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: field,
                found: self.field(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        rhs.check_field(self.field())?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        rhs.check_field(self.field())?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        rhs.check_field(self.field())?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        rhs.check_field(self.field())?;
        let inv = rhs.inv()?;
        Ok(self * &inv)
    }

    /// Rational parts whose denominators must be cleared to make the value
    /// an algebraic integer.
    pub(crate) fn rational_parts(&self) -> impl Iterator<Item = &Rational> {
        let (first, second) = match self {
            Scalar::Rat(r) => (r, None),
            Scalar::Eis(e) => (&e.a, Some(&e.b)),
        };
        core::iter::once(first).chain(second)
    }

    pub(crate) fn scale_int(&self, k: &BigInt) -> Self {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.scale_int(k)),
            Scalar::Eis(e) => Scalar::Eis(Eisenstein::new(e.a.scale_int(k), e.b.scale_int(k))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Eis(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn mismatch(l: &Scalar, r: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", l.field(), r.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Eis(a), Scalar::Eis(b)) => Scalar::Eis(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Eis(a), Scalar::Eis(b)) => Scalar::Eis(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Eis(a), Scalar::Eis(b)) => Scalar::Eis(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        match self.checked_div(rhs) {
            Ok(v) => v,
            Err(Error::DivisionByZero) => panic!("division by zero"),
            Err(_) => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Eis(a) => Scalar::Eis(-a),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);
