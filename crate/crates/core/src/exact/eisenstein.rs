use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// An element `a + b*w` of `Q(w)`, where `w` is a primitive cube root of unity.
///
/// `w^2` is always rewritten as `-1 - w`, so every element has exactly one
/// representation in the basis `{1, w}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: Rational,
    pub b: Rational,
}

impl Eisenstein {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The primitive cube root of unity `w`.
    pub fn w() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// `w^k`, using `w^3 = 1`.
    pub fn w_pow(k: u32) -> Self {
        match k % 3 {
            0 => Self::one(),
            1 => Self::w(),
            _ => Self::new(Rational::from(-1), Rational::from(-1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a + b*w^2 = (a - b) - b*w`.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - ab + b^2`.
    pub fn norm(&self) -> Rational {
        &(&(&self.a * &self.a) - &(&self.a * &self.b)) + &(&self.b * &self.b)
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(Self {
            a: &c.a * &n,
            b: &c.b * &n,
        })
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let w_part = |b: &Rational| {
            if b.is_one() {
                alloc::string::String::from("w")
            } else {
                alloc::format!("{b}*w")
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}", w_part(&self.b.abs()))
            } else {
                write!(f, "{}", w_part(&self.b))
            }
        } else if self.b.is_negative() {
            write!(f, "{}-{}", self.a, w_part(&self.b.abs()))
        } else {
            write!(f, "{}+{}", self.a, w_part(&self.b))
        }
    }
}

impl<'a> Add<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &'a Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &'a Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2 = (ac - bd) + (ad + bc - bd)w
    fn mul(self, rhs: &'a Eisenstein) -> Eisenstein {
        let bd = &self.b * &rhs.b;
        Eisenstein {
            a: &(&self.a * &rhs.a) - &bd,
            b: &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) - &bd,
        }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -&self.a,
            b: -&self.b,
        }
    }
}
