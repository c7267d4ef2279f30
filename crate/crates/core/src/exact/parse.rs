//! Text grammar for field elements.
//!
//! ```text
//! rational   := int | int "/" posint
//! eisenstein := rational
//!             | rational "*w" | ["-"] "w"
//!             | rational ("+" | "-") rational "*w"
//!             | rational ("+" | "-") "w"
//! ```
//!
//! The printers in this module emit exactly one canonical spelling per value,
//! and `parse(format(x)) == x`.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use super::{Eisenstein, Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where parsing failed.
    pub position: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

pub(crate) struct Cursor<'a> {
    pub(crate) text: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    pub(crate) fn peek_at(&self, offset: usize) -> Option<u8> {
        self.text.get(self.pos + offset).copied()
    }

    pub(crate) fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    pub(crate) fn error(&self, message: &'static str) -> ParseError {
        ParseError {
            position: self.pos,
            message,
        }
    }

    pub(crate) fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        // Only ASCII digits were consumed.
        let s = core::str::from_utf8(&self.text[start..self.pos]).map_err(|_| self.error("bad utf-8"))?;
        BigInt::from_str_radix(s, 10).map_err(|_| self.error("bad integer"))
    }

    pub(crate) fn nat(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| ParseError {
            position: start,
            message: "exponent too large",
        })
    }

    /// An unsigned rational `digits ["/" digits]`.
    pub(crate) fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let den_pos = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError {
                    position: den_pos,
                    message: "zero denominator",
                });
            }
            Ok(Rational::from_bigints(num, den).expect("nonzero denominator"))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    pub(crate) fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat(b'-');
        let r = self.unsigned_rational()?;
        Ok(if neg { -r } else { r })
    }

    /// Parses an Eisenstein element; stops at the first byte the grammar cannot extend with.
    pub(crate) fn eisenstein(&mut self) -> Result<Eisenstein, ParseError> {
        let neg = self.eat(b'-');
        if self.eat(b'w') {
            let b = if neg { Rational::from(-1) } else { Rational::one() };
            return Ok(Eisenstein::new(Rational::zero(), b));
        }
        let mut first = self.unsigned_rational()?;
        if neg {
            first = -first;
        }
        if self.peek() == Some(b'*') && self.peek_at(1) == Some(b'w') {
            self.pos += 2;
            return Ok(Eisenstein::new(Rational::zero(), first));
        }
        let sign = match self.peek() {
            Some(b'+') => 1,
            Some(b'-') => -1,
            _ => return Ok(Eisenstein::from_rational(first)),
        };
        // Only continue when a w-term follows; otherwise leave the sign for the caller.
        let save = self.pos;
        self.pos += 1;
        let second = if self.eat(b'w') {
            Rational::one()
        } else {
            match self.unsigned_rational() {
                Ok(r) if self.peek() == Some(b'*') && self.peek_at(1) == Some(b'w') => {
                    self.pos += 2;
                    r
                }
                _ => {
                    self.pos = save;
                    return Ok(Eisenstein::from_rational(first));
                }
            }
        };
        let second = if sign < 0 { -second } else { second };
        Ok(Eisenstein::new(first, second))
    }
}

/// Parse a field element of the requested field from its text form.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(text);
    let value = match field {
        Field::Rational => Scalar::Rat(cur.signed_rational()?),
        Field::Eisenstein => Scalar::Eis(cur.eisenstein()?),
    };
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(value)
}

impl Rational {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let r = cur.signed_rational()?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn rational_examples() {
        assert_eq!(
            parse_scalar("-3/4", Field::Rational).unwrap(),
            Scalar::Rat(Rational::new(-3, 4))
        );
        assert_eq!(
            parse_scalar("6/8", Field::Rational).unwrap().to_string(),
            "3/4"
        );
        assert!(parse_scalar("0", Field::Rational).unwrap().is_zero());
        assert!(parse_scalar("0", Field::Eisenstein).unwrap().is_zero());
        assert_eq!(
            parse_scalar("0", Field::Eisenstein).unwrap().field(),
            Field::Eisenstein
        );
    }

    #[test]
    fn eisenstein_examples() {
        let e = parse_scalar("1+2/3*w", Field::Eisenstein).unwrap();
        assert_eq!(
            e,
            Scalar::Eis(Eisenstein::new(Rational::one(), Rational::new(2, 3)))
        );
        let cases = [
            ("w", (0, 1)),
            ("-w", (0, -1)),
            ("3*w", (0, 3)),
            ("-3*w", (0, -3)),
            ("2-w", (2, -1)),
            ("-2+w", (-2, 1)),
            ("5", (5, 0)),
        ];
        for (text, (a, b)) in cases {
            let v = parse_scalar(text, Field::Eisenstein).unwrap();
            assert_eq!(
                v,
                Scalar::Eis(Eisenstein::new(Rational::from(a), Rational::from(b))),
                "{text}"
            );
            assert_eq!(v.to_string(), text);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_scalar("1/0", Field::Rational).unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_scalar("1/2x", Field::Rational).unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_scalar("w", Field::Rational).unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_scalar("1+2", Field::Eisenstein).unwrap_err();
        assert_eq!(e.position, 1);
        assert!(parse_scalar("", Field::Rational).is_err());
        assert!(parse_scalar("--1", Field::Rational).is_err());
    }
}
