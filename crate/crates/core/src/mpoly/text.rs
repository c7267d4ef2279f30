//! Text form of polynomials.
//!
//! A polynomial is a sum of terms `coeff*x^e1*y^e2*...`. Rational coefficients
//! are written bare (`-3/4*x^2*y`). Coefficients with a nonzero `w` part are
//! parenthesized (`(1-2*w)*x*z`), which keeps the cube root of unity `w`
//! distinct from a ring variable named `w`. Unit coefficients and exponents
//! of 1 are omitted, and terms appear from the largest monomial down. The
//! printer is the inverse of the parser on these canonical forms.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Monomial, MultiPoly};
use crate::exact::{Cursor, Field, Scalar};
use crate::{Error, Result};

/// Variable names and coefficient field for parsing and printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
    field: Field,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, field: Field) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidArgument("ring needs at least one variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidArgument(alloc::format!("bad variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(alloc::format!("duplicate variable name {n:?}")));
            }
        }
        Ok(Self { names, field })
    }

    /// `x, y, z, w` for up to four variables, `x0, x1, ...` beyond.
    pub fn standard(nvars: usize, field: Field) -> Self {
        const XYZW: [&str; 4] = ["x", "y", "z", "w"];
        let names: Vec<String> = if nvars <= 4 {
            XYZW[..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (0..nvars).map(|i| alloc::format!("x{i}")).collect()
        };
        Self { names, field }
    }

    /// Product ring `x, y, z[, w], a, b, c[, d]` for `n` point and `n` dual variables.
    pub fn product(n: usize, field: Field) -> Self {
        assert!(n <= 4);
        const XYZW: [&str; 4] = ["x", "y", "z", "w"];
        const ABCD: [&str; 4] = ["a", "b", "c", "d"];
        let names = XYZW[..n].iter().chain(&ABCD[..n]).map(|s| s.to_string()).collect();
        Self { names, field }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn format(&self, p: &MultiPoly) -> String {
        format_poly(p, &self.names)
    }

    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        parse_poly(text, self)
    }

    /// Parse an unexpanded expression with `+ - * ^` and parentheses.
    ///
    /// Numbers are nonnegative integers; whitespace is ignored and error
    /// positions count bytes of the input with whitespace removed. Unlike
    /// [`RingContext::parse`] there is no Eisenstein coefficient syntax, so
    /// parentheses always group.
    pub fn parse_expr(&self, text: &str) -> Result<MultiPoly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor::new(&compact);
        let p = expr(&mut cur, self)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input").into());
        }
        Ok(p)
    }
}

fn expr(cur: &mut Cursor<'_>, ctx: &RingContext) -> Result<MultiPoly> {
    let mut acc = if cur.eat(b'-') {
        -product(cur, ctx)?
    } else {
        product(cur, ctx)?
    };
    loop {
        if cur.eat(b'+') {
            acc = &acc + &product(cur, ctx)?;
        } else if cur.eat(b'-') {
            acc = &acc - &product(cur, ctx)?;
        } else {
            return Ok(acc);
        }
    }
}

fn product(cur: &mut Cursor<'_>, ctx: &RingContext) -> Result<MultiPoly> {
    let mut acc = power(cur, ctx)?;
    while cur.eat(b'*') {
        acc = &acc * &power(cur, ctx)?;
    }
    Ok(acc)
}

fn power(cur: &mut Cursor<'_>, ctx: &RingContext) -> Result<MultiPoly> {
    let base = atom(cur, ctx)?;
    if cur.eat(b'^') {
        Ok(base.pow(cur.nat()?))
    } else {
        Ok(base)
    }
}

fn atom(cur: &mut Cursor<'_>, ctx: &RingContext) -> Result<MultiPoly> {
    let n = ctx.nvars();
    match cur.peek() {
        Some(b'(') => {
            cur.pos += 1;
            let inner = expr(cur, ctx)?;
            if !cur.eat(b')') {
                return Err(cur.error("expected ')'").into());
            }
            Ok(inner)
        }
        Some(b'0'..=b'9') => {
            let k = cur.digits()?;
            Ok(MultiPoly::constant(
                Scalar::from_rational(crate::exact::Rational::from_integer(k), ctx.field),
                n,
            ))
        }
        _ => {
            let start = cur.pos;
            while matches!(cur.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                cur.pos += 1;
            }
            let name = core::str::from_utf8(&cur.text[start..cur.pos]).unwrap_or("");
            let Some(index) = ctx.names.iter().position(|v| v == name) else {
                cur.pos = start;
                return Err(cur.error("unknown variable").into());
            };
            Ok(MultiPoly::var(index, n, ctx.field))
        }
    }
}

fn format_poly(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in p.terms() {
        let term = format_term(m, c, names);
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

fn format_term(m: &Monomial, c: &Scalar, names: &[String]) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { alloc::format!("{n}^{e}") })
        .collect();
    let coeff = match c.to_rational() {
        Some(r) => r.to_string(),
        None => alloc::format!("({c})"),
    };
    if factors.is_empty() {
        return coeff;
    }
    let monomial = factors.join("*");
    if c.is_one() {
        monomial
    } else if (-c).is_one() {
        alloc::format!("-{monomial}")
    } else {
        alloc::format!("{coeff}*{monomial}")
    }
}

fn parse_poly(text: &str, ctx: &RingContext) -> Result<MultiPoly> {
    let nvars = ctx.nvars();
    let field = ctx.field;
    let mut cur = Cursor::new(text);
    let mut poly = MultiPoly::zero(nvars, field);
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if !first && cur.eat(b'+') {
            false
        } else if first {
            false
        } else {
            return Err(cur.error("expected '+' or '-' between terms").into());
        };
        first = false;
        let (mono, coeff) = parse_term(&mut cur, ctx)?;
        poly.add_term(mono, if negative { -coeff } else { coeff });
        if cur.at_end() {
            return Ok(poly);
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>, ctx: &RingContext) -> Result<(Monomial, Scalar)> {
    let field = ctx.field;
    let mut exps = alloc::vec![0u32; ctx.nvars()];
    let coeff = match cur.peek() {
        Some(b'(') => {
            cur.pos += 1;
            let c = match field {
                Field::Eisenstein => Scalar::Eis(cur.eisenstein()?),
                Field::Rational => Scalar::Rat(cur.signed_rational()?),
            };
            if !cur.eat(b')') {
                return Err(cur.error("expected ')'").into());
            }
            Some(c)
        }
        Some(b'0'..=b'9') => Some(Scalar::from_rational(cur.unsigned_rational()?, field)),
        _ => None,
    };
    let has_factors = match coeff {
        Some(_) => cur.eat(b'*'),
        None => true,
    };
    if has_factors {
        loop {
            let start = cur.pos;
            while matches!(cur.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                cur.pos += 1;
            }
            let name = core::str::from_utf8(&cur.text[start..cur.pos]).unwrap_or("");
            let Some(index) = ctx.names.iter().position(|n| n == name) else {
                cur.pos = start;
                return Err(cur.error("unknown variable").into());
            };
            let e = if cur.eat(b'^') { cur.nat()? } else { 1 };
            exps[index] += e;
            if !cur.eat(b'*') {
                break;
            }
        }
    }
    Ok((Monomial::new(exps), coeff.unwrap_or_else(|| Scalar::one(field))))
}

impl core::fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let ctx = RingContext::standard(self.nvars(), self.field());
        write!(f, "{}", ctx.format(self))
    }
}

impl core::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        core::fmt::Debug::fmt(self, f)
    }
}
