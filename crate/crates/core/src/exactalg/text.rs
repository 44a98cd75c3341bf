//! Canonical text form of polynomials and rational functions, and its parser.
//!
//! Terms print by descending total degree, then descending powers of `q`, `t`,
//! `z` in that order: `q^3 + q^2*t + q*t^2 + t^3 + q*t`. Coefficients other
//! than `1` are explicit (`1/2*q`, `-3*t`), and a non-polynomial value prints
//! as `(num)/(den)`. [`parse_rational`] accepts this output and general
//! arithmetic over `+ - * / ^` and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::monomial::{write_monomial, Monomial, Var};
use super::poly::MPoly;
use super::rational::QTRational;
use crate::error::ExactError;

/// Print key: larger sorts first.
fn print_key(m: Monomial) -> (u32, u32, u32, u32) {
    let [a, b, c] = m.exps();
    (m.degree(), a, b, c)
}

pub fn format_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<&(Monomial, BigRational)> = p.terms().iter().collect();
    terms.sort_by_key(|(m, _)| std::cmp::Reverse(print_key(*m)));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&format_ratio(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_ratio(&a));
                out.push('*');
            }
            write_monomial(*m, &mut out);
        }
    }
    out
}

fn format_ratio(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses the canonical format (or any arithmetic expression in `q, t, z`).
pub fn parse_rational(s: &str) -> Result<QTRational, ExactError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses an expression that must evaluate to a polynomial.
pub fn parse_poly(s: &str) -> Result<MPoly, ExactError> {
    parse_rational(s)?.as_mpoly().ok_or(ExactError::NotPolynomial)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> ExactError {
        ExactError::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QTRational, ExactError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTRational, ExactError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs).map_err(|_| ExactError::Parse {
                    position: at,
                    message: "division by zero".to_string(),
                })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QTRational, ExactError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QTRational, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<QTRational, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'0'..=b'9') => Ok(QTRational::from_int(self.integer()?)),
            Some(c @ (b'q' | b't' | b'z')) => {
                if self.src.get(self.pos + 1).is_some_and(|b| b.is_ascii_alphanumeric()) {
                    return Err(self.err("unknown identifier"));
                }
                self.pos += 1;
                let v = match c {
                    b'q' => Var::Q,
                    b't' => Var::T,
                    _ => Var::Z,
                };
                Ok(QTRational::var(v))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Convenience for tests and examples: parses or panics.
pub fn qt(s: &str) -> QTRational {
    parse_rational(s).unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

impl std::str::FromStr for QTRational {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
    }
}

impl std::fmt::Display for MPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_poly(self))
    }
}
