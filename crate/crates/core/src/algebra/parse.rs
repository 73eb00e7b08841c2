//! Parser for rational functions written as in the display format, e.g.
//! `(q + q^4*z^3) / ((1-z^4)*(1-q^2*z^2)*(1-q^3*z))`.
//!
//! Multiplication signs may be omitted between factors. Numerators are
//! arbitrary polynomial expressions; denominators must be products of
//! `(1 - monomial)` factors with optional integer powers.

use std::str::FromStr;

use super::bivariate::BivariatePoly;
use super::coeff::Coeff;
use super::factored::{factor_checked, DenFactor, Factored};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Q,
    Z,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                out.push(Tok::Int(digits));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'q' => Tok::Q,
                    'z' => Tok::Z,
                    '+' => Tok::Plus,
                    '-' | '\u{2212}' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {t:?}")))
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} ({:?})", self.pos, self.peek()))
    }

    fn int(&mut self) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        let s = self.int()?;
        let v: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("exponent {s} out of range")))?;
        Ok(if neg { -v } else { v })
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Q | Tok::Z | Tok::Open | Tok::Int(_)))
    }

    fn expr<C: Coeff + FromStr>(&mut self) -> Result<BivariatePoly<C>> {
        let mut neg = false;
        if self.eat(&Tok::Minus) {
            neg = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.term::<C>()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc += &self.term::<C>()?;
            } else if self.eat(&Tok::Minus) {
                acc -= &self.term::<C>()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coeff + FromStr>(&mut self) -> Result<BivariatePoly<C>> {
        let mut acc = self.power::<C>()?;
        loop {
            if self.eat(&Tok::Star) || self.starts_factor() {
                acc = &acc * &self.power::<C>()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power<C: Coeff + FromStr>(&mut self) -> Result<BivariatePoly<C>> {
        let (base, var) = match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let c = C::from_str(&s).map_err(|_| Error::Parse(format!("bad integer {s}")))?;
                (BivariatePoly::monomial(c, 0, 0), None)
            }
            Some(Tok::Q) => {
                self.pos += 1;
                (BivariatePoly::monomial(C::one(), 1, 0), Some(Tok::Q))
            }
            Some(Tok::Z) => {
                self.pos += 1;
                (BivariatePoly::monomial(C::one(), 0, 1), Some(Tok::Z))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.expr::<C>()?;
                self.expect(Tok::Close)?;
                (inner, None)
            }
            _ => return Err(self.error("expected a factor")),
        };
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = self.signed_int()?;
        match var {
            Some(Tok::Q) => Ok(BivariatePoly::monomial(C::one(), e, 0)),
            Some(Tok::Z) if e >= 0 => Ok(BivariatePoly::monomial(C::one(), 0, e as u32)),
            _ if e >= 0 => {
                let mut out = BivariatePoly::one();
                for _ in 0..e {
                    out = &out * &base;
                }
                Ok(out)
            }
            _ => Err(self.error("negative exponent outside q")),
        }
    }

    /// `q^a z^b` inside a denominator factor.
    fn den_monomial(&mut self) -> Result<(i64, u32)> {
        let (mut a, mut b) = (0i64, 0i64);
        let mut seen = false;
        loop {
            let which = match self.peek() {
                Some(Tok::Q) => 0,
                Some(Tok::Z) => 1,
                _ if seen => break,
                _ => return Err(self.error("expected q or z")),
            };
            self.pos += 1;
            let e = if self.eat(&Tok::Caret) {
                self.signed_int()?
            } else {
                1
            };
            if which == 0 {
                a += e;
            } else {
                b += e;
            }
            seen = true;
            self.eat(&Tok::Star);
        }
        let b = u32::try_from(b).map_err(|_| self.error("negative z exponent"))?;
        Ok((a, b))
    }

    fn den_atom(&mut self, out: &mut Vec<DenFactor>) -> Result<()> {
        self.expect(Tok::Open)?;
        let mut inner = Vec::new();
        if self.peek() == Some(&Tok::Open) {
            self.den_product(&mut inner)?;
        } else {
            if self.int()? != "1" {
                return Err(self.error("denominator factors have the form (1-q^a*z^b)"));
            }
            self.expect(Tok::Minus)?;
            let (a, b) = self.den_monomial()?;
            inner.push(factor_checked(a, b, 1)?);
        }
        self.expect(Tok::Close)?;
        let m = if self.eat(&Tok::Caret) {
            let s = self.int()?;
            s.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad multiplicity {s}")))?
        } else {
            1
        };
        for f in inner {
            out.push(factor_checked(f.a, f.b, f.m * m)?);
        }
        Ok(())
    }

    fn den_product(&mut self, out: &mut Vec<DenFactor>) -> Result<()> {
        self.den_atom(out)?;
        loop {
            let star = self.peek() == Some(&Tok::Star) && self.peek2() == Some(&Tok::Open);
            if star {
                self.pos += 1;
            }
            if self.peek() == Some(&Tok::Open) {
                self.den_atom(out)?;
            } else {
                return Ok(());
            }
        }
    }
}

pub(crate) fn parse_factored<C: Coeff + FromStr>(s: &str) -> Result<Factored<C>> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let num = p.expr::<C>()?;
    let mut factors = Vec::new();
    if p.eat(&Tok::Slash) {
        p.den_product(&mut factors)?;
    }
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(Factored::new(num, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn parse(s: &str) -> Result<Factored<BigInt>> {
        parse_factored(s)
    }

    #[test]
    fn accepts_published_layouts() {
        let a = parse("(q+q^4z^3)/((1-z^4)(1-q^2z^2)(1-q^3z))").unwrap();
        let b = parse("(q + q^4*z^3) / ((1-z^4)*(1-q^2*z^2)*(1-q^3*z))").unwrap();
        assert_eq!(a, b);
        let c = parse("(q^3*z^12 + q^3*z^2) / ((1-z^8)*(1-q^5*z)*(1-z^4)^2)").unwrap();
        assert_eq!(c.factors().iter().map(|f| f.m).sum::<u32>(), 4);
        assert!(parse("2*q^8*z^7 - (q z)^2").is_ok());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("q / (2-z)").is_err());
        assert!(parse("q / (1-q)").is_err());
        assert!(parse("z^-1").is_err());
        assert!(parse("q +").is_err());
        assert!(parse("q / (1-z) )").is_err());
    }
}
