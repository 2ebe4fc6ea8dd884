//! Polynomial expression language.
//!
//! Grammar: `+ - * ^ ( )`, division by nonzero constants, integer literals,
//! the constants `i`, `sqrt(q)` (for `q` in the tower), `root4(2)`, and
//! variables from a roster. Multiplication must be written explicitly.

use crate::arith::{Rational, TowerElement};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Roster};

use num_bigint::BigInt;

/// Parses `text` as a polynomial over `roster`.
pub fn parse_polynomial(text: &str, roster: &Roster) -> Result<Polynomial> {
    parse_at(text, roster, 0)
}

/// Parses a `;`-separated list; error offsets refer to the whole text.
pub fn parse_polynomial_list(text: &str, roster: &Roster) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(';') {
        if !piece.trim().is_empty() {
            out.push(parse_at(piece, roster, offset)?);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parses a constant expression such as `1/2` or `sqrt(3)/2`.
pub fn parse_constant(text: &str) -> Result<TowerElement> {
    let p = parse_polynomial(text, &Roster::new(Vec::<String>::new()))?;
    Ok(p.constant_term())
}

fn parse_at(text: &str, roster: &Roster, base: usize) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, base, roster };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        let message = if p.peek() == Some(b')') {
            "unbalanced `)`"
        } else {
            "expected an operator (multiplication needs an explicit `*`)"
        };
        return Err(p.error(message));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
    roster: &'a Roster,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, pos: usize, message: &str) -> Error {
        Error::SyntaxError { position: self.base + pos, message: message.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn constant(&self, c: TowerElement) -> Polynomial {
        Polynomial::constant(self.roster.clone(), c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.unary()?;
                if divisor.total_degree().is_some_and(|d| d > 0) {
                    return Err(self.error_at(at, "can only divide by a constant"));
                }
                let inv = divisor.constant_term().inv()?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent(self.base + at));
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error_at(at, "exponent must be a non-negative integer literal"));
        }
        let e: u32 = digits.parse().map_err(|_| self.error_at(at, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(self.constant(TowerElement::from_rational(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.identifier();
                if let Some(j) = self.roster.position(&name) {
                    return Ok(Polynomial::var(self.roster.clone(), j));
                }
                match name.as_str() {
                    "i" => Ok(self.constant(TowerElement::i())),
                    "sqrt" | "root4" => self.radical(&name, at),
                    _ => Err(Error::UnknownVariable(name)),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn radical(&mut self, name: &str, at: usize) -> Result<Polynomial> {
        self.expect(b'(')?;
        let arg_at = self.pos;
        let arg = self.expr()?;
        self.expect(b')')?;
        let radicand = if arg.total_degree().is_some_and(|d| d > 0) { None } else { arg.constant_term().as_rational() };
        let Some(q) = radicand else {
            return Err(self.error_at(arg_at, "radicand must be a rational constant"));
        };
        let value = if name == "sqrt" {
            TowerElement::sqrt_rational(&q)
        } else if q == Rational::from_integer(2.into()) {
            Some(TowerElement::root4_2())
        } else {
            None
        };
        value
            .map(|v| self.constant(v))
            .ok_or_else(|| self.error_at(at, &format!("{name}({q}) does not lie in the coefficient field")))
    }
}
