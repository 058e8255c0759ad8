//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (highest precedence first):
//!
//! ```text
//! atom   := integer [ '/' integer ] | variable | '(' expr ')'
//! power  := atom [ '^' integer ]
//! unary  := '-' unary | power
//! term   := unary { '*' unary }
//! expr   := term { ('+' | '-') term }
//! ```
//!
//! `^` binds tighter than unary minus, multiplication is explicit (no
//! juxtaposition), and exponents must be non-negative integers. Errors carry
//! the byte offset of the offending token.

use thiserror::Error;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{Poly, Var};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// Parse `text` over the default variables x, y, z.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    parse_poly_vars(text, &[("x", Var::X), ("y", Var::Y), ("z", Var::Z)])
}

/// Parse with an explicit variable-name table (ordered).
pub fn parse_poly_vars(text: &str, vars: &[(&str, Var)]) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    p.skip_ws();
    if p.at_end() {
        return err(0, "empty expression");
    }
    let poly = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return err(p.pos, format!("unexpected character '{}'", p.peek_char()));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [(&'a str, Var)],
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.peek().map(|b| b as char).unwrap_or('\0')
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
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

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.bump();
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let at = self.pos;
            if self.peek() == Some(b'-') {
                return err(at, "negative exponent");
            }
            let n = self.integer()?;
            let exp: u32 = n
                .try_into()
                .map_err(|_| ParseError {
                    position: at,
                    message: "exponent too large".into(),
                })?;
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.bump();
                    self.skip_ws();
                    let dat = self.pos;
                    let denom = self.integer()?;
                    if denom.is_zero() {
                        return err(dat, "zero denominator");
                    }
                    Ok(Poly::constant(BigRational::new(numer, denom)))
                } else {
                    Ok(Poly::constant(BigRational::from_integer(numer)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                for (n, v) in self.vars {
                    if *n == name {
                        return Ok(Poly::var(*v));
                    }
                }
                err(start, format!("unknown variable '{name}'"))
            }
            Some(_) => err(at, format!("unexpected character '{}'", self.peek_char())),
            None => err(at, "unexpected end of input"),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

/// The planar polynomial of the worked example used throughout the test
/// suite and the demo presets.
pub fn example1() -> Poly {
    parse_poly("(x^2-1/4)*(y^3-(1/4)*y)").unwrap()
}
