//! Series literals and the calculator expression language.
//!
//! The literal grammar is
//!
//! ```text
//! series   = term {("+" | "-") term}
//! term     = rational ["*" mono] | mono
//! mono     = "t^" exponent
//! exponent = rational | "(" rational {"," rational} ")"
//! rational = ["-"] int ["/" int]
//! ```
//!
//! and the parser accepts a superset of it: a leading sign, bare `t` for
//! `t^1`, the truncation marker `O(t^c)`, parentheses, `*` and `/` between
//! arbitrary operands, non-negative integer powers `(..)^n` and bound names.
//! Everything the canonical printer emits parses back to the same series.
//!
//! The exponent after `t^` is always read as one rational, so `t^1/2` is
//! `t^(1/2)`, matching the printer.
//!
//! Error positions are 1-based byte columns.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hahnseries::{s_add, s_div, s_mul, s_neg, s_sub, Cutoff, Series};
use crate::ordgroup::GroupElement;
use crate::Rational;

/// Named values of a session.
pub type Bindings = BTreeMap<String, Series>;

/// Parses an exact or truncated series of the given rank. Division is
/// allowed only where the quotient is exact (monomial divisors).
pub fn parse_expr(text: &str, rank: usize) -> Result<Series> {
    let empty = Bindings::new();
    eval_expr(text, rank, &empty, &Cutoff::Infinity)
}

/// Evaluates `text` with `bindings` in scope. Quotients by non-monomials are
/// truncated at `cutoff`.
pub fn eval_expr(text: &str, rank: usize, bindings: &Bindings, cutoff: &Cutoff) -> Result<Series> {
    let mut p = Parser::new(text, rank, bindings, cutoff);
    let s = p.expr()?;
    p.finish()?;
    Ok(s)
}

/// Splits `a, b` at the first comma outside parentheses.
pub(crate) fn split_pair(text: &str) -> Result<(String, String)> {
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((text[..i].trim().to_string(), text[i + 1..].trim().to_string())),
            _ => {}
        }
    }
    Err(Error::Syntax { pos: text.len() + 1, msg: "expected `,` between two expressions".into() })
}

/// Parses an exponent literal: a rational for rank 1 or `(q1, ..., qr)`.
pub fn parse_exponent(text: &str, rank: usize) -> Result<GroupElement> {
    let empty = Bindings::new();
    let mut p = Parser::new(text, rank, &empty, &Cutoff::Infinity);
    let e = p.exponent()?;
    p.finish()?;
    Ok(e)
}

/// Parses a cutoff: `inf`, an exponent literal, or `O(t^c)`.
pub fn parse_cutoff(text: &str, rank: usize) -> Result<Cutoff> {
    let trimmed = text.trim();
    if trimmed == "inf" {
        return Ok(Cutoff::Infinity);
    }
    if trimmed.starts_with('O') {
        let s = parse_expr(trimmed, rank)?;
        return Ok(s.cutoff().clone());
    }
    parse_exponent(trimmed, rank).map(Cutoff::Finite)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
    bindings: &'a Bindings,
    cutoff: &'a Cutoff,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, rank: usize, bindings: &'a Bindings, cutoff: &'a Cutoff) -> Self {
        Parser { src: text.as_bytes(), pos: 0, rank, bindings, cutoff }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
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
            self.error(format!("expected `{}`", c as char))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{}`", c as char)),
        }
    }

    fn expr(&mut self) -> Result<Series> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = s_add(&acc, &self.term()?)?;
            } else if self.eat(b'-') {
                acc = s_sub(&acc, &self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Series> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = s_mul(&acc, &self.factor()?)?;
            } else if self.eat(b'/') {
                let divisor = self.factor()?;
                acc = s_div(&acc, &divisor, self.cutoff)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Series> {
        if self.eat(b'-') {
            return Ok(s_neg(&self.factor()?));
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.natural()?;
            let n: u32 = n.try_into().map_err(|_| Error::Syntax { pos: self.pos, msg: "power too large".into() })?;
            let mut acc = Series::one(self.rank);
            for _ in 0..n {
                acc = s_mul(&acc, &base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Series> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let s = self.expr()?;
                self.expect(b')')?;
                Ok(s)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                Ok(Series::constant(self.rank, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.ident();
                match name {
                    "t" => {
                        let e = self.mono_exponent()?;
                        Ok(Series::monomial(Rational::one(), e))
                    }
                    "O" if self.peek() == Some(b'(') => {
                        self.pos += 1;
                        if self.peek() != Some(b't') || self.ident() != "t" {
                            return self.error("expected `t` inside `O(..)`");
                        }
                        let e = self.mono_exponent()?;
                        self.expect(b')')?;
                        Ok(Series::big_o(e))
                    }
                    _ => match self.bindings.get(name) {
                        Some(s) => Ok(s.clone()),
                        None => {
                            self.pos = start;
                            Err(Error::UnknownName(name.to_string()))
                        }
                    },
                }
            }
            Some(c) => self.error(format!("unexpected `{}`", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }

    /// The exponent after `t`: `^` followed by an exponent literal, or
    /// nothing for `t^1`.
    fn mono_exponent(&mut self) -> Result<GroupElement> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()
        } else {
            self.check_rank(1)?;
            Ok(GroupElement::new(vec![Rational::one()]))
        }
    }

    fn exponent(&mut self) -> Result<GroupElement> {
        if self.eat(b'(') {
            let mut coords = vec![self.rational()?];
            while self.eat(b',') {
                coords.push(self.rational()?);
            }
            self.expect(b')')?;
            self.check_rank(coords.len())?;
            Ok(GroupElement::new(coords))
        } else {
            let q = self.rational()?;
            self.check_rank(1)?;
            Ok(GroupElement::new(vec![q]))
        }
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found })
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = self.eat(b'-');
        let num = self.natural()?;
        let den = if self.eat(b'/') { self.natural()? } else { BigInt::one() };
        if den.is_zero() {
            return self.error("zero denominator");
        }
        let q = Rational::new(num, den);
        Ok(if negative { -q } else { q })
    }

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }
}
