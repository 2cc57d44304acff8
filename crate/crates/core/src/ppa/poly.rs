//! Noncommutative polynomials in `x`, `y` used as deformation parameters.
//!
//! Grammar: `term (('+' | '-') term)*`, where a term is a `*`-separated
//! product of integers, `x`, `y`, each optionally raised to `^k`.
//! `1*x*y + 1*y*x`, `-x^2*y` and `0` are all accepted.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{Field, PrimeField};

use super::PpaError;

/// Formal generators: `0` is `x`, `1` is `y`.
pub type Word = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPolynomial {
    /// Integer coefficients, reduced only when a characteristic is chosen.
    pub terms: Vec<(i64, Word)>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: Vec<(i64, Word)>) -> Self {
        NCPolynomial { terms }
    }

    pub fn parse(src: &str) -> Result<Self, PpaError> {
        Parser { src, pos: 0 }.polynomial()
    }

    /// Combine like terms modulo `p`, dropping zero coefficients.
    pub fn collect(&self, field: &PrimeField) -> BTreeMap<Word, u64> {
        let mut out: BTreeMap<Word, u64> = BTreeMap::new();
        for (c, w) in &self.terms {
            let e = out.entry(w.clone()).or_insert(0);
            *e = field.add(e, &field.reduce_i64(*c));
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn uses_y(&self) -> bool {
        self.terms.iter().any(|(_, w)| w.contains(&1))
    }
}

pub fn word_name(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&g| if g == 0 { "x" } else { "y" })
        .collect::<Vec<_>>()
        .join("*")
}

/// Render collected terms in the input grammar.
pub fn display_terms(terms: &BTreeMap<Word, u64>, field: &PrimeField) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (w, &c)) in terms.iter().enumerate() {
        let c = field.symmetric(c);
        if i > 0 {
            s.push_str(if c < 0 { " - " } else { " + " });
        } else if c < 0 {
            s.push('-');
        }
        s.push_str(&format!("{}*{}", c.abs(), word_name(w)));
    }
    s
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}*{}", c.abs(), word_name(w))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> PpaError {
        PpaError::ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn number(&mut self) -> Result<i64, PpaError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| PpaError::ParseError {
            offset: start,
            message: "expected an integer".into(),
        })
    }

    fn exponent(&mut self) -> Result<i64, PpaError> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        self.number()
    }

    fn term(&mut self, sign: i64) -> Result<(i64, Word), PpaError> {
        let mut coeff = sign;
        let mut word = Word::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    let k = self.exponent()?;
                    let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
                    let v = n.checked_pow(k).ok_or_else(|| self.err("coefficient overflow"))?;
                    coeff = coeff.checked_mul(v).ok_or_else(|| self.err("coefficient overflow"))?;
                }
                Some(c @ ('x' | 'y')) => {
                    self.pos += 1;
                    let k = self.exponent()?;
                    if k > 4096 {
                        return Err(self.err("exponent too large"));
                    }
                    word.extend(std::iter::repeat_n(u8::from(c == 'y'), k as usize));
                }
                Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
                None => return Err(self.err("unexpected end of input")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((coeff, word));
            }
        }
    }

    fn polynomial(&mut self) -> Result<NCPolynomial, PpaError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = 1;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
        }
        loop {
            let (c, w) = self.term(sign)?;
            if c != 0 {
                terms.push((c, w));
            }
            self.skip_ws();
            match self.peek() {
                None => return Ok(NCPolynomial { terms }),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
            }
            self.pos += 1;
        }
    }
}
