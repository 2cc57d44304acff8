//! Generator expressions: `tau`, `S`, `phi`, `rho`, `id`, optional `^k`,
//! joined by `*` (composition, rightmost factor applied first).
//!
//! On `D_4`, `phi(12)`, `phi(123)`, ... name elements of `S_3` acting on
//! the leaves `1, 3, 4` by position; bare `phi` is `phi(23)`.

use std::sync::Arc;

use super::{AutError, SlicedAutomorphism};
use crate::dynkin::{DynkinTree, Family};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> AutError {
        AutError::ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn ident(&mut self) -> Result<&'a str, AutError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if start == self.pos {
            Err(self.error("expected a generator name"))
        } else {
            Ok(&self.src[start..self.pos])
        }
    }

    fn integer(&mut self) -> Result<i64, AutError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| AutError::ParseError {
            offset: start,
            message: "expected an integer exponent".into(),
        })
    }

    fn digits(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }
}

/// Parse a generator expression such as `phi*tau^3` or `tau^-1*S`.
pub fn parse_generator(tree: Arc<DynkinTree>, src: &str) -> Result<SlicedAutomorphism, AutError> {
    let mut cur = Cursor { src, pos: 0 };
    let mut acc = SlicedAutomorphism::identity(tree.clone());
    loop {
        let factor = parse_factor(&tree, &mut cur)?;
        acc = acc.compose(&factor)?;
        if !cur.eat('*') {
            break;
        }
    }
    cur.skip_ws();
    if cur.pos != src.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(acc)
}

fn parse_factor(tree: &Arc<DynkinTree>, cur: &mut Cursor<'_>) -> Result<SlicedAutomorphism, AutError> {
    let name_at = cur.pos;
    let name = cur.ident()?;
    let base = match name {
        "tau" => SlicedAutomorphism::translation(tree.clone()),
        "id" => SlicedAutomorphism::identity(tree.clone()),
        "S" => SlicedAutomorphism::suspension(tree.clone()).map_err(|_| undefined("S", tree))?,
        "rho" => SlicedAutomorphism::rho(tree.clone())?,
        "phi" => {
            let cycles = if cur.eat('(') {
                let mut cycles = vec![cur.digits().to_string()];
                loop {
                    if !cur.eat(')') {
                        return Err(cur.error("expected `)`"));
                    }
                    if !cur.eat('(') {
                        break;
                    }
                    cycles.push(cur.digits().to_string());
                }
                Some(cycles)
            } else {
                None
            };
            phi_for(tree, cycles, cur)?
        }
        other => {
            return Err(AutError::ParseError {
                offset: name_at,
                message: format!("unknown generator `{other}`"),
            })
        }
    };
    if cur.eat('^') {
        let k = cur.integer()?;
        Ok(base.power(k))
    } else {
        Ok(base)
    }
}

fn undefined(symbol: &str, tree: &DynkinTree) -> AutError {
    AutError::UndefinedSymbolForFamily {
        symbol: symbol.into(),
        tree: tree.name(),
    }
}

fn phi_for(
    tree: &Arc<DynkinTree>,
    cycles: Option<Vec<String>>,
    cur: &Cursor<'_>,
) -> Result<SlicedAutomorphism, AutError> {
    let is_d4 = tree.family() == Family::D && tree.rank() == 4;
    match cycles {
        None if is_d4 => d4_element(tree, &["23".to_string()], cur),
        None => SlicedAutomorphism::phi(tree.clone()),
        Some(c) if is_d4 => d4_element(tree, &c, cur),
        Some(_) => Err(undefined("phi(..)", tree)),
    }
}

fn d4_element(tree: &Arc<DynkinTree>, cycles: &[String], cur: &Cursor<'_>) -> Result<SlicedAutomorphism, AutError> {
    const LEAVES: [usize; 3] = [0, 2, 3];
    let mut img = [0usize, 1, 2];
    // compose the cycles right to left
    for cycle in cycles.iter().rev() {
        let pts: Vec<usize> = cycle
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .filter(|v| v.iter().all(|&d| (1..=3).contains(&d)))
            .ok_or_else(|| cur.error(format!("bad cycle `({cycle})`")))?
            .into_iter()
            .map(|d| d - 1)
            .collect();
        let mut seen = [false; 3];
        if pts.iter().any(|&p| std::mem::replace(&mut seen[p], true)) {
            return Err(cur.error(format!("repeated point in cycle `({cycle})`")));
        }
        let mut step = [0usize, 1, 2];
        for (i, &p) in pts.iter().enumerate() {
            step[p] = pts[(i + 1) % pts.len()];
        }
        img = [step[img[0]], step[img[1]], step[img[2]]];
    }
    let mut perm: Vec<usize> = (0..4).collect();
    for (i, &leaf) in LEAVES.iter().enumerate() {
        perm[leaf] = LEAVES[img[i]];
    }
    SlicedAutomorphism::tree_automorphism(tree.clone(), perm)
}
