//! Text form of polynomials and ideals.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! polynomial := sign? term (sign term)*
//! term       := factor ('*'? factor)*
//! factor     := (integer | 'x' | 'y' | '(' polynomial ')') ('^' integer)?
//! ```
//!
//! An integer factor takes no exponent.
//!
//! An ideal is a list of polynomials separated by commas or newlines. A `#`
//! starts a comment running to the end of the line, and the whole list may be
//! wrapped in one pair of parentheses.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u32 = 10_000;

struct Parser {
    // (original column, char), whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn new(text: &str, column_offset: usize) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1 + column_offset, c))
            .collect();
        Parser {
            chars,
            pos: 0,
            end_column: text.chars().count() + 1 + column_offset,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_column, |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Some(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        match self.integer() {
            Some(e) => u32::try_from(&e).or_else(|_| self.error("exponent too large")),
            None => self.error("expected an exponent after `^`"),
        }
    }

    fn factor(&mut self, field: Field, depth: usize) -> Result<Polynomial> {
        let base = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer().expect("digit present");
                return Ok(Polynomial::constant(field.from_bigint(&v)));
            }
            Some('x') => {
                self.pos += 1;
                Polynomial::monomial(Monomial::X, field)
            }
            Some('y') => {
                self.pos += 1;
                Polynomial::monomial(Monomial::Y, field)
            }
            Some('(') => {
                if depth >= MAX_DEPTH {
                    return self.error("parentheses nested too deeply");
                }
                self.pos += 1;
                let inner = self.polynomial(field, depth + 1)?;
                if self.peek() != Some(')') {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                inner
            }
            Some(c) => return self.error(format!("unexpected `{c}`, expected a coefficient or variable")),
            None => return self.error("unexpected end of input"),
        };
        let e = self.exponent()?;
        if e > MAX_EXPONENT {
            return self.error("exponent too large");
        }
        let mut acc = Polynomial::constant(field.one());
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn term(&mut self, field: Field, depth: usize) -> Result<Polynomial> {
        let mut acc = self.factor(field, depth)?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor(field, depth)?;
                }
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'y' || c == '(' => {
                    acc = &acc * &self.factor(field, depth)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn polynomial(&mut self, field: Field, depth: usize) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None if first => return self.error("empty polynomial"),
                None => return Ok(p),
                Some(')') if depth > 0 && !first => return Ok(p),
                Some(c) if !first => return self.error(format!("unexpected `{c}`, expected `+` or `-`")),
                _ => false,
            };
            first = false;
            let t = self.term(field, depth)?;
            p = if negative { &p - &t } else { &p + &t };
        }
    }

    fn parse_all(&mut self, field: Field) -> Result<Polynomial> {
        let p = self.polynomial(field, 0)?;
        match self.peek() {
            None => Ok(p),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }
}

/// `"(a, b)"` -> `"a, b"` when the first parenthesis closes at the very end
/// and encloses a top-level comma.
fn strip_enclosing_parens(s: &str) -> Option<&str> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    let mut comma = false;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' | '\n' if depth == 0 => comma = true,
            _ => {}
        }
    }
    (depth == 0 && comma).then_some(inner)
}

/// Parses one polynomial over `field`.
pub fn parse_polynomial(text: &str, field: Field) -> Result<Polynomial> {
    Parser::new(text, 0).parse_all(field)
}

/// Parses a comma- or newline-separated generator list.
pub fn parse_ideal(text: &str, field: Field) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    let mut body: String = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    if let Some(inner) = strip_enclosing_parens(body.trim()) {
        body = inner.to_string();
    }
    let mut offset = 0;
    for piece in body.split([',', '\n']) {
        if !piece.trim().is_empty() {
            gens.push(Parser::new(piece, offset).parse_all(field)?);
        }
        offset += piece.chars().count() + 1;
    }
    if gens.is_empty() {
        return Err(Error::Parse {
            column: 1,
            message: "no generators".into(),
        });
    }
    Ok(gens)
}
