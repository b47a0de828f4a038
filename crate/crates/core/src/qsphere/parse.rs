//! Text front end for sphere-algebra expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' int)*
//! atom   := int | 'q' | gen | '(' expr ')'
//! gen    := 'z' index ['s']
//! ```
//!
//! Negative exponents are accepted only on units `±q^e`. The result is the
//! element of the free algebra; nothing is reduced.

use num_bigint::BigInt;

use super::poly::NCPoly;
use super::word::Generator;
use crate::error::{Error, Result};
use crate::laurent::LaurentQ;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Q,
    Gen { index: usize, starred: bool },
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'q' => Token::Q,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = text[start..i].parse::<BigInt>().expect("digits");
                out.push((start, Token::Int(value)));
                continue;
            }
            b'z' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(syntax(start, "expected generator index after 'z'"));
                }
                let index = text[digits..i]
                    .parse::<usize>()
                    .map_err(|_| syntax(digits, "generator index too large"))?;
                let starred = bytes.get(i) == Some(&b's');
                if starred {
                    i += 1;
                }
                out.push((start, Token::Gen { index, starred }));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let at = self.offset();
            let negative = self.peek() == Some(&Token::Minus);
            if negative {
                self.pos += 1;
            }
            let exp = match self.bump() {
                Some(Token::Int(v)) => u32::try_from(&v).map_err(|_| syntax(at, "exponent too large"))?,
                _ => return Err(syntax(at, "expected integer exponent")),
            };
            if negative {
                base = invert_unit_scalar(&base).ok_or_else(|| {
                    syntax(at, "negative exponents are only allowed on units ±q^e")
                })?;
            }
            base = power(&base, exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(v)) => Ok(NCPoly::scalar(self.n, LaurentQ::constant(v))),
            Some(Token::Q) => Ok(NCPoly::scalar(self.n, LaurentQ::q_pow(1))),
            Some(Token::Gen { index, starred }) => {
                if index > self.n {
                    return Err(Error::GeneratorOutOfRange { index, n: self.n });
                }
                let index = u16::try_from(index).map_err(|_| syntax(at, "generator index too large"))?;
                Ok(NCPoly::generator(self.n, Generator { index, starred }))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(self.tokens.get(self.pos - 1).map_or(self.end, |t| t.0), "expected ')'")),
                }
            }
            Some(t) => Err(syntax(at, format!("unexpected token {t:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

fn invert_unit_scalar(p: &NCPoly) -> Option<NCPoly> {
    if p.num_terms() != 1 {
        return None;
    }
    let (w, c) = p.terms().next()?;
    if !w.is_empty() {
        return None;
    }
    Some(NCPoly::scalar(p.n(), c.inverse()?))
}

fn power(p: &NCPoly, exp: u32) -> NCPoly {
    let mut acc = NCPoly::one(p.n());
    for _ in 0..exp {
        acc = &acc * p;
    }
    acc
}

/// Parses `text` as an element of the free algebra on `z_0..z_n`.
pub fn parse_nc(text: &str, n: usize) -> Result<NCPoly> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        n,
    };
    let p = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.offset();
        return Err(syntax(at, "trailing input"));
    }
    Ok(p)
}

/// Like [`parse_nc`] with `n` taken as the largest index that occurs
/// (at least 1).
pub fn parse_nc_infer(text: &str) -> Result<NCPoly> {
    let n = tokenize(text)?
        .iter()
        .filter_map(|(_, t)| match t {
            Token::Gen { index, .. } => Some(*index),
            _ => None,
        })
        .max()
        .unwrap_or(1)
        .max(1);
    parse_nc(text, n)
}
