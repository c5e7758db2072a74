//! Recursive-descent parser for scalar expressions.
//!
//! Grammar:
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' nonneg-integer)?
//! base   := integer | 'i' | identifier | '(' expr ')' | '-' base
//! ```
//! Rational literals like `3/4` arrive through the division rule, which
//! errors on a syntactic zero divisor. Identifiers must name chart
//! coordinates; `i` is the imaginary unit.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use super::scalar::Scalar;
use super::{Coord, SymError};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
pub(crate) struct SpannedTok {
    pub tok: Tok,
    pub pos: usize,
}

/// Tokenizes an expression, reporting byte positions on error.
pub(crate) fn lex_expr(src: &str) -> Result<Vec<SpannedTok>, SymError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                out.push(SpannedTok { tok: Tok::Plus, pos: i });
                i += 1;
            }
            b'-' => {
                out.push(SpannedTok { tok: Tok::Minus, pos: i });
                i += 1;
            }
            b'*' => {
                out.push(SpannedTok { tok: Tok::Star, pos: i });
                i += 1;
            }
            b'/' => {
                out.push(SpannedTok { tok: Tok::Slash, pos: i });
                i += 1;
            }
            b'^' => {
                out.push(SpannedTok { tok: Tok::Caret, pos: i });
                i += 1;
            }
            b'(' => {
                out.push(SpannedTok { tok: Tok::LParen, pos: i });
                i += 1;
            }
            b')' => {
                out.push(SpannedTok { tok: Tok::RParen, pos: i });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n: BigInt = text.parse().expect("digits parse as integer");
                out.push(SpannedTok { tok: Tok::Int(n), pos: start });
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(SpannedTok {
                    tok: Tok::Ident(src[start..i].to_string()),
                    pos: start,
                });
            }
            _ => {
                return Err(SymError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", &src[i..i + 1]),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [SpannedTok],
    idx: usize,
    coords: &'a [Coord],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.pos).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&SpannedTok> {
        let t = self.toks.get(self.idx);
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), SymError> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.idx += 1;
                Ok(())
            }
            _ => Err(SymError::Syntax {
                pos: self.pos(),
                msg: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Scalar, SymError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, SymError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.idx += 1;
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs).map_err(|_| SymError::Syntax {
                        pos,
                        msg: "division by zero".to_string(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, SymError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.idx += 1;
            let pos = self.pos();
            match self.bump().map(|t| t.tok.clone()) {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| SymError::Syntax {
                        pos,
                        msg: "exponent out of range".to_string(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(SymError::Syntax {
                        pos,
                        msg: "expected nonnegative integer exponent".to_string(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Scalar, SymError> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok.clone()) {
            Some(Tok::Int(n)) => Ok(Scalar::constant(Complex::new(
                BigRational::from_integer(n),
                BigRational::zero(),
            ))),
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    return Ok(Scalar::i());
                }
                match self.coords.iter().find(|c| c.name() == name) {
                    Some(c) => Ok(Scalar::coord(c)),
                    None => Err(SymError::UnknownIdentifier { name, pos }),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            // unary minus wraps the whole factor so that -y^2 = -(y^2)
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            _ => Err(SymError::Syntax {
                pos,
                msg: "expected a value".to_string(),
            }),
        }
    }
}

/// Parses `text` as a scalar over the given chart coordinates and returns
/// the canonicalized value.
pub fn parse_scalar(text: &str, coords: &[Coord]) -> Result<Scalar, SymError> {
    let toks = lex_expr(text)?;
    let mut p = Parser {
        toks: &toks,
        idx: 0,
        coords,
        end: text.len(),
    };
    let s = p.expr()?;
    if p.idx != toks.len() {
        return Err(SymError::Syntax {
            pos: p.pos(),
            msg: "unexpected trailing input".to_string(),
        });
    }
    Ok(s)
}
