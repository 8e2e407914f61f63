//! Recursive-descent parser for polynomial expressions.
//!
//! Accepts integer literals, declared variable names, `+ - * / ^` and
//! parentheses. Division is only allowed by nonzero constants, which is how
//! rational literals such as `3/4*x` are written.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::RingRef;

#[derive(Debug, Clone, PartialEq)]
enum Token {
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

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse { position: start, message: format!("unexpected character `{other}`") })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let (den, literal) = self.unary_with_literal()?;
                    if !den.is_constant() || den.is_zero() {
                        if den.is_zero() {
                            if let Some(lit) = literal {
                                if lit != BigInt::from(0) {
                                    return Err(Error::NonInvertibleDenominator(lit.to_string()));
                                }
                            }
                            return Err(Error::DivisionByZero);
                        }
                        return Err(Error::Parse { position: at, message: "division by a non-constant".into() });
                    }
                    let c = self.ring.field().inv(&den.constant_term());
                    acc = acc.scale(&c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        self.unary_with_literal().map(|(p, _)| p)
    }

    /// Also reports the integer literal when the operand is a bare literal,
    /// so a denominator that vanishes mod p can be named in the error.
    fn unary_with_literal(&mut self) -> Result<(Polynomial, Option<BigInt>)> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                let (p, lit) = self.unary_with_literal()?;
                Ok((p.neg(), lit.map(|l| -l)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary_with_literal()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<(Polynomial, Option<BigInt>)> {
        let (base, lit) = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Token::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::ExponentOverflow)?;
                    self.pos += 1;
                    e
                }
                _ => return self.err("expected a natural number exponent"),
            };
            return Ok((base.pow(e)?, lit.map(|l| num_traits::pow(l, e as usize))));
        }
        Ok((base, lit))
    }

    fn atom(&mut self) -> Result<(Polynomial, Option<BigInt>)> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok((Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)), Some(n)))
            }
            Some(Token::Ident(name)) => {
                let idx = self.ring.var_index(&name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                self.pos += 1;
                Ok((Polynomial::variable(self.ring, idx), None))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok((inner, None))
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.len(), ring };
    if parser.peek().is_none() {
        return parser.err("empty expression");
    }
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}
