//! Scalar text grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" INT)?
//! atom   := INT ("/" INT)? | IDENT | "(" expr ")"
//! ```
//!
//! A `/` is only accepted directly between two integer literals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Ring, RingElem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
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

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<RingElem> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingElem> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RingElem> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElem> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    let k: u32 = match k.try_into() {
                        Ok(k) => k,
                        Err(_) => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingElem> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let d = match self.peek().cloned() {
                        Some(Tok::Int(d)) => d,
                        _ => return Err(Error::MisplacedDivision(self.toks[self.pos - 1].0)),
                    };
                    self.pos += 1;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    return self.ring.from_rational(&BigRational::new(n, d)).map_err(|e| match e {
                        Error::PrimeDividesDenominator { .. } => Error::DivisionByZero,
                        e => e,
                    });
                }
                self.ring.from_rational(&BigRational::from_integer(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ring.var(&name)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(Tok::Slash) => Err(Error::MisplacedDivision(self.offset())),
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical element of `ring`.
pub fn parse_scalar(text: &str, ring: &Ring) -> Result<RingElem> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), ring };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(Tok::Slash) => Err(Error::MisplacedDivision(p.offset())),
        Some(t) => {
            let msg = format!("unexpected trailing token {t:?}");
            p.err(msg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn spec_examples() {
        assert_eq!(parse_scalar("1/3", &Ring::Rationals).unwrap(), RingElem::Rational(q(1, 3)));
        let f5 = Ring::prime_field(5).unwrap();
        assert_eq!(parse_scalar("7", &f5).unwrap(), RingElem::Residue { value: 2, p: 5 });
        let r = Ring::polynomial(&["a1"]).unwrap();
        let e = parse_scalar("a1*(1-a1)", &r).unwrap();
        assert_eq!(e.to_string(), "-a1^2 + a1");
    }

    #[test]
    fn fractions_bind_tightest() {
        let r = Ring::polynomial(&["x"]).unwrap();
        assert_eq!(parse_scalar("2*1/3*x", &r).unwrap().to_string(), "2/3*x");
        assert_eq!(parse_scalar("-1/3", &Ring::Rationals).unwrap(), RingElem::Rational(q(-1, 3)));
        assert_eq!(parse_scalar("1/2^2", &Ring::Rationals).unwrap(), RingElem::Rational(q(1, 4)));
        assert_eq!(parse_scalar("-x^2", &r).unwrap().to_string(), "-x^2");
        assert_eq!(parse_scalar("2/4", &Ring::Rationals).unwrap(), RingElem::Rational(q(1, 2)));
    }

    #[test]
    fn prime_field_fractions() {
        let f5 = Ring::prime_field(5).unwrap();
        assert_eq!(parse_scalar("1/3", &f5).unwrap(), RingElem::Residue { value: 2, p: 5 });
        assert_eq!(parse_scalar("-1", &f5).unwrap(), RingElem::Residue { value: 4, p: 5 });
        assert_eq!(parse_scalar("1/5", &f5), Err(Error::DivisionByZero));
    }

    #[test]
    fn errors() {
        let r = Ring::polynomial(&["a1"]).unwrap();
        assert_eq!(parse_scalar("a2", &r), Err(Error::UnknownVariable("a2".into())));
        assert_eq!(parse_scalar("x", &Ring::Rationals), Err(Error::UnknownVariable("x".into())));
        assert!(matches!(parse_scalar("a1/3", &r), Err(Error::MisplacedDivision(2))));
        assert!(matches!(parse_scalar("(1)/3", &r), Err(Error::MisplacedDivision(_))));
        assert!(matches!(parse_scalar("1/a1", &r), Err(Error::MisplacedDivision(_))));
        assert_eq!(parse_scalar("1/0", &Ring::Rationals), Err(Error::DivisionByZero));
        assert!(matches!(parse_scalar("1 +", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("(1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("2 3", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("a1^x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("1.5", &r), Err(Error::Parse { .. })));
    }
}
