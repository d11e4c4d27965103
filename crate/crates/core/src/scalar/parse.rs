//! Scalar expression syntax.
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = unary { "*" unary | "/" integer } ;
//! unary    = ("-" | "+") unary | power ;
//! power    = atom [ "^" exponent ] ;
//! exponent = [ "-" | "+" ] integer | "(" [ "-" | "+" ] integer ")" ;
//! atom     = integer | identifier | "(" expr ")" ;
//! ```
//!
//! Juxtaposition is not multiplication: `2l` is a syntax error.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::{ParamSet, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownIdentifier(String),
    NonIntegerDenominator,
    NonIntegerExponent,
    ExponentOutOfRange,
    DivisionByZero,
    Arithmetic(ScalarError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnknownIdentifier(name) => write!(f, "unknown identifier `{name}`"),
            ParseErrorKind::NonIntegerDenominator => {
                f.write_str("`/` must be followed by an integer literal")
            }
            ParseErrorKind::NonIntegerExponent => {
                f.write_str("`^` must be followed by an integer exponent")
            }
            ParseErrorKind::ExponentOutOfRange => f.write_str("exponent out of range"),
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::Arithmetic(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {kind}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

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
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
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
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    params: &'a ParamSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { position, kind })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::UnexpectedToken(t.describe()),
        };
        self.err(self.offset(), kind)
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Tok::Slash => {
                    self.bump();
                    let (at, tok) = self.bump();
                    let Tok::Int(d) = tok else {
                        return self.err(at, ParseErrorKind::NonIntegerDenominator);
                    };
                    if d.is_zero() {
                        return self.err(at, ParseErrorKind::DivisionByZero);
                    }
                    acc = acc.scale(&Rational::new(BigInt::from(1), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let caret_at = self.bump().0;
        let exp = self.exponent()?;
        base.pow(exp).map_err(|e| ParseError {
            position: caret_at,
            kind: ParseErrorKind::Arithmetic(e),
        })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parenthesized = *self.peek() == Tok::LParen;
        if parenthesized {
            self.bump();
        }
        let mut sign = 1i64;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                sign = -1;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let (at, tok) = self.bump();
        let Tok::Int(n) = tok else {
            return self.err(at, ParseErrorKind::NonIntegerExponent);
        };
        let Some(n) = n.to_i32() else {
            return self.err(at, ParseErrorKind::ExponentOutOfRange);
        };
        if parenthesized {
            if *self.peek() != Tok::RParen {
                return self.err(self.offset(), ParseErrorKind::NonIntegerExponent);
            }
            self.bump();
        }
        Ok(sign * n as i64)
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        if !matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen) {
            return self.unexpected();
        }
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Scalar::constant(self.params, Rational::from_integer(n))),
            Tok::Ident(name) => Scalar::param(self.params, &name).map_err(|_| ParseError {
                position: at,
                kind: ParseErrorKind::UnknownIdentifier(name),
            }),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.unexpected();
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!(),
        }
    }
}

/// Parses a scalar expression over `params`.
pub fn parse_scalar(text: &str, params: &ParamSet) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        params,
    };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        return p.unexpected();
    }
    Ok(value)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    for (_, tok) in tokenize(text)? {
        if let Tok::Ident(name) = tok {
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(names: &[&str]) -> ParamSet {
        ParamSet::new(names.iter().copied()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn negated_power() {
        let p = ps(&["l"]);
        let s = parse_scalar("-l^2", &p).unwrap();
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(&[2][..], &q(-1, 1))]);
    }

    #[test]
    fn fraction_and_negative_exponent() {
        let p = ps(&["k"]);
        let s = parse_scalar("1/2*k^-1 + 3", &p).unwrap();
        let expected = &Scalar::monomial(&p, q(1, 2), vec![-1]) + &Scalar::monomial(&p, q(3, 1), vec![0]);
        assert_eq!(s, expected);
        assert_eq!(parse_scalar("k^(-1)/2 + 3", &p).unwrap(), expected);
    }

    #[test]
    fn commutativity_cancels() {
        let p = ps(&["lam", "nu"]);
        assert!(parse_scalar("lam*nu - nu*lam", &p).unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let p = ps(&["a", "b"]);
        assert_eq!(
            parse_scalar("a + b*a^2 - (a - b)", &p).unwrap(),
            parse_scalar("b + a^2*b", &p).unwrap()
        );
        assert_eq!(parse_scalar("-2^2", &p).unwrap(), Scalar::from_int(&p, -4));
        assert_eq!(parse_scalar("--a", &p).unwrap(), Scalar::param(&p, "a").unwrap());
        assert_eq!(parse_scalar("6/4", &p).unwrap(), Scalar::constant(&p, q(3, 2)));
    }

    #[test]
    fn errors_carry_positions() {
        let p = ps(&["l"]);
        let e = parse_scalar("2l", &p).unwrap_err();
        assert_eq!(e.position, 1);
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedToken(_)));

        let e = parse_scalar("l + m", &p).unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("m".into()));

        let e = parse_scalar("1/l", &p).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonIntegerDenominator);
        assert_eq!(e.position, 2);

        let e = parse_scalar("l^l", &p).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonIntegerExponent);

        let e = parse_scalar("1/0", &p).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DivisionByZero);

        let e = parse_scalar("(l + 1)^-1", &p).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Arithmetic(ScalarError::NonMonomialInverse(_))));

        assert_eq!(parse_scalar("(l", &p).unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse_scalar("", &p).unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse_scalar("l $", &p).unwrap_err().kind, ParseErrorKind::UnexpectedChar('$'));
    }

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("lam*x + nu - lam^2").unwrap(), vec!["lam", "x", "nu"]);
        assert!(identifiers("3/4").unwrap().is_empty());
    }
}
