//! Text format for polynomials.
//!
//! Coefficients are integers or rationals `p/q`; variables are `x`, `y`
//! (aliases for `x1`, `x2`), `x1`, `x2`, `x3`, `t`, and `z`; `^` raises to a
//! nonnegative integer power and `*` between factors is optional. The printer
//! emits terms in descending graded-lex order and round-trips through the
//! parser.

use crate::error::{Error, Result};
use crate::multipoly::{Expo, MultiPoly, Var};
use crate::rational::{format_rational, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let upto = &self.src[..self.pos.min(self.src.len())];
        let line = upto.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = upto.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Parse { line, col, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        if start >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let b = self.src[start];
        let tok = match b {
            b'+' => (Tok::Plus, start + 1),
            b'-' => (Tok::Minus, start + 1),
            b'*' => (Tok::Star, start + 1),
            b'/' => (Tok::Slash, start + 1),
            b'^' => (Tok::Caret, start + 1),
            b'(' => (Tok::LParen, start + 1),
            b')' => (Tok::RParen, start + 1),
            b'0'..=b'9' => {
                let mut end = start;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[start..end]).unwrap();
                (Tok::Num(text.parse().unwrap()), end)
            }
            b'x' => {
                if start + 1 < self.src.len() && (b'1'..=b'3').contains(&self.src[start + 1]) {
                    let v = match self.src[start + 1] {
                        b'1' => Var::X1,
                        b'2' => Var::X2,
                        _ => Var::X3,
                    };
                    (Tok::Var(v), start + 2)
                } else {
                    (Tok::Var(Var::X1), start + 1)
                }
            }
            b'y' => (Tok::Var(Var::X2), start + 1),
            b't' => (Tok::Var(Var::T), start + 1),
            b'z' => (Tok::Var(Var::Z), start + 1),
            other => {
                self.pos = start;
                return Err(self.error(format!("unexpected character '{}'", other as char)));
            }
        };
        Ok(tok)
    }

    fn next(&mut self) -> Result<Tok> {
        let (tok, end) = self.peek()?;
        self.pos = end;
        Ok(tok)
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.lex.peek()? {
            (Tok::Minus, end) => {
                self.lex.pos = end;
                self.term()?.neg()
            }
            (Tok::Plus, end) => {
                self.lex.pos = end;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.lex.peek()? {
                (Tok::Plus, end) => {
                    self.lex.pos = end;
                    acc = acc.add(&self.term()?);
                }
                (Tok::Minus, end) => {
                    self.lex.pos = end;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.lex.peek()? {
                (Tok::Star, end) => {
                    self.lex.pos = end;
                    acc = acc.mul(&self.factor()?);
                }
                // implicit multiplication: a factor follows directly
                (Tok::Num(_), _) | (Tok::Var(_), _) | (Tok::LParen, _) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if let (Tok::Caret, end) = self.lex.peek()? {
            self.lex.pos = end;
            match self.lex.next()? {
                Tok::Num(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.lex.error("exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.lex.error("expected integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.lex.next()? {
            Tok::Num(n) => {
                // rational literal p/q binds tighter than multiplication
                if let (Tok::Slash, end) = self.lex.peek()? {
                    self.lex.pos = end;
                    match self.lex.next()? {
                        Tok::Num(d) => {
                            if d.is_zero() {
                                return Err(self.lex.error("zero denominator"));
                            }
                            Ok(MultiPoly::constant(Rational::new(n, d)))
                        }
                        _ => Err(self.lex.error("expected integer denominator after '/'")),
                    }
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(n)))
                }
            }
            Tok::Var(v) => Ok(MultiPoly::var(v)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.lex.next()? {
                    Tok::RParen => Ok(inner),
                    _ => Err(self.lex.error("expected ')'")),
                }
            }
            Tok::Minus => Ok(self.factor()?.neg()),
            other => Err(self.lex.error(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parses the polynomial text format.
pub fn parse_poly(src: &str) -> Result<MultiPoly> {
    let mut parser = Parser { lex: Lexer::new(src) };
    let poly = parser.expr()?;
    match parser.lex.peek()? {
        (Tok::End, _) => Ok(poly),
        (tok, _) => Err(parser.lex.error(format!("trailing input {:?}", tok))),
    }
}

fn format_monomial(e: &Expo) -> String {
    let mut parts = Vec::new();
    for v in Var::all() {
        let k = e.get(v);
        if k == 1 {
            parts.push(v.name().to_string());
        } else if k > 1 {
            parts.push(format!("{}^{}", v.name(), k));
        }
    }
    parts.join("*")
}

/// Prints in descending graded-lex term order; round-trips through
/// [`parse_poly`].
pub fn format_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms.iter().rev().enumerate() {
        let mono = format_monomial(e);
        let abs = c.abs();
        let coeff = if abs.is_one() && !mono.is_empty() {
            String::new()
        } else {
            format_rational(&abs)
        };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match (coeff.is_empty(), mono.is_empty()) {
            (true, false) => out.push_str(&mono),
            (false, true) => out.push_str(&coeff),
            (false, false) => {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono);
            }
            (true, true) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn parse_spec_examples() {
        let p = parse_poly("x1^4*x2^10 + x2*x1 + 1").unwrap();
        assert_eq!(p.total_degree(), 14);
        assert_eq!(p.degree_in(Var::X1), 4);

        // x/y aliases
        let q = parse_poly("y^2 - x^2*(x+1)").unwrap();
        assert_eq!(q.degree_in(Var::X1), 3);
        assert_eq!(q.degree_in(Var::X2), 2);

        // rational coefficients, implicit multiplication
        let r = parse_poly("101977/3375 x1^5 - 5/2x1*x2^4").unwrap();
        let coeffs = r.coeffs_in(Var::X2);
        assert_eq!(
            coeffs[4],
            MultiPoly::var(Var::X1).scale(&rat(-5, 2))
        );
        assert_eq!(
            coeffs[0],
            MultiPoly::var(Var::X1).pow(5).scale(&rat(101977, 3375))
        );
    }

    #[test]
    fn round_trip_print_parse() {
        for src in [
            "x1^4*x2^10 + x1*x2 + 1",
            "x1^10 + x2^10 + x2^6 - 2*x1^6",
            "-3*x1 + 1/2",
            "0",
            "x2^2 - x1^3 - x1^2",
        ] {
            let p = parse_poly(src).unwrap();
            let s = format_poly(&p);
            let q = parse_poly(&s).unwrap();
            assert_eq!(p, q, "round trip failed for {}", src);
        }
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_poly("x1 + $").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 6);
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("x1 +").is_err());
        assert!(parse_poly("(x1").is_err());
    }

    #[test]
    fn unary_minus_and_parens() {
        let p = parse_poly("-(x1 - 2)^2").unwrap();
        let q = parse_poly("-x1^2 + 4*x1 - 4").unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_poly("-5").unwrap(), MultiPoly::constant(rat_int(-5)));
    }
}
