//! Recursive-descent parser for element and form expressions.
//!
//! Grammar (whitespace is insignificant between tokens):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | 'r' ['^' posint] | 'l' '(' int ')' ['^' exponent]
//!           | '(' expr ')'
//! exponent := rational | 'r' ['^' posint] | '(' polyexpr ')'
//! rational := int ['/' posint]
//! ```
//!
//! `polyexpr` is the same expression shape restricted to rationals and `r`.
//! The variable `r` is only admitted when parsing a formal polynomial form;
//! [`parse_element`] rejects it. Errors carry the byte offset at which
//! parsing stopped.

use itlog::algebra::Element;
use itlog::rforms::{RForm, RPoly};
use itlog::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// Parses an element expression; `r` is not allowed.
pub fn parse_element(text: &str) -> Result<Element, ParseError> {
    let form = parse_with(text, false)?;
    Ok(form.eval(1).expect("element expressions are constant in r"))
}

/// Parses a formal polynomial form expression, with `r` admitted in
/// coefficients and exponents.
pub fn parse_rform(text: &str) -> Result<RForm, ParseError> {
    parse_with(text, true)
}

fn parse_with(text: &str, allow_r: bool) -> Result<RForm, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        allow_r,
    };
    let form = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::new(p.pos, "unexpected trailing input"));
    }
    Ok(form)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_r: bool,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos,
                format!("expected '{}'", byte as char),
            ))
        }
    }

    fn expr(&mut self) -> Result<RForm, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.add(&self.term()?.scale(&RPoly::constant(Scalar::from_integer(-1))));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RForm, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RForm, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'l') => {
                self.pos += 1;
                self.skip_ws();
                self.expect(b'(')?;
                let level = self.level_index()?;
                self.skip_ws();
                self.expect(b')')?;
                self.skip_ws();
                let exponent = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    RPoly::one()
                };
                Ok(RForm::power(level, exponent))
            }
            Some(b'r') => {
                let at = self.pos;
                self.pos += 1;
                if !self.allow_r {
                    return Err(ParseError::new(
                        at,
                        "the variable r is only allowed in formal polynomial forms",
                    ));
                }
                Ok(RForm::constant(self.r_power()?))
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => {
                Ok(RForm::constant(RPoly::constant(self.rational()?)))
            }
            _ => Err(ParseError::new(
                self.pos,
                "expected a rational, 'l(<level>)' or '('",
            )),
        }
    }

    /// Continuation after consuming `r`: an optional `^posint`.
    fn r_power(&mut self) -> Result<RPoly, ParseError> {
        let mut poly = RPoly::var();
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let k = self.posint()?;
            let mut acc = RPoly::one();
            for _ in 0..k {
                acc = &acc * &RPoly::var();
            }
            poly = acc;
        }
        Ok(poly)
    }

    fn exponent(&mut self) -> Result<RPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly_expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'r') => {
                let at = self.pos;
                self.pos += 1;
                if !self.allow_r {
                    return Err(ParseError::new(
                        at,
                        "the variable r is only allowed in formal polynomial forms",
                    ));
                }
                self.r_power()
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => Ok(RPoly::constant(self.rational()?)),
            _ => Err(ParseError::new(self.pos, "expected an exponent")),
        }
    }

    fn poly_expr(&mut self) -> Result<RPoly, ParseError> {
        let mut acc = self.poly_term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                acc = &acc + &self.poly_term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.poly_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self) -> Result<RPoly, ParseError> {
        let mut acc = self.poly_factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = &acc * &self.poly_factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_factor(&mut self) -> Result<RPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly_expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'r') => {
                self.pos += 1;
                self.r_power()
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => Ok(RPoly::constant(self.rational()?)),
            _ => Err(ParseError::new(
                self.pos,
                "expected a rational, 'r' or '(' in a polynomial",
            )),
        }
    }

    fn rational(&mut self) -> Result<Scalar, ParseError> {
        let numer = self.integer()?;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let denom = self.unsigned_integer()?;
            if denom.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            Ok(Scalar::from_ratio(numer, denom))
        } else {
            Ok(Scalar::from_ratio(numer, BigInt::from(1)))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.eat(b'-');
        let magnitude = self.unsigned_integer()?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn unsigned_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected digits"));
        }
        Ok(BigInt::parse_bytes(&self.src[start..self.pos], 10).expect("digits"))
    }

    fn level_index(&mut self) -> Result<i32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat(b'-');
        let magnitude = self.unsigned_integer()?;
        let value = if negative { -magnitude } else { magnitude };
        i32::try_from(&value).map_err(|_| ParseError::new(start, "level index out of range"))
    }

    fn posint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let value = self.unsigned_integer()?;
        u32::try_from(&value).map_err(|_| ParseError::new(start, "power out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itlog::algebra::ExponentVector;
    use itlog::rforms::RMonomial;

    fn int(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    #[test]
    fn parses_single_level() {
        assert_eq!(parse_element("l(0)").unwrap(), Element::level(0));
        assert_eq!(parse_element("l(-2)").unwrap(), Element::level(-2));
    }

    #[test]
    fn parses_full_monomial_expression() {
        // 3/2 * l(1)^2 * l(0)^-1
        let e = parse_element("3/2 * l(1)^2 * l(0)^-1").unwrap();
        let expected = Element::monomial(
            Scalar::new(3, 2),
            ExponentVector::from_pairs([(1, int(2)), (0, int(-1))]),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn parses_sums_differences_and_parens() {
        let e = parse_element("(l(0) + 1) * (l(0) - 1)").unwrap();
        let expected = &(&Element::level(0) * &Element::level(0)) - &Element::one();
        assert_eq!(e, expected);
    }

    #[test]
    fn reports_offset_of_missing_operand() {
        let err = parse_element("l(1) +").unwrap_err();
        assert_eq!(err.offset, 6);
    }

    #[test]
    fn reports_zero_denominator() {
        let err = parse_element("1/0").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn rejects_r_in_element_context() {
        let err = parse_element("r * l(0)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.message.contains("only allowed in formal polynomial forms"));
    }

    #[test]
    fn rejects_trailing_input() {
        let err = parse_element("l(0) l(1)").unwrap_err();
        assert_eq!(err.offset, 5);
    }

    #[test]
    fn fractional_exponents_round_trip() {
        let e = parse_element("l(2)^-3/2").unwrap();
        assert_eq!(e, Element::power(2, Scalar::new(-3, 2)));
    }

    #[test]
    fn parses_rform_with_polynomial_exponent() {
        let f = parse_rform("r*l(0)^r + l(1)^(r - 1)").unwrap();
        let expected = RForm::from_terms(vec![
            RMonomial::new(RPoly::var(), [(0, RPoly::var())]),
            RMonomial::new(RPoly::one(), [(1, &RPoly::var() - &RPoly::one())]),
        ]);
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_polynomial_coefficients() {
        // (r^2 - 1) * l(2)^(2*r + 3)
        let f = parse_rform("(r^2 - 1) * l(2)^(2*r + 3)").unwrap();
        let q = RPoly::from_coeffs(vec![int(-1), int(0), int(1)]);
        let p = RPoly::from_coeffs(vec![int(3), int(2)]);
        assert_eq!(
            f,
            RForm::from_terms(vec![RMonomial::new(q, [(2, p)])])
        );
    }

    #[test]
    fn rform_display_round_trips() {
        let f = parse_rform("r*l(0)^r + l(1)^(r - 1) + (r^2 - 2*r + 1)*l(-1)^(r^2)").unwrap();
        let reparsed = parse_rform(&f.to_string()).unwrap();
        assert_eq!(reparsed, f);
    }

    #[test]
    fn element_display_round_trips() {
        let e = &(&Element::power(0, Scalar::new(-5, 2)).scale(&Scalar::new(7, 3))
            + &Element::level(3))
            - &Element::one();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }
}
