//! Parser for the canonical text forms of cyclotomic numbers and polynomials.
//!
//! Grammar (whitespace between factors means multiplication):
//! `expr := term (('+' | '-') term)*`,
//! `term := unary (('*' | '/')? unary)*`,
//! `unary := '-' unary | atom ('^' int)?`,
//! `atom := int | 'v' | 'd' int | '(' expr ')'`.

use num_bigint::BigInt;

use super::cyclotomic::{CyclotomicNumber, Rational};
use super::poly::CycPolynomial;
use super::ring::{Field, Ring};
use crate::error::{ContourError, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ContourError::parse(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| ContourError::parse(at, "integer too large"))
    }

    fn expr(&mut self) -> Result<CycPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(c: u8) -> bool {
        c.is_ascii_digit() || c == b'v' || c == b'd' || c == b'('
    }

    fn term(&mut self) -> Result<CycPolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.unary()?;
                    let c = den
                        .as_constant()
                        .ok_or_else(|| ContourError::parse(at, "division by a non-constant"))?;
                    let inv = c
                        .inv()
                        .ok_or_else(|| ContourError::parse(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(c) if Self::starts_atom(c) => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<CycPolynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.small_int()?;
            let mut acc = CycPolynomial::one(self.order);
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CycPolynomial> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ContourError::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(CycPolynomial::constant(CyclotomicNumber::nu_pow(self.order, 1)))
            }
            Some(b'd') => {
                self.pos += 1;
                let k = self.small_int()?;
                if k >= self.order {
                    return Err(ContourError::parse(at, format!("parameter d{} out of range", k)));
                }
                Ok(CycPolynomial::var(self.order, k as usize))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits parse");
                Ok(CycPolynomial::from_rational(self.order, Rational::from_integer(n)))
            }
            Some(_) => Err(ContourError::parse(at, "unexpected character")),
            None => Err(ContourError::parse(at, "unexpected end of input")),
        }
    }
}

pub fn parse_polynomial(text: &str, order: u32) -> Result<CycPolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        order,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(ContourError::parse(p.pos, "trailing input"));
    }
    Ok(out)
}

/// Parses a constant: `3/2`, `-1`, `(1 - v)/2`, or a coefficient vector `[c0,c1,...]`.
pub fn parse_cyclotomic(text: &str, order: u32) -> Result<CyclotomicNumber> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('[') {
        let offset = text.len() - trimmed.len() + 1;
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| ContourError::parse(text.len(), "expected ']'"))?;
        let mut coeffs = Vec::new();
        let mut start = 0;
        for part in inner.split(',') {
            let c = parse_cyclotomic(part, order).map_err(|e| match e {
                ContourError::Parse { position, message } => {
                    ContourError::parse(offset + start + position, message)
                }
                other => other,
            })?;
            let q = c
                .as_rational()
                .ok_or_else(|| ContourError::parse(offset + start, "vector entries must be rational"))?;
            coeffs.push(q);
            start += part.len() + 1;
        }
        return Ok(CyclotomicNumber::from_coeffs(order, coeffs));
    }
    let p = parse_polynomial(text, order)?;
    p.as_constant()
        .ok_or_else(|| ContourError::parse(0, "expected a constant, found parameters"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(
            parse_cyclotomic("3/2", 2).unwrap(),
            CyclotomicNumber::from_rational(2, Rational::new(3.into(), 2.into()))
        );
        assert_eq!(parse_cyclotomic("[0,1]", 3).unwrap(), CyclotomicNumber::nu_pow(3, 1));
        assert_eq!(parse_cyclotomic("(-1 - v)", 3).unwrap(), CyclotomicNumber::nu_pow(3, 2));
        assert_eq!(parse_cyclotomic("v^4", 3).unwrap(), CyclotomicNumber::nu_pow(3, 1));
    }

    #[test]
    fn error_positions() {
        match parse_polynomial("d0 + * d1", 2) {
            Err(ContourError::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {:?}", other),
        }
        match parse_polynomial("d5", 2) {
            Err(ContourError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("unexpected {:?}", other),
        }
        assert!(parse_cyclotomic("d0", 2).is_err());
        assert!(parse_cyclotomic("1/0", 2).is_err());
    }
}
