//! Parser for `E(n)` expressions such as `-1/2+3*E(7)^2-E(4)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::CycNum;
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(t.parse().unwrap())
    }

    fn expr(&mut self) -> Result<CycNum> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CycNum> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    match d.as_rational() {
                        Some(r) if !r.is_zero() => {
                            acc = acc.scale(&(BigRational::from_integer(1.into()) / r))
                        }
                        Some(_) => return self.err("division by zero"),
                        None => return self.err("division by an irrational value"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<CycNum> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = match e.try_into() {
                Ok(v) if v <= 1_000_000 => v,
                _ => return self.err("exponent too large"),
            };
            let e = if neg { -e } else { e };
            if base.conductor() > 1 && base.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                // a single root of unity term: c * E(n)^j
                let j = base.coeffs().iter().position(|c| !c.is_zero()).unwrap() as i64;
                let c = &base.coeffs()[j as usize];
                if *c == BigRational::from_integer(1.into()) {
                    return Ok(CycNum::root_of_unity(base.conductor(), j * e));
                }
            }
            if e < 0 {
                return match base.as_rational() {
                    Some(r) if !r.is_zero() => {
                        let inv = BigRational::from_integer(1.into()) / r;
                        Ok(CycNum::from_rational(inv).pow((-e) as u32))
                    }
                    _ => self.err("negative power of a non-rational value"),
                };
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CycNum> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.integer()?;
                self.expect(b')')?;
                let n: u64 = match n.try_into() {
                    Ok(v) if v > 0 && v <= 100_000 => v,
                    _ => return self.err("root of unity order out of range"),
                };
                Ok(CycNum::root_of_unity(n, 1))
            }
            Some(c) if c.is_ascii_digit() => Ok(CycNum::from_bigint(self.integer()?)),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a cyclotomic expression built from integers, `E(n)`, `+ - * / ^` and parentheses.
pub fn parse(text: &str) -> Result<CycNum> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}
