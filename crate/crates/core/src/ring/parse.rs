//! Parser for polynomial expressions such as `q^4*w - q^2/w + 1`.

use super::coeff::Coeff;
use super::poly::{LaurentPoly, Vars};
use super::RingError;
use num_bigint::BigInt;

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    vars: &'a Vars,
}

impl LaurentPoly {
    /// Parse an expression built from integers, variables, `+ - * / ^` and parentheses.
    ///
    /// Division must be exact in the Laurent ring.
    pub fn parse(vars: &Vars, text: &str) -> Result<LaurentPoly, RingError> {
        let src = text.chars().map(|c| if c == '−' { '-' } else { c }).collect();
        let mut p = Parser { src, pos: 0, vars };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div_exact(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPoly, RingError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<LaurentPoly, RingError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.signed_int()?;
            let e = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64, RingError> {
        let mut neg = false;
        match self.peek() {
            Some('-') => {
                neg = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
            let v = self.signed_int()?;
            if self.peek() != Some(')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            return Ok(if neg { -v } else { v });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<LaurentPoly, RingError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let big: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(LaurentPoly::monomial(self.vars, [0; 4], Coeff::from(big)))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_alphanumeric() {
                    self.pos += 1;
                }
                let name: String = self.src[start..self.pos].iter().collect();
                LaurentPoly::var_pow(self.vars, &name, 1)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}
