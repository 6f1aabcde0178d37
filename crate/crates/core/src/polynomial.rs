//! Sparse polynomials with integer coefficients: enough arithmetic to expand
//! restrictions to hyperplanes, build certificates from coefficient vectors
//! and read printed polynomials back in.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{monomials, Monomial};

/// A polynomial in `num_vars` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Form {
    pub fn zero(num_vars: usize) -> Self {
        Form {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(num_vars), c)
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        Self::term(Monomial::pure_power(num_vars, i, 1), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut f = Form::zero(m.num_vars());
        f.add_term(m, c.into());
        f
    }

    /// `sum c_i * m_i` for the given basis of monomials.
    pub fn from_coefficients(basis: &[Monomial], coeffs: &[BigInt]) -> Self {
        assert_eq!(basis.len(), coeffs.len());
        let num_vars = basis.first().map_or(0, |m| m.num_vars());
        let mut f = Form::zero(num_vars);
        for (m, c) in basis.iter().zip(coeffs) {
            f.add_term(m.clone(), c.clone());
        }
        f
    }

    /// Coefficients of a homogeneous form in the descending monomial basis of
    /// its degree.
    pub fn coefficients(&self, degree: u32) -> Vec<BigInt> {
        monomials(self.num_vars, degree).iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut f = self.clone();
        for (m, c) in &other.terms {
            f.add_term(m.clone(), c.clone());
        }
        f
    }

    pub fn neg(&self) -> Form {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Form {
        let mut f = Form::zero(self.num_vars);
        for (m, v) in &self.terms {
            f.add_term(m.clone(), v * c);
        }
        f
    }

    pub fn mul(&self, other: &Form) -> Form {
        let mut f = Form::zero(self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                f.add_term(m1.mul(m2), c1 * c2);
            }
        }
        f
    }

    pub fn pow(&self, e: u32) -> Form {
        (0..e).fold(Form::constant(self.num_vars, 1), |acc, _| acc.mul(self))
    }

    /// Replaces `x_i` by `value` everywhere.
    pub fn substitute(&self, i: usize, value: &Form) -> Form {
        let mut out = Form::zero(self.num_vars);
        for (m, c) in &self.terms {
            let mut rest = m.exponents().to_vec();
            let e = rest[i];
            rest[i] = 0;
            let part = Form::term(Monomial::new(rest), c.clone()).mul(&value.pow(e));
            out = out.add(&part);
        }
        out
    }

    pub fn evaluate(&self, point: &[i64]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                let v: BigInt = m
                    .exponents()
                    .iter()
                    .zip(point)
                    .map(|(&e, &p)| num_traits::pow(BigInt::from(p), e as usize))
                    .product();
                c * v
            })
            .sum()
    }

    /// Image under `x_i -> x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Form {
        let mut f = Form::zero(self.num_vars);
        for (m, c) in &self.terms {
            f.add_term(m.permuted(perm), c.clone());
        }
        f
    }

    /// Parses text such as `2(x0^2+x1^2) - 5x0*x1` or
    /// `(x0+x1-3x2)(3x0^2-10x0x1)`.
    pub fn parse(text: &str, num_vars: usize) -> Result<Form> {
        let mut p = Parser {
            src: text.as_bytes(),
            text,
            pos: 0,
            num_vars,
        };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    num_vars: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: format!("{message} in `{}`", self.text),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().map_err(|_| self.error("expected an integer"))
    }

    fn expr(&mut self) -> Result<Form> {
        let mut acc = Form::zero(self.num_vars);
        let mut sign = 1;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Form> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b'x' | b'(') | Some(b'0'..=b'9') => {}
                _ => return Ok(acc),
            }
            acc = acc.mul(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<Form> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                e
            }
            Some(b'x') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                }
                if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.error("expected a variable index"));
                }
                let i = self.int()? as usize;
                if i >= self.num_vars {
                    return Err(self.error(&format!("variable x{i} out of range")));
                }
                Form::var(self.num_vars, i)
            }
            Some(b'0'..=b'9') => Form::constant(self.num_vars, self.int()?),
            _ => return Err(self.error("expected a factor")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let f = Form::parse("2(x0^2+x1^2+x2^2)-5(x0x1+x0x2+x1x2)", 3).unwrap();
        assert_eq!(f.to_string(), "2*x0^2 - 5*x0*x1 - 5*x0*x2 + 2*x1^2 - 5*x1*x2 + 2*x2^2");
        assert_eq!(Form::parse(&f.to_string(), 3).unwrap(), f);
        assert!(Form::parse("x0 + y", 3).is_err());
        assert!(Form::parse("x3", 3).is_err());
    }

    #[test]
    fn expansion() {
        let f = Form::parse("(x0+x1)^3", 2).unwrap();
        assert_eq!(f.coefficients(3), vec![1, 3, 3, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let g = Form::parse("x0^2*x1", 2).unwrap();
        let minus_x1 = Form::var(2, 1).neg();
        assert_eq!(g.substitute(0, &minus_x1), Form::parse("x1^3", 2).unwrap());
        assert_eq!(f.evaluate(&[1, 2]), BigInt::from(27));
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = Form::parse("x0 - x0 + x1", 2).unwrap();
        assert_eq!(f, Form::var(2, 1));
        assert!(Form::parse("x0*x1 - x1*x0", 2).unwrap().is_zero());
    }
}
