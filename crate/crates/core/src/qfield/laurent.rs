use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// An element of `Q[q, q^-1]`.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so the zero polynomial is the empty term list and derived equality
/// is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: Vec<(i64, Rational)>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// `c * q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `q^e` with coefficient one.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// combining repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i64, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// Builds `q^offset * (d[0] + d[1] q + ...)`.
    pub(crate) fn from_dense(offset: i64, dense: &[Rational]) -> Self {
        let terms = dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, c.clone()))
            .collect();
        Self { terms }
    }

    /// Dense coefficients starting at the lowest exponent, or `None` for zero.
    pub(crate) fn to_dense(&self) -> Option<(i64, Vec<Rational>)> {
        let lo = self.min_exponent()?;
        let hi = self.max_exponent()?;
        let mut d = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            d[(e - lo) as usize] = c.clone();
        }
        Some((lo, d))
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The coefficient if this is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Evaluates at `q = t`. Returns `None` when `t = 0` and a negative
    /// exponent is present.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        if t.is_zero() {
            return match self.min_exponent() {
                Some(e) if e < 0 => None,
                _ => Some(self.as_coefficient(0)),
            };
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(t, *e);
        }
        Some(acc)
    }

    /// Coefficient of `q^e`.
    pub fn as_coefficient(&self, e: i64) -> Rational {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut acc = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self::from_dense(lo, &acc)
    }
}

pub(crate) fn pow_rational(t: &Rational, e: i64) -> Rational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.merge(rhs, false)
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.merge(rhs, true)
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.product(rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Highest exponent first, e.g. `2*q^3 - q + 1/2 - q^-2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = match *e {
                0 => None,
                1 => Some("q".to_string()),
                e => Some(format!("q^{e}")),
            };
            match mono {
                None => write!(f, "{}", fmt_rational(&mag))?,
                Some(m) if mag.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{}*{m}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        text.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("expected integer at byte {start}")))
    }

    fn term(&mut self) -> Result<(i64, Rational)> {
        let mut coeff = Rational::one();
        let mut has_coeff = false;
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            let n = self.integer()?;
            let d = if self.eat(b'/') {
                self.integer()?
            } else {
                BigInt::one()
            };
            if d.is_zero() {
                return Err(Error::Parse("zero denominator in coefficient".into()));
            }
            coeff = Rational::new(n, d);
            has_coeff = true;
            if !self.eat(b'*') {
                return Ok((0, coeff));
            }
        }
        if self.eat(b'q') {
            let e = if self.eat(b'^') {
                let n = self.integer()?;
                i64::try_from(n).map_err(|_| Error::Parse("exponent overflow".into()))?
            } else {
                1
            };
            Ok((e, coeff))
        } else if has_coeff {
            Err(Error::Parse(format!("expected 'q' at byte {}", self.pos)))
        } else {
            Err(Error::Parse(format!("unexpected input at byte {}", self.pos)))
        }
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = if cur.eat(b'-') {
                true
            } else if first || cur.eat(b'+') {
                false
            } else if cur.peek().is_none() {
                break;
            } else {
                return Err(Error::Parse(format!("expected '+' or '-' at byte {}", cur.pos)));
            };
            let (e, c) = cur.term()?;
            terms.push((e, if negative { -c } else { c }));
            first = false;
            if cur.peek().is_none() {
                break;
            }
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let p = lp("q - q^-1");
        assert_eq!(p.to_string(), "q - q^-1");
        assert_eq!(lp("3/2*q^2 - 1 + q^-3").to_string(), "3/2*q^2 - 1 + q^-3");
        assert_eq!(lp("-q").to_string(), "-q");
        assert_eq!(lp("0").to_string(), "0");
        assert!(lp("q + 2 - q - 2").is_zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("q +".parse::<LaurentPolynomial>().is_err());
        assert!("2 q".parse::<LaurentPolynomial>().is_err());
        assert!("1/0".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = lp("q - q^-1");
        let b = lp("q + q^-1");
        assert_eq!(&a * &b, lp("q^2 - q^-2"));
        assert_eq!(&a + &b, lp("2*q"));
        assert_eq!(&a - &a, LaurentPolynomial::zero());
    }

    #[test]
    fn eval_with_negative_powers() {
        let a = lp("q - q^-1");
        let two = Rational::from_integer(2.into());
        assert_eq!(a.eval(&two), Some(Rational::new(3.into(), 2.into())));
        assert_eq!(a.eval(&Rational::zero()), None);
    }
}
