use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPolynomial, Rational, SpecializationPoint};
use crate::error::{Error, Result};

/// An element of `K = Q(q)` in canonical form.
///
/// The denominator has lowest exponent 0, integer coefficients with gcd 1
/// and a positive leading coefficient, and shares no factor with the
/// numerator. Monomial denominators are absorbed into the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

// Dense polynomials over Q, index = exponent, no trailing zeros.
type Dense = Vec<Rational>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn divrem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().expect("nonzero divisor").recip();
    let mut quo = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + i] -= t;
        }
        quo[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

fn monic_gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

/// Scale factor `s` so that `s * p` is a primitive integer polynomial with
/// positive leading coefficient.
fn primitive_scale(p: &Dense) -> Rational {
    let mut lcm_den = BigInt::one();
    for c in p {
        lcm_den = lcm_den.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for c in p {
        let n = c.numer() * (&lcm_den / c.denom());
        g = g.gcd(&n);
    }
    let mut s = Rational::new(lcm_den, g);
    if p.last().is_some_and(|c| c.is_negative()) {
        s = -s;
    }
    s
}

impl RationalFunction {
    /// Brings `num/den` to canonical form.
    pub fn normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize_nonzero(num, den))
    }

    fn normalize_nonzero(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.num_terms() == 1 {
            let (e, c) = &den.terms()[0];
            return Self {
                num: num.scale(&c.recip()).shift(-e),
                den: LaurentPolynomial::one(),
            };
        }
        let (dlo, d) = den.to_dense().unwrap();
        let (nlo, n) = num.to_dense().unwrap();
        let g = monic_gcd(&n, &d);
        let (n, d) = if g.len() > 1 {
            (divrem(&n, &g).0, divrem(&d, &g).0)
        } else {
            (n, d)
        };
        let s = primitive_scale(&d);
        let d: Dense = d.iter().map(|c| c * &s).collect();
        let n: Dense = n.iter().map(|c| c * &s).collect();
        let den = LaurentPolynomial::from_dense(0, &d);
        let num = LaurentPolynomial::from_dense(nlo - dlo, &n);
        if den.num_terms() == 1 {
            // gcd cancellation can leave a constant denominator
            return Self::normalize_nonzero(num, den);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPolynomial::zero(),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::from_int(n))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(c))
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        Self {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentPolynomial::q())
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPolynomial::from_terms([
            (1, Rational::one()),
            (-1, -Rational::one()),
        ]))
    }

    /// `q + q^-1`.
    pub fn q_plus_qinv() -> Self {
        Self::from_laurent(LaurentPolynomial::from_terms([
            (1, Rational::one()),
            (-1, Rational::one()),
        ]))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_nonzero(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Evaluates at `q = t`.
    pub fn specialize(&self, t: &SpecializationPoint) -> Result<Rational> {
        let tv = t.value();
        let d = self.den.eval(tv).expect("t is nonzero");
        if d.is_zero() {
            return Err(Error::Pole {
                point: t.to_string(),
            });
        }
        Ok(self.num.eval(tv).expect("t is nonzero") / d)
    }

    fn sum(&self, rhs: &Self, subtract: bool) -> Self {
        let combine = |a: &LaurentPolynomial, b: &LaurentPolynomial| {
            if subtract {
                a - b
            } else {
                a + b
            }
        };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -rhs } else { rhs.clone() };
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(combine(&self.num, &rhs.num));
        }
        if self.den == rhs.den {
            return Self::normalize_nonzero(combine(&self.num, &rhs.num), self.den.clone());
        }
        let num = combine(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
        Self::normalize_nonzero(num, &self.den * &rhs.den)
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(&self.num * &rhs.num);
        }
        Self::normalize_nonzero(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.sum(rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.sum(rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.product(rhs)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to
/// get an error instead.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
by_value!(Div, div);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `(num)/(den)` or a bare Laurent polynomial.
impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
            let num: LaurentPolynomial = rest[..close].parse()?;
            let tail = rest[close + 1..].trim();
            if tail.is_empty() {
                return Ok(Self::from_laurent(num));
            }
            let den_src = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected '/(den)' in {s:?}")))?;
            let den: LaurentPolynomial = den_src.parse()?;
            return Self::normalize(num, den);
        }
        Ok(Self::from_laurent(s.parse()?))
    }
}
