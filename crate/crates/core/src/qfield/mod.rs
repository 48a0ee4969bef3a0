//! Exact scalars: Laurent polynomials over Q, the field Q(q), and
//! evaluation at nonzero rational points.

mod laurent;
mod rational_function;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use laurent::LaurentPolynomial;
pub use rational_function::RationalFunction;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A nonzero rational value substituted for `q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecializationPoint(Rational);

impl SpecializationPoint {
    pub fn new(t: Rational) -> Result<Self> {
        if t.is_zero() {
            Err(Error::ZeroSpecializationPoint)
        } else {
            Ok(Self(t))
        }
    }

    pub fn from_int(t: i64) -> Result<Self> {
        Self::new(Rational::from_integer(BigInt::from(t)))
    }

    /// The classical point `q = 1`.
    pub fn one() -> Self {
        Self(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for SpecializationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for SpecializationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={}", self.0)
    }
}

impl FromStr for SpecializationPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: Rational = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
        Self::new(t)
    }
}

/// Commutative ring operations shared by Laurent polynomials, `Q(q)` and `Q`.
///
/// Method names avoid the `num_traits` and `std::ops` ones so both can be in
/// scope at once.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

/// A [`Ring`] with inverses, so the same elimination code runs over `Q(q)`
/// and over specialized values in `Q`.
pub trait Field: Ring {
    /// Panics on zero; callers only invert pivots.
    fn inverse(&self) -> Self;
}

macro_rules! ring_via_ops {
    ($t:ty, $zero:expr, $one:expr, $from:expr, $is_zero:expr) => {
        impl Ring for $t {
            fn zero_value() -> Self {
                $zero
            }
            fn one_value() -> Self {
                $one
            }
            fn from_int(n: i64) -> Self {
                $from(n)
            }
            fn is_zero_value(&self) -> bool {
                $is_zero(self)
            }
            fn plus(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn minus(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn times(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn negate(&self) -> Self {
                -self
            }
        }
    };
}

ring_via_ops!(
    Rational,
    <Rational as Zero>::zero(),
    <Rational as One>::one(),
    |n: i64| Rational::from_integer(BigInt::from(n)),
    |x: &Rational| Zero::is_zero(x)
);
ring_via_ops!(
    LaurentPolynomial,
    LaurentPolynomial::zero(),
    LaurentPolynomial::one(),
    LaurentPolynomial::from_int,
    LaurentPolynomial::is_zero
);
ring_via_ops!(
    RationalFunction,
    RationalFunction::zero(),
    RationalFunction::one(),
    RationalFunction::from_int,
    RationalFunction::is_zero
);

impl Field for Rational {
    fn inverse(&self) -> Self {
        self.recip()
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Self {
        RationalFunction::inverse(self).expect("inverse of zero")
    }
}
