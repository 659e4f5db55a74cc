//! Exact arithmetic shared by every other module: rationals, multivariate
//! polynomials, formal power series, `coeff * sqrt(radicand)` scalars and
//! Gaussian moments, plus the finite-value guard for complex evaluation.

mod complex;
mod gaussian;
mod operator;
mod polynomial;
mod series;
mod sqrt_rational;

pub use complex::{ensure_finite, ComplexValue};
pub use gaussian::{gaussian_moment, SqrtPiMultiple};
pub use operator::{monomials_up_to, OperatorExpr, OperatorSpace, Primitive, RelationCheck};
pub use polynomial::{Monomial, Point, Polynomial, Var, NVARS};
pub use series::{series_exp, PowerSeries};
pub use sqrt_rational::SqrtRational;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational with arbitrary-precision numerator and denominator, always
/// reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Coefficients that a [`PowerSeries`] can carry: an additive group with a
/// rational scalar action.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn null() -> Self;
    fn is_null(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-<Rational as One>::one()))
    }
}

/// Coefficients that can also be multiplied, which is what `exp` and
/// composition of series need.
pub trait RingCoeff: Coeff {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Coeff for Rational {
    fn null() -> Self {
        Zero::zero()
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl RingCoeff for Rational {
    fn unit() -> Self {
        One::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact conversion of a finite `f64` to a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}
