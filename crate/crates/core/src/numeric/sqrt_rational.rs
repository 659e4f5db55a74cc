use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Trial-division bound used when extracting square factors. Radicands in
/// this crate are products of factorials and powers of two, so every prime
/// factor is small; any cofactor left over is tested for being a perfect
/// square as a whole.
const TRIAL_BOUND: u64 = 10_000;

/// Exact value `coeff * sqrt(radicand)` with a square-free integer radicand.
///
/// Zero is represented as `0 * sqrt(1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SqrtRational {
    coeff: Rational,
    radicand: BigInt,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational {
            coeff: Rational::zero(),
            radicand: BigInt::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        SqrtRational {
            coeff: c,
            radicand: BigInt::one(),
        }
        .normalized()
    }

    /// `sqrt(r)` for a non-negative rational `r`.
    pub fn sqrt(r: Rational) -> Self {
        assert!(!r.is_negative(), "sqrt of negative rational");
        Self::new(Rational::one(), r)
    }

    pub fn sqrt_int(n: u64) -> Self {
        Self::sqrt(Rational::from_integer(BigInt::from(n)))
    }

    /// `coeff * sqrt(radicand)`; the radicand may be any non-negative rational.
    pub fn new(coeff: Rational, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        // p/q under the root becomes sqrt(p*q)/q
        let (p, q) = (radicand.numer().clone(), radicand.denom().clone());
        let coeff = coeff / Rational::from_integer(q.clone());
        SqrtRational {
            coeff,
            radicand: p * q,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            return Self::zero();
        }
        let (outside, inside) = split_square(&self.radicand);
        self.coeff *= Rational::from_integer(outside);
        self.radicand = inside;
        self
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The value as a rational, if the radicand is 1.
    pub fn to_rational(&self) -> Option<Rational> {
        self.radicand.is_one().then(|| self.coeff.clone())
    }

    pub fn mul(&self, other: &SqrtRational) -> SqrtRational {
        SqrtRational {
            coeff: &self.coeff * &other.coeff,
            radicand: &self.radicand * &other.radicand,
        }
        .normalized()
    }

    pub fn scale(&self, c: &Rational) -> SqrtRational {
        SqrtRational {
            coeff: &self.coeff * c,
            radicand: self.radicand.clone(),
        }
        .normalized()
    }

    /// Sum of two values with the same radicand (or where one is zero).
    /// Sums across distinct radicands are not representable.
    pub fn checked_add(&self, other: &SqrtRational) -> Option<SqrtRational> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.radicand == other.radicand).then(|| {
            SqrtRational {
                coeff: &self.coeff + &other.coeff,
                radicand: self.radicand.clone(),
            }
            .normalized()
        })
    }

    pub fn neg(&self) -> SqrtRational {
        SqrtRational {
            coeff: -&self.coeff,
            radicand: self.radicand.clone(),
        }
    }

    pub fn checked_sub(&self, other: &SqrtRational) -> Option<SqrtRational> {
        self.checked_add(&other.neg())
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        c * r.sqrt()
    }
}

/// Split `n = outside^2 * inside` with `inside` square-free for every prime
/// below [`TRIAL_BOUND`].
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.sign() != Sign::Minus);
    let mut outside = BigInt::one();
    let mut inside = n.clone();
    let mut d = 2u64;
    while d < TRIAL_BOUND {
        let dd = BigInt::from(d * d);
        if dd > inside {
            break;
        }
        let bd = BigInt::from(d);
        while inside.is_multiple_of(&dd) {
            inside /= &dd;
            outside *= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let root = inside.sqrt();
    if &root * &root == inside {
        outside *= root;
        inside = BigInt::one();
    }
    (outside, inside)
}

impl fmt::Debug for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}
