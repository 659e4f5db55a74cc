use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// An exact multiple of `sqrt(pi)`. The irrational unit is carried
/// symbolically so that normalization checks cancel it exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtPiMultiple(pub Rational);

impl SqrtPiMultiple {
    pub fn zero() -> Self {
        SqrtPiMultiple(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        super::rational_to_f64(&self.0) * std::f64::consts::PI.sqrt()
    }
}

impl fmt::Display for SqrtPiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sqrt(pi)", self.0)
    }
}

/// `integral over R of x^k e^{-x^2} dx` as a rational multiple of `sqrt(pi)`:
/// zero for odd `k`, `(k-1)!! / 2^{k/2}` for even `k`.
pub fn gaussian_moment(k: u32) -> SqrtPiMultiple {
    if k % 2 == 1 {
        return SqrtPiMultiple::zero();
    }
    let half = k / 2;
    let double_fact = (1..k).step_by(2).fold(BigInt::one(), |acc, j| acc * j);
    SqrtPiMultiple(Rational::new(double_fact, BigInt::one() << half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn low_moments() {
        assert_eq!(gaussian_moment(0).0, int(1));
        assert!(gaussian_moment(1).is_zero());
        assert_eq!(gaussian_moment(2).0, rat(1, 2));
        assert_eq!(gaussian_moment(4).0, rat(3, 4));
    }

    #[test]
    fn integration_by_parts_recurrence() {
        for k in (2..80).step_by(2) {
            let lhs = gaussian_moment(k).0;
            let rhs = rat(k as i64 - 1, 2) * gaussian_moment(k - 2).0;
            assert_eq!(lhs, rhs, "k = {k}");
        }
        for k in (1..80).step_by(2) {
            assert!(gaussian_moment(k).is_zero());
        }
    }

    #[test]
    fn matches_trapezoid_quadrature() {
        // independent numeric check of the unit convention
        let h = 1e-3;
        for k in [0u32, 2, 4, 6] {
            let mut s: f64 = 0.0;
            let mut x: f64 = -12.0;
            while x <= 12.0 {
                s += x.powi(k as i32) * (-x * x).exp() * h;
                x += h;
            }
            let exact = gaussian_moment(k).to_f64();
            assert!(
                (s - exact).abs() < 1e-9 * exact.max(1.0),
                "k={k}: {s} vs {exact}"
            );
        }
    }
}
