use num_bigint::BigInt;
use num_traits::{Float, ToPrimitive, Zero};

use crate::error::{envelope, Error, Result};
use crate::numeric::{ensure_finite, factorial, ComplexValue};

/// Largest `|n|` with a validated accuracy guarantee.
pub const MAX_ORDER: i32 = 20;
/// Largest `|z|` with a validated accuracy guarantee.
pub const MAX_ARG: f64 = 30.0;

/// Ascending-series evaluator for integer-order Bessel functions of the first
/// kind.
///
/// For `|z|` near the top of the envelope the series terms grow to about
/// `e^{|z|}` before they decay, so double-precision summation would lose
/// every significant digit. Terms are therefore accumulated in binary fixed
/// point with enough guard bits to absorb that growth, and only the final
/// sums are rounded to `f64`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselEval {
    pub eps: f64,
    pub max_terms: usize,
}

impl Default for BesselEval {
    fn default() -> Self {
        BesselEval {
            eps: 1e-16,
            max_terms: 200,
        }
    }
}

/// `(J, J', J'')` at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselTriple {
    pub j: ComplexValue,
    pub d1: ComplexValue,
    pub d2: ComplexValue,
}

/// Fixed-point complex number with `bits` fractional bits.
#[derive(Clone, Debug)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

fn to_fixed(x: f64, bits: u32) -> BigInt {
    if x == 0.0 {
        return BigInt::zero();
    }
    let (mant, exp, sign) = Float::integer_decode(x);
    let m = BigInt::from(mant) * sign;
    let shift = exp as i64 + bits as i64;
    if shift >= 0 {
        m << shift as usize
    } else {
        m >> (-shift) as usize
    }
}

fn from_fixed(v: &BigInt, bits: u32) -> f64 {
    // keep ~64 significant bits before going to f64
    let len = v.bits() as i64;
    let drop = (len - 64).max(0);
    let top = (v >> drop as usize).to_f64().unwrap_or(f64::NAN);
    top * 2f64.powi((drop - bits as i64) as i32)
}

impl Fixed {
    fn from_complex(z: ComplexValue, bits: u32) -> Self {
        Fixed {
            re: to_fixed(z.re, bits),
            im: to_fixed(z.im, bits),
        }
    }

    fn one(bits: u32) -> Self {
        Fixed {
            re: BigInt::from(1) << bits as usize,
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, other: &Fixed, bits: u32) -> Fixed {
        let re = (&self.re * &other.re - &self.im * &other.im) >> bits as usize;
        let im = (&self.re * &other.im + &self.im * &other.re) >> bits as usize;
        Fixed { re, im }
    }

    fn div_int(&self, d: &BigInt) -> Fixed {
        Fixed {
            re: &self.re / d,
            im: &self.im / d,
        }
    }

    fn scale_int(&self, k: &BigInt) -> Fixed {
        Fixed {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    fn add_assign(&mut self, other: &Fixed) {
        self.re += &other.re;
        self.im += &other.im;
    }

    fn to_complex(&self, bits: u32) -> ComplexValue {
        ComplexValue::new(from_fixed(&self.re, bits), from_fixed(&self.im, bits))
    }
}

fn sign_for_negative_order(n: i32) -> f64 {
    if n < 0 && n % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

impl BesselEval {
    fn check_envelope(n: i32, z: ComplexValue) -> Result<()> {
        if n.abs() > MAX_ORDER || !(z.norm() <= MAX_ARG) {
            return Err(envelope(format!(
                "bessel order {n} at |z| = {:.6} is outside |n| <= {MAX_ORDER}, |z| <= {MAX_ARG}",
                z.norm()
            )));
        }
        Ok(())
    }

    pub fn j(&self, n: i32, z: ComplexValue) -> Result<ComplexValue> {
        Self::check_envelope(n, z)?;
        Ok(self.series(n, z, 0)?.j)
    }

    pub fn derivatives(&self, n: i32, z: ComplexValue) -> Result<BesselTriple> {
        Self::check_envelope(n, z)?;
        self.series(n, z, 2)
    }

    /// Series evaluation without the envelope check. Accuracy for orders
    /// above the envelope is not validated; callers use it only for terms
    /// that are negligible at the tolerances they gate on.
    pub(crate) fn series_unchecked(&self, n: i32, z: ComplexValue) -> Result<ComplexValue> {
        Ok(self.series(n, z, 0)?.j)
    }

    /// `J_n^{(d)}(z) = (z/2)^n / n! · Σ_k t_k · p_d(n + 2k) / z^d` with
    /// `t_k = (-z²/4)^k n! / (k! (n+k)!)`, `p_0 = 1`, `p_1(p) = p`,
    /// `p_2(p) = p(p-1)`; the derivatives are termwise.
    fn series(&self, n: i32, z: ComplexValue, max_deriv: u32) -> Result<BesselTriple> {
        let sign = sign_for_negative_order(n);
        let n = n.unsigned_abs();
        if z == ComplexValue::new(0.0, 0.0) {
            return Ok(at_origin(n, sign));
        }
        // the largest term is about e^{|z|}; keep 128 bits below it
        let bits = 128 + (z.norm() * std::f64::consts::LOG2_E).ceil() as u32;
        let w = Fixed::from_complex(-(z * z) / 4.0, bits);
        let mut t = Fixed::one(bits);
        let mut sums = [Fixed::one(bits), Fixed::one(bits), Fixed::one(bits)];
        sums[1] = t.scale_int(&BigInt::from(n));
        sums[2] = t.scale_int(&BigInt::from(n as i64 * (n as i64 - 1)));
        let peak = (z.norm() / 2.0).ceil() as u64;
        let mut converged = false;
        for k in 1..=self.max_terms as u64 {
            t = t.mul(&w, bits).div_int(&BigInt::from(k * (n as u64 + k)));
            let p = n as i64 + 2 * k as i64;
            let terms = [
                t.clone(),
                t.scale_int(&BigInt::from(p)),
                t.scale_int(&BigInt::from(p * (p - 1))),
            ];
            let mut small = true;
            for d in 0..=max_deriv as usize {
                sums[d].add_assign(&terms[d]);
                if !terms[d].is_zero() {
                    let tm = terms[d].to_complex(bits).norm();
                    let sm = sums[d].to_complex(bits).norm();
                    small &= tm < self.eps * sm;
                }
            }
            if (small && k >= peak && k >= n as u64) || t.is_zero() {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence(self.max_terms));
        }
        let pre = (z / 2.0).powi(n as i32) / factorial(n).to_f64().unwrap_or(f64::INFINITY);
        let s = |d: usize| sums[d].to_complex(bits);
        let j = ensure_finite(pre * s(0) * sign, "bessel series")?;
        let d1 = ensure_finite(pre * s(1) / z * sign, "bessel series")?;
        let d2 = ensure_finite(pre * s(2) / (z * z) * sign, "bessel series")?;
        Ok(BesselTriple { j, d1, d2 })
    }
}

/// `J_n^{(d)}(0) = d! · [z^d] J_n(z)`.
fn at_origin(n: u32, sign: f64) -> BesselTriple {
    let coeff = |d: u32| -> f64 {
        if d < n || (d - n) % 2 != 0 {
            return 0.0;
        }
        let k = (d - n) / 2;
        let a = factorial(k) * factorial(n + k) * (BigInt::from(1) << (n + 2 * k) as usize);
        let val = factorial(d).to_f64().unwrap() / a.to_f64().unwrap();
        if k % 2 == 0 {
            val
        } else {
            -val
        }
    };
    let c = |d| ComplexValue::new(coeff(d) * sign, 0.0);
    BesselTriple {
        j: c(0),
        d1: c(1),
        d2: c(2),
    }
}

pub fn bessel_j(n: i32, z: ComplexValue) -> Result<ComplexValue> {
    BesselEval::default().j(n, z)
}

pub fn bessel_derivatives(n: i32, z: ComplexValue) -> Result<BesselTriple> {
    BesselEval::default().derivatives(n, z)
}

/// Real-argument convenience wrapper.
pub fn bessel_j_real(n: i32, r: f64) -> Result<f64> {
    Ok(bessel_j(n, ComplexValue::new(r, 0.0))?.re)
}

/// Root of `J_0` in `[lo, hi]` by bisection on the series itself.
pub fn bessel_zero_bisect(n: i32, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = bessel_j_real(n, lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = bessel_j_real(n, mid)?;
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> ComplexValue {
        ComplexValue::new(x, 0.0)
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(bessel_j(0, c(0.0)).unwrap(), c(1.0));
        assert_eq!(bessel_j(3, c(0.0)).unwrap(), c(0.0));
        let d = bessel_derivatives(0, c(0.0)).unwrap();
        assert_eq!(d.d1, c(0.0));
        assert_eq!(bessel_derivatives(1, c(0.0)).unwrap().d1, c(0.5));
    }

    #[test]
    fn first_zero_by_bisection() {
        let z = bessel_zero_bisect(0, 2.0, 3.0).unwrap();
        assert!((z - 2.404825557).abs() < 1e-8);
        assert!(bessel_j_real(0, z).unwrap().abs() < 1e-10);
    }

    #[test]
    fn reference_values() {
        // frozen from an independent arbitrary-precision evaluation
        let cases = [
            (0, 1.0, 0.765_197_686_557_966_55),
            (1, 2.0, 0.576_724_807_756_873_39),
            (5, 10.0, -0.234_061_528_186_793_64),
            (0, 20.0, 0.167_024_664_340_583_15),
            (10, 30.0, -0.129_876_893_998_588_77),
        ];
        for (n, x, want) in cases {
            let got = bessel_j_real(n, x).unwrap();
            assert!(
                (got - want).abs() < 1e-15 * want.abs().max(1.0),
                "J_{n}({x}) = {got}"
            );
        }
    }

    #[test]
    fn negative_order_reflection() {
        let a = bessel_j(-3, c(2.5)).unwrap();
        let b = bessel_j(3, c(2.5)).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn small_argument_derivative() {
        let d = bessel_derivatives(1, c(1e-6)).unwrap();
        assert!((d.d1.re - 0.5).abs() < 1e-10);
    }

    #[test]
    fn bessel_equation_with_independent_derivatives() {
        let z = c(1.7);
        let d = bessel_derivatives(2, z).unwrap();
        let res = d.d2 + d.d1 / z + (c(1.0) - c(4.0) / (z * z)) * d.j;
        assert!(res.norm() < 1e-12);
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(matches!(bessel_j(21, c(1.0)), Err(Error::Envelope(_))));
        assert!(matches!(bessel_j(0, c(30.5)), Err(Error::Envelope(_))));
    }

    #[test]
    fn doubling_max_terms_is_stable() {
        let wide = BesselEval {
            max_terms: 400,
            ..Default::default()
        };
        for n in [0, 7, 20] {
            for x in [0.3, 5.0, 17.0, 29.9] {
                let a = bessel_j(n, c(x)).unwrap();
                let b = wide.j(n, c(x)).unwrap();
                assert!((a - b).norm() <= 1e-13 * a.norm().max(1e-300));
            }
        }
    }

    #[test]
    fn complex_argument() {
        // J_0(i x) = I_0(x); I_0(1) = 1.2660658777520082
        let v = bessel_j(0, ComplexValue::new(0.0, 1.0)).unwrap();
        assert!((v.re - 1.266_065_877_752_008_2).abs() < 1e-15 && v.im.abs() < 1e-15);
    }
}
