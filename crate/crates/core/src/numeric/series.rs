use num_bigint::BigInt;

use super::{Coeff, Rational, RingCoeff};
use crate::error::{Error, Result};

/// Truncated formal power series `sum_k c_k t^k` for `k <= order`.
///
/// The truncation order is fixed at construction. Binary operations between
/// series of different orders produce the smaller order; nothing ever extends
/// the order implicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
    order: usize,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![C::null(); order + 1],
            order,
        }
    }

    /// Coefficients beyond `order` are discarded.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, C::null());
        PowerSeries { coeffs, order }
    }

    /// Build from a closure producing the `k`-th coefficient.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_null)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_null())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order.min(self.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |k| self.coeffs[k].plus(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |k| self.coeffs[k].minus(&other.coeffs[k]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order, |k| self.coeffs[k].scaled(c))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        }
    }

    /// Cauchy product with a series over another coefficient type, given the
    /// pointwise product `f`.
    pub fn convolve<D: Coeff, E: Coeff>(
        &self,
        other: &PowerSeries<D>,
        f: impl Fn(&C, &D) -> E,
    ) -> PowerSeries<E> {
        let order = self.order.min(other.order);
        PowerSeries::from_fn(order, |k| {
            (0..=k).fold(E::null(), |acc, j| {
                let (a, b) = (&self.coeffs[j], &other.coeffs[k - j]);
                if a.is_null() || b.is_null() {
                    acc
                } else {
                    acc.plus(&f(a, b))
                }
            })
        })
    }
}

impl<C: RingCoeff> PowerSeries<C> {
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::unit();
        s
    }

    /// `c * t^power`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.convolve(other, |a, b| a.times(b))
    }

    /// `self(other(t))`; `other` must have a zero constant term.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if !other.coeffs[0].is_null() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order.min(other.order);
        let inner = other.truncate(order);
        let mut out = Self::zero(order);
        let mut power = Self::one(order);
        for k in 0..=order {
            if !self.coeffs[k].is_null() {
                let term = power.map(|c| self.coeffs[k].times(c));
                out = out.add(&term);
            }
            power = power.mul(&inner);
        }
        Ok(out)
    }
}

/// `exp(s)` truncated at order `order`, for `s` with zero constant term.
///
/// Uses `E' = s' E`, i.e. `k e_k = sum_{j=1..k} j s_j e_{k-j}`, which keeps
/// every coefficient exact.
pub fn series_exp<C: RingCoeff>(s: &PowerSeries<C>, order: usize) -> Result<PowerSeries<C>> {
    if !s.coeffs[0].is_null() {
        return Err(Error::NonZeroConstantTerm);
    }
    if order > s.order {
        return Err(Error::OrderTooLarge {
            requested: order,
            available: s.order,
        });
    }
    let mut e: Vec<C> = Vec::with_capacity(order + 1);
    e.push(C::unit());
    for k in 1..=order {
        let mut acc = C::null();
        for j in 1..=k {
            let sj = &s.coeffs[j];
            if sj.is_null() {
                continue;
            }
            acc = acc.plus(
                &sj.times(&e[k - j])
                    .scaled(&Rational::from_integer(BigInt::from(j))),
            );
        }
        e.push(acc.scaled(&Rational::new(BigInt::from(1), BigInt::from(k))));
    }
    Ok(PowerSeries { coeffs: e, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat, Polynomial, Var};
    use proptest::prelude::*;

    fn two_xt_minus_t2(order: usize) -> PowerSeries<Polynomial> {
        let mut s = PowerSeries::zero(order);
        s.coeffs[1] = Polynomial::monomial(int(2), Var::X, 1);
        s.coeffs[2] = Polynomial::constant(int(-1));
        s
    }

    #[test]
    fn exp_of_zero_is_one() {
        let z: PowerSeries<Rational> = PowerSeries::zero(5);
        assert_eq!(series_exp(&z, 5).unwrap(), PowerSeries::one(5));
    }

    #[test]
    fn exp_hermite_generator_low_orders() {
        let e = series_exp(&two_xt_minus_t2(4), 4).unwrap();
        // H1/1! = 2x, H2/2! = 2x^2 - 1
        assert_eq!(e.coeff(1), &Polynomial::monomial(int(2), Var::X, 1));
        assert_eq!(
            e.coeff(2),
            &Polynomial::from_ascending(Var::X, &[int(-1), int(0), int(2)])
        );
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s: PowerSeries<Rational> = PowerSeries::one(3);
        assert_eq!(series_exp(&s, 3), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn exp_never_extends_order() {
        let s: PowerSeries<Rational> = PowerSeries::monomial(int(1), 1, 3);
        assert!(matches!(
            series_exp(&s, 4),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn compose_exp_with_log_like_series() {
        // exp(t) composed with (t) is exp(t); exp(t)^2 == exp(2t)
        let t: PowerSeries<Rational> = PowerSeries::monomial(int(1), 1, 8);
        let e = series_exp(&t, 8).unwrap();
        let e2 = series_exp(&t.scale(&int(2)), 8).unwrap();
        assert_eq!(e.mul(&e), e2);
        assert_eq!(e.compose(&t).unwrap(), e);
        assert_eq!(e.coeff(3), &rat(1, 6));
    }

    proptest! {
        #[test]
        fn exp_is_a_homomorphism(
            a in proptest::collection::vec(-20i64..20, 6),
            b in proptest::collection::vec(-20i64..20, 6),
        ) {
            let order = 6;
            let mk = |v: &[i64]| PowerSeries::from_fn(order, |k| {
                if k == 0 { int(0) } else { rat(v[k - 1], k as i64 + 1) }
            });
            let (sa, sb) = (mk(&a), mk(&b));
            let lhs = series_exp(&sa, order).unwrap().mul(&series_exp(&sb, order).unwrap());
            let rhs = series_exp(&sa.add(&sb), order).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
