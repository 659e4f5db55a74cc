use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coeff, Rational, RingCoeff};
use crate::error::{Error, Result};

/// Variables available to every polynomial. All polynomials share this
/// universe, so arithmetic between any two of them is always defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    R,
    /// Auxiliary variable, used e.g. as the shift parameter `t` when a
    /// series in `t` is compared against direct substitution.
    Aux,
}

pub const NVARS: usize = 5;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::R, Var::Aux];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::R => "r",
            Var::Aux => "t",
        }
    }
}

/// Exponent tuple over [`Var::ALL`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, power: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = power;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }
}

/// A point at which a polynomial can be evaluated. Only the coordinates a
/// polynomial actually depends on need to be present.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Point(BTreeMap<Var, Rational>);

impl Point {
    pub fn new() -> Self {
        Point(BTreeMap::new())
    }

    pub fn with(mut self, v: Var, value: Rational) -> Self {
        self.0.insert(v, value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.0.get(&v)
    }
}

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c * x^k` in the single variable `v`.
    pub fn monomial(c: Rational, v: Var, k: u32) -> Self {
        Self::term(c, Monomial::var(v, k))
    }

    /// Univariate polynomial from coefficients in ascending powers of `v`.
    pub fn from_ascending(v: Var, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(v, k as u32), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// The variables that actually occur, in universe order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiply by a single variable.
    pub fn mul_var(&self, v: Var) -> Self {
        let shift = Monomial::var(v, 1);
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(&shift), a.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k == 0 {
                continue;
            }
            let mut e = m.0;
            e[v.index()] -= 1;
            out.add_term(Monomial(e), c * Rational::from_integer(BigInt::from(k)));
        }
        out
    }

    pub fn nth_derivative(&self, v: Var, n: u32) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative(v))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation. Fails if the polynomial depends on a coordinate the
    /// point does not supply.
    pub fn eval(&self, point: &Point) -> Result<Rational> {
        for v in self.variables() {
            if point.get(v).is_none() {
                return Err(Error::MissingCoordinate(v));
            }
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let k = m.exp(v);
                if k > 0 {
                    t *= num_traits::pow(point.get(v).unwrap().clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Replace every occurrence of `v` by `q`.
    pub fn substitute(&self, v: Var, q: &Polynomial) -> Self {
        let max = self.degree_in(v);
        let mut powers = vec![Self::one()];
        for k in 1..=max as usize {
            let next = &powers[k - 1] * q;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut e = m.0;
            e[v.index()] = 0;
            let rest = Self::term(c.clone(), Monomial(e));
            out = out + &rest * &powers[k];
        }
        out
    }

    /// Reflection `v -> -v`.
    pub fn reflect(&self, v: Var) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.exp(v) % 2 == 1 { -c } else { c.clone() };
                    (*m, c)
                })
                .collect(),
        }
    }

    /// Coefficients of a univariate polynomial in `v`, highest power first.
    /// Returns `None` if other variables occur.
    pub fn coefficients_descending(&self, v: Var) -> Option<Vec<Rational>> {
        if self.variables().iter().any(|&w| w != v) {
            return None;
        }
        let d = self.degree_in(v);
        Some(
            (0..=d)
                .rev()
                .map(|k| self.coeff(&Monomial::var(v, k)))
                .collect(),
        )
    }

    /// Terms whose exponent of `v` is exactly `k`, with `v` removed.
    pub fn coefficient_of(&self, v: Var, k: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                let mut e = m.0;
                e[v.index()] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }
}

impl Coeff for Polynomial {
    fn null() -> Self {
        Polynomial::zero()
    }
    fn is_null(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl RingCoeff for Polynomial {
    fn unit() -> Self {
        Polynomial::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: &Polynomial) -> Polynomial {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    /// Highest total degree first, e.g. `4x^2 - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(a.0)));
        for (m, c) in ordered {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let mut vars = String::new();
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => vars.push_str(v.name()),
                    k => vars.push_str(&format!("{}^{}", v.name(), k)),
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn x() -> Polynomial {
        Polynomial::var(Var::X)
    }

    #[test]
    fn mul_x_by_x() {
        assert_eq!(&x() * &x(), Polynomial::monomial(int(1), Var::X, 2));
    }

    #[test]
    fn power_rule() {
        let x2 = Polynomial::monomial(int(1), Var::X, 2);
        assert_eq!(
            x2.derivative(Var::X),
            Polynomial::monomial(int(2), Var::X, 1)
        );
    }

    #[test]
    fn eval_h2_at_one() {
        // 4x^2 - 2, the second Hermite polynomial
        let h2 = Polynomial::from_ascending(Var::X, &[int(-2), int(0), int(4)]);
        let p = Point::new().with(Var::X, int(1));
        assert_eq!(h2.eval(&p).unwrap(), int(2));
    }

    #[test]
    fn eval_missing_coordinate() {
        let p = &x() * &Polynomial::var(Var::Y);
        let pt = Point::new().with(Var::X, int(3));
        assert_eq!(p.eval(&pt), Err(Error::MissingCoordinate(Var::Y)));
        // constants need no coordinates at all
        assert_eq!(
            Polynomial::constant(rat(1, 3)).eval(&Point::new()).unwrap(),
            rat(1, 3)
        );
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn substitute_shift() {
        // x^2 with x -> x - t
        let x2 = &x() * &x();
        let shifted = x2.substitute(Var::X, &(&x() - &Polynomial::var(Var::Aux)));
        assert_eq!(shifted.to_string(), "x^2 - 2xt + t^2");
    }

    #[test]
    fn display_descending() {
        let h2 = Polynomial::from_ascending(Var::X, &[int(-2), int(0), int(4)]);
        assert_eq!(h2.to_string(), "4x^2 - 2");
        assert_eq!(
            h2.coefficients_descending(Var::X).unwrap(),
            vec![int(4), int(0), int(-2)]
        );
    }
}
