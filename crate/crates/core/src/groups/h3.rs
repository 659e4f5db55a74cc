use std::fmt;

use num_traits::{One, Zero};

use super::Matrix3;
use crate::numeric::Rational;

/// Element of the Heisenberg group, stored by its three parameters.
///
/// Matrix form:
/// ```text
/// [1  x1 x2]
/// [0  1  x3]
/// [0  0  1 ]
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Element {
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
}

impl H3Element {
    pub fn new(x1: Rational, x2: Rational, x3: Rational) -> Self {
        H3Element { x1, x2, x3 }
    }

    pub fn identity() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &H3Element) -> H3Element {
        H3Element {
            x1: &self.x1 + &other.x1,
            x2: &other.x2 + &self.x1 * &other.x3 + &self.x2,
            x3: &self.x3 + &other.x3,
        }
    }

    pub fn inverse(&self) -> H3Element {
        H3Element {
            x1: -&self.x1,
            x2: &self.x1 * &self.x3 - &self.x2,
            x3: -&self.x3,
        }
    }

    pub fn to_matrix(&self) -> Matrix3<Rational> {
        let (o, z) = (Rational::one(), Rational::zero());
        Matrix3::from_rows([
            [o.clone(), self.x1.clone(), self.x2.clone()],
            [z.clone(), o.clone(), self.x3.clone()],
            [z.clone(), z, o],
        ])
    }

    /// Inverse of [`H3Element::to_matrix`]; `None` unless the matrix is upper
    /// unitriangular.
    pub fn from_matrix(m: &Matrix3<Rational>) -> Option<H3Element> {
        let unit_diag = (0..3).all(|i| m.get(i, i).is_one());
        let lower_zero = m.get(1, 0).is_zero() && m.get(2, 0).is_zero() && m.get(2, 1).is_zero();
        (unit_diag && lower_zero).then(|| {
            H3Element::new(
                m.get(0, 1).clone(),
                m.get(0, 2).clone(),
                m.get(1, 2).clone(),
            )
        })
    }

    /// Logarithm, the inverse of [`H3AlgebraElement::exp`]. With `N = g - I`
    /// nilpotent, `log g = N - N²/2` terminates.
    pub fn log(&self) -> H3AlgebraElement {
        let n = self.to_matrix().sub(&Matrix3::identity());
        let half = Rational::new(1.into(), 2.into());
        let l = n.sub(&n.mul(&n).scale(&half));
        H3AlgebraElement::from_matrix(&l).expect("log of a unitriangular matrix is strictly upper")
    }
}

impl fmt::Display for H3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

/// Element `aA + bB + cC` of the Heisenberg algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3AlgebraElement {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl H3AlgebraElement {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        H3AlgebraElement { a, b, c }
    }

    pub fn to_matrix(&self) -> Matrix3<Rational> {
        let z = Rational::zero;
        Matrix3::from_rows([
            [z(), self.a.clone(), self.b.clone()],
            [z(), z(), self.c.clone()],
            [z(), z(), z()],
        ])
    }

    pub fn from_matrix(m: &Matrix3<Rational>) -> Option<H3AlgebraElement> {
        let strict = (0..3).all(|i| (0..=i).all(|j| m.get(i, j).is_zero()));
        strict.then(|| {
            H3AlgebraElement::new(
                m.get(0, 1).clone(),
                m.get(0, 2).clone(),
                m.get(1, 2).clone(),
            )
        })
    }

    /// `exp(aA + bB + cC) = (a, b + ac/2, c)`.
    pub fn exp(&self) -> H3Element {
        let half = Rational::new(1.into(), 2.into());
        H3Element::new(
            self.a.clone(),
            &self.b + &self.a * &self.c * half,
            self.c.clone(),
        )
    }

    /// `I + M + M²/2` computed by matrix arithmetic, for checking [`Self::exp`].
    pub fn exp_series(&self) -> Matrix3<Rational> {
        let m = self.to_matrix();
        let half = Rational::new(1.into(), 2.into());
        Matrix3::identity().add(&m).add(&m.mul(&m).scale(&half))
    }
}

/// Basis `A`, `B`, `C` of the Heisenberg algebra, `index` in `1..=3`.
pub fn h3_generator(index: usize) -> Matrix3<Rational> {
    match index {
        1 => Matrix3::unit(0, 1),
        2 => Matrix3::unit(0, 2),
        3 => Matrix3::unit(1, 2),
        _ => panic!("H3 generator index must be 1, 2 or 3"),
    }
}
