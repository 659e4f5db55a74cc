use std::fmt;

use crate::numeric::{
    gaussian_moment, Coeff, OperatorSpace, Polynomial, Rational, SqrtPiMultiple, Var,
};

/// `p(x) · e^{-x²/2}`. Only the polynomial factor is stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GaussianWeighted {
    pub p: Polynomial,
}

impl GaussianWeighted {
    pub fn new(p: Polynomial) -> Self {
        GaussianWeighted { p }
    }

    /// The bare weight `1 · e^{-x²/2}`.
    pub fn ground() -> Self {
        Self::new(Polynomial::one())
    }

    pub fn times_poly(&self, q: &Polynomial) -> Self {
        Self::new(&self.p * q)
    }

    /// `d/dx (p w) = (p' - x p) w`.
    pub fn derivative(&self) -> Self {
        Self::new(self.p.derivative(Var::X) - self.p.mul_var(Var::X))
    }
}

/// `∫ f g dx` over the real line for Gaussian-weighted `f`, `g`; the product
/// carries `e^{-x²}`, so the result is a rational multiple of `√π`.
pub fn weighted_inner_product(f: &GaussianWeighted, g: &GaussianWeighted) -> SqrtPiMultiple {
    let prod = &f.p * &g.p;
    let mut total = Rational::from_integer(0.into());
    for (m, c) in prod.terms() {
        total += c * gaussian_moment(m.exp(Var::X)).0;
    }
    SqrtPiMultiple(total)
}

impl Coeff for GaussianWeighted {
    fn null() -> Self {
        Self::new(Polynomial::zero())
    }
    fn is_null(&self) -> bool {
        self.p.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        Self::new(&self.p + &other.p)
    }
    fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.p.scale(c))
    }
}

impl OperatorSpace for GaussianWeighted {
    fn mul_by(&self, v: Var) -> Self {
        Self::new(self.p.mul_var(v))
    }
    fn partial(&self, v: Var) -> Self {
        match v {
            Var::X => self.derivative(),
            _ => Self::new(self.p.derivative(v)),
        }
    }
}

impl fmt::Display for GaussianWeighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·exp(-x^2/2)", self.p)
    }
}

impl fmt::Debug for GaussianWeighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
