use std::fmt;

use num_traits::{One, Zero};

use super::{Coeff, Polynomial, Rational, Var};

/// Primitive linear operators: multiplication by a coordinate and partial
/// differentiation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primitive {
    Mul(Var),
    Partial(Var),
}

/// Function spaces the primitives can act on.
pub trait OperatorSpace: Coeff {
    fn mul_by(&self, v: Var) -> Self;
    fn partial(&self, v: Var) -> Self;
}

impl OperatorSpace for Polynomial {
    fn mul_by(&self, v: Var) -> Self {
        self.mul_var(v)
    }
    fn partial(&self, v: Var) -> Self {
        self.derivative(v)
    }
}

/// Linear combination of words over [`Primitive`]s.
///
/// A word `[A, B, C]` denotes the product `A B C`, so `C` acts first. Words
/// are never normal-ordered; equality of operators is decided by their
/// action on a test space (see [`OperatorExpr::agrees_on`]).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct OperatorExpr {
    terms: Vec<(Rational, Vec<Primitive>)>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::word(Rational::one(), vec![])
    }

    pub fn word(c: Rational, w: Vec<Primitive>) -> Self {
        let mut e = Self::zero();
        if !c.is_zero() {
            e.terms.push((c, w));
        }
        e
    }

    pub fn mul_by(v: Var) -> Self {
        Self::word(Rational::one(), vec![Primitive::Mul(v)])
    }

    pub fn partial(v: Var) -> Self {
        Self::word(Rational::one(), vec![Primitive::Partial(v)])
    }

    /// `c * x_v * d/dx_w`, the building block of first-order vector fields.
    pub fn coord_times_partial(c: Rational, v: Var, w: Var) -> Self {
        Self::word(c, vec![Primitive::Mul(v), Primitive::Partial(w)])
    }

    pub fn terms(&self) -> &[(Rational, Vec<Primitive>)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        OperatorExpr { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        OperatorExpr {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Operator product `self * other` (`other` acts first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                let mut w = wa.clone();
                w.extend(wb.iter().copied());
                terms.push((a * b, w));
            }
        }
        OperatorExpr { terms }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self))
    }

    pub fn apply<S: OperatorSpace>(&self, f: &S) -> S {
        let mut out = S::null();
        for (c, w) in &self.terms {
            let mut g = f.clone();
            for p in w.iter().rev() {
                g = match *p {
                    Primitive::Mul(v) => g.mul_by(v),
                    Primitive::Partial(v) => g.partial(v),
                };
                if g.is_null() {
                    break;
                }
            }
            out = out.plus(&g.scaled(c));
        }
        out
    }

    /// Whether `self` and `other` act identically on every function in
    /// `test_space`.
    pub fn agrees_on<'a, S: OperatorSpace + 'a>(
        &self,
        other: &Self,
        test_space: impl IntoIterator<Item = &'a S>,
    ) -> bool {
        let diff = self.sub(other);
        test_space.into_iter().all(|f| diff.apply(f).is_null())
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for p in w {
                match p {
                    Primitive::Mul(v) => write!(f, "·{}", v.name())?,
                    Primitive::Partial(v) => write!(f, "·∂{}", v.name())?,
                }
            }
        }
        Ok(())
    }
}

/// Outcome of checking one commutation relation on a test space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

impl RelationCheck {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        RelationCheck {
            name: name.into(),
            holds,
        }
    }
}

/// All monomials in the given variables with total degree at most `max_degree`.
pub fn monomials_up_to(vars: &[Var], max_degree: u32) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for p in &out {
            for &v in vars {
                next.push(p.mul_var(v));
            }
        }
        out.extend(next);
        out.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
        out.dedup();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    #[test]
    fn canonical_commutator_on_polynomials() {
        // [d/dx, x] = 1
        let d = OperatorExpr::partial(Var::X);
        let x = OperatorExpr::mul_by(Var::X);
        let space = monomials_up_to(&[Var::X, Var::Y], 5);
        assert!(d
            .commutator(&x)
            .agrees_on(&OperatorExpr::identity(), &space));
        assert!(!d.commutator(&x).agrees_on(&OperatorExpr::zero(), &space));
    }

    #[test]
    fn apply_order_is_right_to_left() {
        // x d/dx on x^3 gives 3x^3, d/dx x on x^3 gives 4x^3
        let xd = OperatorExpr::coord_times_partial(int(1), Var::X, Var::X);
        let dx = OperatorExpr::mul_by(Var::X).compose(&OperatorExpr::partial(Var::X));
        let x3 = Polynomial::monomial(int(1), Var::X, 3);
        assert_eq!(xd.apply(&x3), Polynomial::monomial(int(3), Var::X, 3));
        assert_eq!(dx.apply(&x3), xd.apply(&x3));
        let d_then_x = OperatorExpr::partial(Var::X).compose(&OperatorExpr::mul_by(Var::X));
        assert_eq!(d_then_x.apply(&x3), Polynomial::monomial(int(4), Var::X, 3));
    }

    #[test]
    fn monomial_count() {
        // monomials in 3 variables of degree <= 2: 1 + 3 + 6
        assert_eq!(monomials_up_to(&[Var::X, Var::Y, Var::Z], 2).len(), 10);
    }
}
