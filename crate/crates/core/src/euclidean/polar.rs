use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::BesselEval;
use crate::error::{precondition, Result};
use crate::numeric::ComplexValue;

/// `coeff · e^{inφ} · J_n(r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CylTerm {
    pub n: i32,
    pub coeff: ComplexValue,
}

/// Finite sum of [`CylTerm`]s with distinct orders.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct CylFunc {
    terms: BTreeMap<i32, ComplexValue>,
}

impl CylFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The mixed basis function `⟨r,φ|n⟩`.
    pub fn basis(n: i32) -> Self {
        Self::from_terms([CylTerm {
            n,
            coeff: ComplexValue::new(1.0, 0.0),
        }])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = CylTerm>) -> Self {
        let mut f = Self::zero();
        for t in terms {
            f.add_term(t);
        }
        f
    }

    fn add_term(&mut self, t: CylTerm) {
        let c = self.terms.entry(t.n).or_insert(ComplexValue::new(0.0, 0.0));
        *c += t.coeff;
        if *c == ComplexValue::new(0.0, 0.0) {
            self.terms.remove(&t.n);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = CylTerm> + '_ {
        self.terms.iter().map(|(&n, &coeff)| CylTerm { n, coeff })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, eval: &BesselEval, r: f64, phi: f64) -> Result<ComplexValue> {
        let mut total = ComplexValue::new(0.0, 0.0);
        for t in self.terms() {
            let j = eval.j(t.n, ComplexValue::new(r, 0.0))?;
            total += t.coeff * ComplexValue::from_polar(1.0, t.n as f64 * phi) * j;
        }
        Ok(total)
    }
}

impl fmt::Display for CylFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|t| format!("({})·e^({}iφ)J_{}(r)", t.coeff, t.n, t.n))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarOp {
    Lz,
    PPlus,
    PMinus,
}

/// `L_z` multiplies each term by its order; `P±` sends `(n, c)` to
/// `(n ± 1, -c)`.
pub fn apply_polar_op(op: PolarOp, f: &CylFunc) -> CylFunc {
    CylFunc::from_terms(f.terms().map(|t| match op {
        PolarOp::Lz => CylTerm {
            n: t.n,
            coeff: t.coeff * t.n as f64,
        },
        PolarOp::PPlus => CylTerm {
            n: t.n + 1,
            coeff: -t.coeff,
        },
        PolarOp::PMinus => CylTerm {
            n: t.n - 1,
            coeff: -t.coeff,
        },
    }))
}

/// Default central-difference step for [`polar_numeric_crosscheck`].
pub const CROSSCHECK_STEP: f64 = 1e-5;
/// Smallest radius the finite-difference crosscheck accepts.
pub const CROSSCHECK_MIN_R: f64 = 0.2;

/// `e^{±iφ}(±∂r + (i/r)∂φ)` applied to `J_n(r)e^{inφ}` by central
/// differences with step `h`, compared against the ladder action.
pub fn polar_numeric_crosscheck(op: PolarOp, n: i32, r: f64, phi: f64, h: f64) -> Result<f64> {
    if r < CROSSCHECK_MIN_R {
        return Err(precondition(format!(
            "crosscheck needs r >= {CROSSCHECK_MIN_R}, got {r}"
        )));
    }
    let sign = match op {
        PolarOp::PPlus => 1.0,
        PolarOp::PMinus => -1.0,
        PolarOp::Lz => return Err(precondition("crosscheck is defined for P+ and P- only")),
    };
    let eval = BesselEval::default();
    let f = CylFunc::basis(n);
    let at = |r: f64, p: f64| f.eval(&eval, r, p);
    let dr = (at(r + h, phi)? - at(r - h, phi)?) / (2.0 * h);
    let dphi = (at(r, phi + h)? - at(r, phi - h)?) / (2.0 * h);
    let i = ComplexValue::new(0.0, 1.0);
    let numeric = ComplexValue::from_polar(1.0, sign * phi) * (dr * sign + i / r * dphi);
    let algebraic = apply_polar_op(op, &f).eval(&eval, r, phi)?;
    Ok((numeric - algebraic).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> ComplexValue {
        ComplexValue::new(1.0, 0.0)
    }

    #[test]
    fn lz_eigenvalue() {
        assert!(apply_polar_op(PolarOp::Lz, &CylFunc::basis(0)).is_zero());
        let f = apply_polar_op(PolarOp::Lz, &CylFunc::basis(3));
        assert_eq!(
            f,
            CylFunc::from_terms([CylTerm {
                n: 3,
                coeff: one() * 3.0
            }])
        );
    }

    #[test]
    fn raising_and_lowering() {
        let up = apply_polar_op(PolarOp::PPlus, &CylFunc::basis(2));
        assert_eq!(
            up,
            CylFunc::from_terms([CylTerm {
                n: 3,
                coeff: -one()
            }])
        );
        let f = CylFunc::from_terms([
            CylTerm {
                n: -2,
                coeff: ComplexValue::new(0.5, -1.0),
            },
            CylTerm { n: 4, coeff: one() },
        ]);
        let pm = apply_polar_op(PolarOp::PMinus, &apply_polar_op(PolarOp::PPlus, &f));
        let mp = apply_polar_op(PolarOp::PPlus, &apply_polar_op(PolarOp::PMinus, &f));
        assert_eq!(pm, f);
        assert_eq!(mp, f);
    }

    #[test]
    fn finite_difference_agrees() {
        let cases = [
            (PolarOp::PPlus, 0, 1.0, 0.0),
            (PolarOp::PPlus, 3, 5.0, 1.1),
            (PolarOp::PMinus, 1, 2.0, std::f64::consts::FRAC_PI_3),
        ];
        for (op, n, r, phi) in cases {
            let res = polar_numeric_crosscheck(op, n, r, phi, CROSSCHECK_STEP).unwrap();
            assert!(res < 1e-6, "{op:?} n={n} r={r}: {res}");
        }
    }

    #[test]
    fn crosscheck_is_second_order() {
        // steps large enough that truncation dominates rounding
        for (n, r, phi) in [(0, 1.0, 0.3), (2, 3.0, 1.0), (5, 7.0, 2.0)] {
            let a = polar_numeric_crosscheck(PolarOp::PPlus, n, r, phi, 2e-2).unwrap();
            let b = polar_numeric_crosscheck(PolarOp::PPlus, n, r, phi, 1e-2).unwrap();
            assert!((b / a - 0.25).abs() < 0.1, "ratio {}", b / a);
        }
    }

    #[test]
    fn rejects_small_radius() {
        assert!(polar_numeric_crosscheck(PolarOp::PPlus, 0, 0.1, 0.0, 1e-5).is_err());
    }
}
