use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{apply_ladder, weighted_inner_product, GaussianWeighted, ScaledLadderOp};
use crate::error::{envelope, Result};
use crate::numeric::{factorial, int, OperatorExpr, Polynomial, Rational, SqrtRational, Var};

/// Largest `n` the exact suites go to unless configured otherwise.
pub const DEFAULT_MAX_N: u32 = 64;

fn check_max(n: u32, max_n: u32) -> Result<()> {
    if n > max_n {
        return Err(envelope(format!(
            "hermite order {n} exceeds configured maximum {max_n}"
        )));
    }
    Ok(())
}

/// `H_n` as the polynomial part of `b₊ⁿ (1·w)`, i.e.
/// `e^{x²/2} (x - d/dx)ⁿ e^{-x²/2}`.
pub fn hermite_rodrigues(n: u32, max_n: u32) -> Result<Polynomial> {
    Ok(hermite_rodrigues_table(n, max_n)?
        .pop()
        .expect("table holds n + 1 entries"))
}

/// `H_0, ..., H_n` along the Rodrigues path.
pub fn hermite_rodrigues_table(n: u32, max_n: u32) -> Result<Vec<Polynomial>> {
    check_max(n, max_n)?;
    let mut f = GaussianWeighted::ground();
    let mut out = vec![f.p.clone()];
    for _ in 0..n {
        f = apply_ladder(ScaledLadderOp::BPlus, &f);
        out.push(f.p.clone());
    }
    Ok(out)
}

/// `H_0, ..., H_n` from `H_0 = 1`, `H_1 = 2x` and
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite_recurrence_table(n: u32) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    if n >= 1 {
        out.push(Polynomial::monomial(int(2), Var::X, 1));
    }
    for k in 1..n as usize {
        let next = out[k].mul_var(Var::X).scale(&int(2)) - out[k - 1].scale(&int(2 * k as i64));
        out.push(next);
    }
    out
}

pub fn hermite_recurrence(n: u32) -> Polynomial {
    hermite_recurrence_table(n)
        .pop()
        .expect("table holds n + 1 entries")
}

/// Normalization of `⟨x|n⟩ = H_n w / √(n! 2ⁿ √π)`, stored as its square with
/// the `√π` held aside: `squared_value = 1/(n! 2ⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormFactor {
    pub squared_value: Rational,
}

impl NormFactor {
    pub fn for_state(n: u32) -> Self {
        let denom = factorial(n) * (BigInt::one() << n as usize);
        NormFactor {
            squared_value: Rational::new(BigInt::one(), denom),
        }
    }
}

/// `H_n w` together with its normalization.
pub fn mixed_basis(n: u32, max_n: u32) -> Result<(GaussianWeighted, NormFactor)> {
    Ok((
        GaussianWeighted::new(hermite_rodrigues(n, max_n)?),
        NormFactor::for_state(n),
    ))
}

/// `∫⟨x|n⟩⟨x|m⟩ dx`, exact. The `√π` from the moments cancels against the
/// two normalizations, leaving `R · √(N_n² N_m²)` with rational `R`.
pub fn overlap(
    (fn_, nn): &(GaussianWeighted, NormFactor),
    (fm, nm): &(GaussianWeighted, NormFactor),
) -> SqrtRational {
    let integral = weighted_inner_product(fn_, fm).0;
    SqrtRational::new(integral, &nn.squared_value * &nm.squared_value)
}

/// Applying `a₊` to `⟨x|n⟩` and renormalizing gives `⟨x|n+1⟩`, and the
/// factor picked up is `√(n+1)` as in the discrete matrix.
pub fn ladder_consistency(n: u32, max_n: u32) -> Result<bool> {
    let (f, norm) = mixed_basis(n, max_n)?;
    let (g, norm_next) = mixed_basis(n + 1, max_n)?;
    let raised = apply_ladder(ScaledLadderOp::BPlus, &f);
    // a₊ N_n H_n w = (N_n/√2) H_{n+1} w must equal √(n+1) N_{n+1} H_{n+1} w
    let lhs = &norm.squared_value / int(2);
    let rhs = &norm_next.squared_value * int(n as i64 + 1);
    Ok(raised == g && lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HermiteIdentity {
    /// `H'' - 2x H' + 2n H = 0`
    Ode,
    /// `H_{n+1} - 2x H_n + 2n H_{n-1} = 0`
    Recursion,
    /// `H_n' = 2n H_{n-1}`
    DifferentialRelation,
    /// `{a₋, a₊} ⟨x|n⟩ = (2n+1) ⟨x|n⟩`, plus `{a₋, a₊} = x² - D²`
    Anticommutator,
    /// `∫⟨x|n⟩⟨x|m⟩ dx = δ_{nm}` for `m <= n`
    Orthonormality,
}

impl HermiteIdentity {
    pub const ALL: [HermiteIdentity; 5] = [
        HermiteIdentity::Ode,
        HermiteIdentity::Recursion,
        HermiteIdentity::DifferentialRelation,
        HermiteIdentity::Anticommutator,
        HermiteIdentity::Orthonormality,
    ];

    pub fn id(self) -> &'static str {
        match self {
            HermiteIdentity::Ode => "ode",
            HermiteIdentity::Recursion => "recursion",
            HermiteIdentity::DifferentialRelation => "diffrel",
            HermiteIdentity::Anticommutator => "anticommutator",
            HermiteIdentity::Orthonormality => "orthonormality",
        }
    }
}

/// Exact residual of an identity; the identity holds iff it is zero.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactResidual {
    Polynomial(Polynomial),
    Scalar(SqrtRational),
}

impl ExactResidual {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactResidual::Polynomial(p) => p.is_zero(),
            ExactResidual::Scalar(s) => s.is_zero(),
        }
    }
}

/// `{a₋, a₊} = ({b₋, b₊})/2` as an operator expression.
pub fn anticommutator_expr() -> OperatorExpr {
    let bm = ScaledLadderOp::BMinus.to_expr();
    let bp = ScaledLadderOp::BPlus.to_expr();
    bm.anticommutator(&bp)
        .scale(&Rational::new(1.into(), 2.into()))
}

/// `x² - D²`.
pub fn oscillator_expr() -> OperatorExpr {
    let x = OperatorExpr::mul_by(Var::X);
    let d = OperatorExpr::partial(Var::X);
    x.compose(&x).sub(&d.compose(&d))
}

/// Eigenvalue of `{a₋, a₊}` on `⟨x|n⟩`, read off the leading coefficient;
/// `None` if the image is not a multiple of the input.
pub fn anticommutator_eigenvalue(n: u32, max_n: u32) -> Result<Option<Rational>> {
    let (f, _) = mixed_basis(n, max_n)?;
    let g = anticommutator_expr().apply(&f);
    let lead = |p: &Polynomial| p.coefficient_of(Var::X, n).coeff(&Default::default());
    let lambda = lead(&g.p) / lead(&f.p);
    Ok((g.p == f.p.scale(&lambda)).then_some(lambda))
}

pub fn verify_hermite_identity(
    which: HermiteIdentity,
    n: u32,
    max_n: u32,
) -> Result<ExactResidual> {
    let h = |k: u32| hermite_rodrigues(k, max_n);
    let two_n = int(2 * n as i64);
    let res = match which {
        HermiteIdentity::Ode => {
            let hn = h(n)?;
            let d1 = hn.derivative(Var::X);
            let d2 = d1.derivative(Var::X);
            ExactResidual::Polynomial(d2 - d1.mul_var(Var::X).scale(&int(2)) + hn.scale(&two_n))
        }
        HermiteIdentity::Recursion => {
            check_max(n + 1, max_n)?;
            let prev = if n == 0 {
                Polynomial::zero()
            } else {
                h(n - 1)?
            };
            ExactResidual::Polynomial(
                h(n + 1)? - h(n)?.mul_var(Var::X).scale(&int(2)) + prev.scale(&two_n),
            )
        }
        HermiteIdentity::DifferentialRelation => {
            let prev = if n == 0 {
                Polynomial::zero()
            } else {
                h(n - 1)?
            };
            ExactResidual::Polynomial(h(n)?.derivative(Var::X) - prev.scale(&two_n))
        }
        HermiteIdentity::Anticommutator => {
            let (f, _) = mixed_basis(n, max_n)?;
            let eigen = anticommutator_expr().apply(&f).p - f.p.scale(&int(2 * n as i64 + 1));
            // operator identity on x^k w, k <= n + 2; each monomial's residual
            // is tagged with its own power of t so that no two can cancel
            let diff = anticommutator_expr().sub(&oscillator_expr());
            let mut total = eigen;
            for (k, g) in super::weighted_monomials(n + 2).iter().enumerate() {
                let tag = Polynomial::monomial(int(1), Var::Aux, k as u32 + 1);
                total = total + &diff.apply(g).p * &tag;
            }
            ExactResidual::Polynomial(total)
        }
        HermiteIdentity::Orthonormality => {
            let state_n = mixed_basis(n, max_n)?;
            let mut worst = SqrtRational::zero();
            for m in 0..=n {
                let ov = overlap(&state_n, &mixed_basis(m, max_n)?);
                let delta = SqrtRational::from_rational(if m == n { int(1) } else { int(0) });
                let r = ov.checked_sub(&delta).unwrap_or(ov);
                if !r.is_zero() {
                    worst = r;
                    break;
                }
            }
            ExactResidual::Scalar(worst)
        }
    };
    Ok(res)
}

/// `H_n(-x) - (-1)ⁿ H_n(x)`.
pub fn parity_residual(n: u32, max_n: u32) -> Result<Polynomial> {
    let hn = hermite_rodrigues(n, max_n)?;
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    Ok(hn.reflect(Var::X) - hn.scale(&sign))
}

/// Coefficient of the highest power of `x`.
pub fn leading_coefficient(p: &Polynomial) -> Rational {
    let d = p.degree_in(Var::X);
    p.coefficient_of(Var::X, d).coeff(&Default::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_polynomials() {
        assert_eq!(hermite_rodrigues(0, 64).unwrap(), Polynomial::one());
        assert_eq!(hermite_rodrigues(1, 64).unwrap().to_string(), "2x");
        assert_eq!(hermite_rodrigues(2, 64).unwrap().to_string(), "4x^2 - 2");
        assert_eq!(hermite_recurrence(2).to_string(), "4x^2 - 2");
        assert_eq!(hermite_recurrence(3).to_string(), "8x^3 - 12x");
    }

    #[test]
    fn rodrigues_equals_recurrence_to_64() {
        let rod = hermite_rodrigues_table(64, 64).unwrap();
        let rec = hermite_recurrence_table(64);
        assert_eq!(rod, rec);
        assert_eq!(
            leading_coefficient(&rod[64]),
            Rational::from_integer(BigInt::one() << 64)
        );
    }

    #[test]
    fn above_max_is_an_error() {
        assert!(hermite_rodrigues(65, 64).is_err());
        assert!(hermite_rodrigues(65, 70).is_ok());
    }

    #[test]
    fn identities_at_small_n() {
        for which in HermiteIdentity::ALL {
            for n in 0..=6 {
                let r = verify_hermite_identity(which, n, 64).unwrap();
                assert!(r.is_zero(), "{which:?} n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn anticommutator_eigenvalue_is_2n_plus_1() {
        assert_eq!(anticommutator_eigenvalue(3, 64).unwrap(), Some(int(7)));
        assert_eq!(anticommutator_eigenvalue(0, 64).unwrap(), Some(int(1)));
    }

    #[test]
    fn normalization_examples() {
        let g = mixed_basis(0, 64).unwrap();
        assert_eq!(g.1.squared_value, int(1));
        let one = mixed_basis(1, 64).unwrap();
        assert!(overlap(&one, &g).is_zero());
        let five = mixed_basis(5, 64).unwrap();
        assert_eq!(overlap(&five, &five).to_rational(), Some(int(1)));
    }

    #[test]
    fn raising_then_renormalizing_gives_next_state() {
        for n in 0..20 {
            assert!(ladder_consistency(n, 64).unwrap());
        }
    }

    #[test]
    fn parity() {
        for n in [0, 1, 7, 64] {
            assert!(parity_residual(n, 64).unwrap().is_zero());
        }
    }
}
