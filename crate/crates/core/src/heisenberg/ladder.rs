use std::fmt;

use serde::{Deserialize, Serialize};

use super::GaussianWeighted;
use crate::numeric::{int, OperatorExpr, Var};

/// Operators of the Heisenberg representation, with the ladder operators in
/// their scaled form `b∓ = x ± d/dx = √2·a∓` so that all coefficients stay
/// rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaledLadderOp {
    BMinus,
    BPlus,
    Position,
    Derivative,
    Identity,
}

impl ScaledLadderOp {
    /// Power of `√2` relating this operator to the unscaled one:
    /// `a∓ = √2^{-1} · b∓`.
    pub fn sqrt2_power(self) -> i32 {
        match self {
            ScaledLadderOp::BMinus | ScaledLadderOp::BPlus => -1,
            _ => 0,
        }
    }

    pub fn to_expr(self) -> OperatorExpr {
        let x = OperatorExpr::mul_by(Var::X);
        let d = OperatorExpr::partial(Var::X);
        match self {
            ScaledLadderOp::BMinus => x.add(&d),
            ScaledLadderOp::BPlus => x.sub(&d),
            ScaledLadderOp::Position => x,
            ScaledLadderOp::Derivative => d,
            ScaledLadderOp::Identity => OperatorExpr::identity(),
        }
    }
}

impl fmt::Display for ScaledLadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScaledLadderOp::BMinus => "b-",
            ScaledLadderOp::BPlus => "b+",
            ScaledLadderOp::Position => "x",
            ScaledLadderOp::Derivative => "D",
            ScaledLadderOp::Identity => "I",
        })
    }
}

/// Closed-form action: `b₋(p w) = p' w`, `b₊(p w) = (2xp - p') w`.
pub fn apply_ladder(op: ScaledLadderOp, f: &GaussianWeighted) -> GaussianWeighted {
    let p = &f.p;
    match op {
        ScaledLadderOp::BMinus => GaussianWeighted::new(p.derivative(Var::X)),
        ScaledLadderOp::BPlus => {
            GaussianWeighted::new(p.mul_var(Var::X).scale(&int(2)) - p.derivative(Var::X))
        }
        ScaledLadderOp::Position => GaussianWeighted::new(p.mul_var(Var::X)),
        ScaledLadderOp::Derivative => f.derivative(),
        ScaledLadderOp::Identity => f.clone(),
    }
}

/// `x^k · w` for `k <= max_degree`.
pub fn weighted_monomials(max_degree: u32) -> Vec<GaussianWeighted> {
    (0..=max_degree)
        .map(|k| GaussianWeighted::new(crate::numeric::Polynomial::monomial(int(1), Var::X, k)))
        .collect()
}

/// Whether the ladder representation reproduces the Heisenberg relations
/// `[a₋, a₊] = I`, `[a₋, I] = [a₊, I] = 0` on `x^k w`, `k <= max_degree`.
///
/// In scaled form the first relation reads `[b₋, b₊] = 2`.
pub fn ladder_relations_hold(max_degree: u32) -> bool {
    let space = weighted_monomials(max_degree);
    let bm = ScaledLadderOp::BMinus.to_expr();
    let bp = ScaledLadderOp::BPlus.to_expr();
    let id = OperatorExpr::identity();
    bm.commutator(&bp).agrees_on(&id.scale(&int(2)), &space)
        && bm.commutator(&id).agrees_on(&OperatorExpr::zero(), &space)
        && bp.commutator(&id).agrees_on(&OperatorExpr::zero(), &space)
}
