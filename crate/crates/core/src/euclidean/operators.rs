use crate::numeric::{int, monomials_up_to, OperatorExpr, RelationCheck, Var};

/// `P_x = ∂x`, `P_y = ∂y`, `L_z = x∂y - y∂x`.
pub fn e2_differential_operators() -> (OperatorExpr, OperatorExpr, OperatorExpr) {
    let px = OperatorExpr::partial(Var::X);
    let py = OperatorExpr::partial(Var::Y);
    let lz = OperatorExpr::coord_times_partial(int(1), Var::X, Var::Y)
        .sub(&OperatorExpr::coord_times_partial(int(1), Var::Y, Var::X));
    (px, py, lz)
}

/// The Euclidean algebra relations `[X,Y] = 0`, `[Z,X] = Y`, `[Y,Z] = X`
/// under `X → P_x`, `Y → -P_y`, `Z → L_z`, checked on all monomials in
/// `x, y` of degree at most `max_degree`.
pub fn e2_operator_relations(max_degree: u32) -> Vec<RelationCheck> {
    let (px, py, lz) = e2_differential_operators();
    let (x, y, z) = (px, py.scale(&int(-1)), lz);
    let space = monomials_up_to(&[Var::X, Var::Y], max_degree);
    vec![
        RelationCheck::new(
            "[X,Y] = 0",
            x.commutator(&y).agrees_on(&OperatorExpr::zero(), &space),
        ),
        RelationCheck::new("[Z,X] = Y", z.commutator(&x).agrees_on(&y, &space)),
        RelationCheck::new("[Y,Z] = X", y.commutator(&z).agrees_on(&x, &space)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_to_degree_8() {
        for c in e2_operator_relations(8) {
            assert!(c.holds, "{}", c.name);
        }
    }

    #[test]
    fn wrong_sign_is_detected() {
        let (px, py, lz) = e2_differential_operators();
        let space = monomials_up_to(&[Var::X, Var::Y], 3);
        assert!(!lz.commutator(&px).agrees_on(&py, &space));
    }
}
