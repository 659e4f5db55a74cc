use std::fmt;

use crate::numeric::{int, monomials_up_to, Polynomial, Rational, RelationCheck, Var};

/// First-order operator `c_x ∂x + c_y ∂y + c_z ∂z` with polynomial
/// coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VectorFieldOp {
    pub c: [Polynomial; 3],
}

const AXES: [Var; 3] = [Var::X, Var::Y, Var::Z];

impl VectorFieldOp {
    pub fn new(cx: Polynomial, cy: Polynomial, cz: Polynomial) -> Self {
        VectorFieldOp { c: [cx, cy, cz] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `L_x = y∂z - z∂y`
    pub fn lx() -> Self {
        Self::new(
            Polynomial::zero(),
            -Polynomial::var(Var::Z),
            Polynomial::var(Var::Y),
        )
    }

    /// `L_y = z∂x - x∂z`
    pub fn ly() -> Self {
        Self::new(
            Polynomial::var(Var::Z),
            Polynomial::zero(),
            -Polynomial::var(Var::X),
        )
    }

    /// `L_z = x∂y - y∂x`
    pub fn lz() -> Self {
        Self::new(
            -Polynomial::var(Var::Y),
            Polynomial::var(Var::X),
            Polynomial::zero(),
        )
    }

    /// `P_x = ∂x`
    pub fn px() -> Self {
        Self::new(Polynomial::one(), Polynomial::zero(), Polynomial::zero())
    }

    /// `P_y = ∂y`
    pub fn py() -> Self {
        Self::new(Polynomial::zero(), Polynomial::one(), Polynomial::zero())
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        AXES.iter()
            .zip(&self.c)
            .fold(Polynomial::zero(), |acc, (&v, c)| {
                acc + c * &f.derivative(v)
            })
    }

    pub fn add(&self, other: &Self) -> Self {
        VectorFieldOp {
            c: [0, 1, 2].map(|i| &self.c[i] + &other.c[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        VectorFieldOp {
            c: [0, 1, 2].map(|i| &self.c[i] - &other.c[i]),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        VectorFieldOp {
            c: [0, 1, 2].map(|i| self.c[i].scale(k)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Polynomial::is_zero)
    }
}

/// `[a, b]`, with components `a(b_i) - b(a_i)`.
pub fn vf_commutator(a: &VectorFieldOp, b: &VectorFieldOp) -> VectorFieldOp {
    VectorFieldOp {
        c: [0, 1, 2].map(|i| a.apply(&b.c[i]) - b.apply(&a.c[i])),
    }
}

/// Whether [`vf_commutator`] agrees with `a∘b - b∘a` applied to every
/// monomial in `x, y, z` of degree at most `max_degree`.
pub fn commutator_matches_action(a: &VectorFieldOp, b: &VectorFieldOp, max_degree: u32) -> bool {
    let c = vf_commutator(a, b);
    monomials_up_to(&AXES, max_degree)
        .iter()
        .all(|f| a.apply(&b.apply(f)) - b.apply(&a.apply(f)) == c.apply(f))
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`.
pub fn jacobi_residual(a: &VectorFieldOp, b: &VectorFieldOp, c: &VectorFieldOp) -> VectorFieldOp {
    vf_commutator(a, &vf_commutator(b, c))
        .add(&vf_commutator(b, &vf_commutator(c, a)))
        .add(&vf_commutator(c, &vf_commutator(a, b)))
}

/// `[L_x, L_y] = -L_z`, `[L_y, L_z] = -L_x`, `[L_z, L_x] = -L_y`, each both as
/// a coefficient identity and at the level of action on monomials.
pub fn so3_relations(max_degree: u32) -> Vec<RelationCheck> {
    let (x, y, z) = (
        VectorFieldOp::lx(),
        VectorFieldOp::ly(),
        VectorFieldOp::lz(),
    );
    let minus = |v: &VectorFieldOp| v.scale(&int(-1));
    [
        ("[Lx,Ly] = -Lz", &x, &y, minus(&z)),
        ("[Ly,Lz] = -Lx", &y, &z, minus(&x)),
        ("[Lz,Lx] = -Ly", &z, &x, minus(&y)),
    ]
    .into_iter()
    .map(|(name, a, b, want)| {
        let holds = vf_commutator(a, b) == want && commutator_matches_action(a, b, max_degree);
        RelationCheck::new(name, holds)
    })
    .collect()
}

/// `L'_x = L_x/R`, `L'_y = L_y/R`, `L'_z = L_z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledBasis {
    r: Rational,
}

impl ScaledBasis {
    pub fn new(r: Rational) -> Self {
        assert!(r > int(0), "scale parameter must be positive");
        ScaledBasis { r }
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn lx(&self) -> VectorFieldOp {
        VectorFieldOp::lx().scale(&self.r.recip())
    }

    pub fn ly(&self) -> VectorFieldOp {
        VectorFieldOp::ly().scale(&self.r.recip())
    }

    pub fn lz(&self) -> VectorFieldOp {
        VectorFieldOp::lz()
    }
}

/// `[L'x, L'y] = -L'z/R²`, `[L'y, L'z] = -L'x`, `[L'z, L'x] = -L'y`, exact.
pub fn scaled_commutator_check(r: &Rational) -> Vec<RelationCheck> {
    let b = ScaledBasis::new(r.clone());
    let (x, y, z) = (b.lx(), b.ly(), b.lz());
    let r2 = r * r;
    vec![
        RelationCheck::new(
            format!("[L'x,L'y] = -L'z/R^2 (R={r})"),
            vf_commutator(&x, &y).add(&z.scale(&r2.recip())).is_zero(),
        ),
        RelationCheck::new(
            format!("[L'y,L'z] = -L'x (R={r})"),
            vf_commutator(&y, &z).add(&x).is_zero(),
        ),
        RelationCheck::new(
            format!("[L'z,L'x] = -L'y (R={r})"),
            vf_commutator(&z, &x).add(&y).is_zero(),
        ),
    ]
}

/// The `R → ∞` limits `L'x → -P_y`, `L'y → P_x`, `L'z = L_z` substituted
/// into the scaled relations give the Euclidean algebra:
/// `[-P_y, P_x] = 0`, `[P_x, L_z] = P_y`, `[L_z, -P_y] = -P_x`.
pub fn contracted_relations() -> Vec<RelationCheck> {
    let a = VectorFieldOp::py().scale(&int(-1));
    let b = VectorFieldOp::px();
    let c = VectorFieldOp::lz();
    vec![
        RelationCheck::new("[-Py,Px] = 0", vf_commutator(&a, &b).is_zero()),
        RelationCheck::new("[Px,Lz] = Py", vf_commutator(&b, &c).add(&a).is_zero()),
        RelationCheck::new("[Lz,-Py] = -Px", vf_commutator(&c, &a).add(&b).is_zero()),
    ]
}

impl fmt::Display for VectorFieldOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = AXES
            .iter()
            .zip(&self.c)
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| format!("({c})∂{}", v.name()))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for VectorFieldOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    #[test]
    fn angular_momentum_relations() {
        let (x, y, z) = (
            VectorFieldOp::lx(),
            VectorFieldOp::ly(),
            VectorFieldOp::lz(),
        );
        assert_eq!(vf_commutator(&x, &y), z.scale(&int(-1)));
        assert!(vf_commutator(&x, &x).is_zero());
        assert_eq!(vf_commutator(&y, &z), x.scale(&int(-1)));
        assert!(so3_relations(6).iter().all(|c| c.holds));
        assert!(jacobi_residual(&x, &y, &z).is_zero());
    }

    #[test]
    fn scaled_relations() {
        for r in [int(1), int(10), int(1000), rat(7, 3)] {
            assert!(scaled_commutator_check(&r).iter().all(|c| c.holds), "R={r}");
        }
        let b = ScaledBasis::new(int(10));
        let got = vf_commutator(&b.lx(), &b.ly()).add(&b.lz().scale(&rat(1, 100)));
        assert!(got.is_zero());
    }

    #[test]
    fn contraction_gives_euclidean_algebra() {
        assert!(contracted_relations().iter().all(|c| c.holds));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-5i64..=5, 0u32..=2, 0u32..=2, 0u32..=2), 0..4).prop_map(|ts| {
            ts.into_iter()
                .fold(Polynomial::zero(), |acc, (c, a, b, d)| {
                    let m = Polynomial::var(Var::X).pow(a)
                        * Polynomial::var(Var::Y).pow(b)
                        * Polynomial::var(Var::Z).pow(d);
                    acc + m.scale(&int(c))
                })
        })
    }

    fn small_field() -> impl Strategy<Value = VectorFieldOp> {
        (small_poly(), small_poly(), small_poly()).prop_map(|(a, b, c)| VectorFieldOp::new(a, b, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn antisymmetry(a in small_field(), b in small_field()) {
            prop_assert!(vf_commutator(&a, &b).add(&vf_commutator(&b, &a)).is_zero());
        }

        #[test]
        fn jacobi(a in small_field(), b in small_field(), c in small_field()) {
            prop_assert!(jacobi_residual(&a, &b, &c).is_zero());
        }

        #[test]
        fn coefficient_commutator_matches_action(a in small_field(), b in small_field()) {
            prop_assert!(commutator_matches_action(&a, &b, 3));
        }
    }
}
