use serde::{Deserialize, Serialize};

use super::BesselEval;
use crate::error::{envelope, Result};
use crate::numeric::ComplexValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselIdentity {
    /// `J'' + J'/r + (1 - n²/r²) J = 0`
    Ode,
    /// `(2n/r) J_n = J_{n-1} + J_{n+1}`
    Recursion,
    /// `J_n' - (n/r) J_n = -J_{n+1}`
    RaisingRelation,
    /// `-J_n' - (n/r) J_n = -J_{n-1}`
    LoweringRelation,
    /// `2 J_n' = J_{n-1} - J_{n+1}`
    DerivativeRelation,
}

impl BesselIdentity {
    pub const ALL: [BesselIdentity; 5] = [
        BesselIdentity::Ode,
        BesselIdentity::Recursion,
        BesselIdentity::RaisingRelation,
        BesselIdentity::LoweringRelation,
        BesselIdentity::DerivativeRelation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BesselIdentity::Ode => "ode",
            BesselIdentity::Recursion => "recursion",
            BesselIdentity::RaisingRelation => "diffrel_raising",
            BesselIdentity::LoweringRelation => "diffrel_lowering",
            BesselIdentity::DerivativeRelation => "diffrel_derivative",
        }
    }
}

/// Absolute residual of the identity at `(n, r)`, using the series values
/// and termwise derivatives.
pub fn verify_bessel_identity(which: BesselIdentity, n: i32, r: f64) -> Result<f64> {
    if !(0.1..=20.0).contains(&r) || n.abs() > 10 {
        return Err(envelope(format!(
            "identity check needs 0.1 <= r <= 20, |n| <= 10; got n={n}, r={r}"
        )));
    }
    let eval = BesselEval::default();
    let z = ComplexValue::new(r, 0.0);
    let d = eval.derivatives(n, z)?;
    let jm = || eval.j(n - 1, z);
    let jp = || eval.j(n + 1, z);
    let nf = n as f64;
    let res = match which {
        BesselIdentity::Ode => d.d2 + d.d1 / r + d.j * (1.0 - nf * nf / (r * r)),
        BesselIdentity::Recursion => d.j * (2.0 * nf / r) - (jm()? + jp()?),
        BesselIdentity::RaisingRelation => d.d1 - d.j * (nf / r) + jp()?,
        BesselIdentity::LoweringRelation => -d.d1 - d.j * (nf / r) + jm()?,
        BesselIdentity::DerivativeRelation => d.d1 * 2.0 - (jm()? - jp()?),
    };
    Ok(res.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(verify_bessel_identity(BesselIdentity::Recursion, 1, 2.0).unwrap() < 1e-10);
        assert!(
            verify_bessel_identity(BesselIdentity::DerivativeRelation, 0, 3.0).unwrap() < 1e-10
        );
        assert!(verify_bessel_identity(BesselIdentity::Ode, 0, 0.1).unwrap() < 1e-9);
    }

    #[test]
    fn full_grid() {
        for which in BesselIdentity::ALL {
            for n in 0..=10 {
                for r in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
                    let tol = if which == BesselIdentity::Ode && r == 0.1 {
                        1e-9
                    } else {
                        1e-10
                    };
                    let res = verify_bessel_identity(which, n, r).unwrap();
                    assert!(res < tol, "{which:?} n={n} r={r}: {res}");
                }
            }
        }
    }

    #[test]
    fn outside_grid_is_rejected() {
        assert!(verify_bessel_identity(BesselIdentity::Ode, 0, 0.05).is_err());
        assert!(verify_bessel_identity(BesselIdentity::Ode, 11, 1.0).is_err());
    }
}
