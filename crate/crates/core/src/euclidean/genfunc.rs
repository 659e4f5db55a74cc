use serde::{Deserialize, Serialize};

use super::BesselEval;
use crate::error::{precondition, Error, Result};
use crate::numeric::{ensure_finite, ComplexValue};

/// Truncation the generating-function checks use by default.
pub const DEFAULT_TERMS: usize = 30;
/// Step count the flow integration uses by default.
pub const DEFAULT_FLOW_STEPS: usize = 10_000;

fn i() -> ComplexValue {
    ComplexValue::new(0.0, 1.0)
}

fn check_inputs(r: f64, t: ComplexValue, terms: usize) -> Result<()> {
    if t.norm() > 0.5 {
        return Err(precondition(format!("|t| = {} exceeds 0.5", t.norm())));
    }
    if !(0.5..=10.0).contains(&r) {
        return Err(precondition(format!("r = {r} outside [0.5, 10]")));
    }
    if terms < 30 {
        return Err(precondition(format!("truncation {terms} below 30")));
    }
    Ok(())
}

/// `Σ_{m<M} (-t)^m/m! e^{i(n+m)φ} J_{n+m}(r)`, the expansion of `e^{tP₊}`
/// acting on `⟨r,φ|n⟩`.
///
/// Orders above the validated envelope are reached for large `m`; there
/// `|t^m J_{n+m}(r)/m!|` is far below the tolerance being checked.
pub fn translation_series(
    n: i32,
    r: f64,
    phi: f64,
    t: ComplexValue,
    terms: usize,
) -> Result<ComplexValue> {
    let eval = BesselEval::default();
    let z = ComplexValue::new(r, 0.0);
    let mut coeff = ComplexValue::new(1.0, 0.0);
    let mut total = ComplexValue::new(0.0, 0.0);
    for m in 0..terms {
        let order = n + m as i32;
        let j = eval.series_unchecked(order, z)?;
        total += coeff * ComplexValue::from_polar(1.0, order as f64 * phi) * j;
        coeff *= -t / (m as f64 + 1.0);
    }
    ensure_finite(total, "translation series")
}

/// Residual of the printed closed form
/// `e^{inφ} J_n(√(r² + 2t(ix - y)))` against [`translation_series`], with
/// `x = r cos φ`, `y = r sin φ` and the principal square root.
pub fn translation_genfunc_check(
    n: i32,
    r: f64,
    phi: f64,
    t: ComplexValue,
    terms: usize,
) -> Result<f64> {
    check_inputs(r, t, terms)?;
    let (x, y) = (r * phi.cos(), r * phi.sin());
    let radicand = r * r + 2.0 * t * (i() * x - y);
    if radicand.re <= 0.0 {
        return Err(Error::BranchAmbiguity {
            re: radicand.re,
            im: radicand.im,
        });
    }
    let lhs = ComplexValue::from_polar(1.0, n as f64 * phi)
        * BesselEval::default().j(n, radicand.sqrt())?;
    Ok((lhs - translation_series(n, r, phi, t, terms)?).norm())
}

/// Residual of `(w/u)^n J_n(u)` with `w = r e^{iφ}`, `u² = r² + 2tw`,
/// which is `⟨r,φ|n⟩` evaluated at the translated point `(x + t, y + it)`.
/// `J_n(u)/u^n` is even in `u`, so no branch choice enters.
pub fn translation_genfunc_corrected(
    n: i32,
    r: f64,
    phi: f64,
    t: ComplexValue,
    terms: usize,
) -> Result<f64> {
    check_inputs(r, t, terms)?;
    let w = ComplexValue::from_polar(r, phi);
    let u = (r * r + 2.0 * t * w).sqrt();
    let lhs = if u.norm() == 0.0 {
        // limit of J_n(u)/u^n as u -> 0
        let nf = n.unsigned_abs();
        let fact: f64 = (1..=nf).map(f64::from).product();
        w.powi(n) / (2f64.powi(n) * fact)
    } else {
        (w / u).powi(n) * BesselEval::default().j(n, u)?
    };
    Ok((lhs - translation_series(n, r, phi, t, terms)?).norm())
}

/// State of `dr/dt = e^{iφ}`, `dφ/dt = i e^{iφ}/r`, `dq/dt = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowState {
    pub r: ComplexValue,
    pub phi: ComplexValue,
    pub q: ComplexValue,
    pub t: f64,
}

/// Endpoint of the integrated flow against the printed closed forms
/// `r(t) = √(2r₀φ₀t + r₀²)`, `φ(t) = r₀φ₀/r(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowReport {
    pub endpoint: FlowState,
    pub closed_r: ComplexValue,
    pub closed_phi: ComplexValue,
    pub r_discrepancy: f64,
    pub phi_discrepancy: f64,
    /// Drift of `r e^{iφ}`, which the exact flow conserves.
    pub invariant_drift: f64,
}

const MIN_FLOW_R: f64 = 1e-6;

fn rhs(r: ComplexValue, phi: ComplexValue) -> (ComplexValue, ComplexValue) {
    let e = (i() * phi).exp();
    (e, i() * e / r)
}

/// Classical RK4 from `(r0, φ0, 1)` along the straight path from 0 to
/// `t_end` in the complex `t` plane.
fn integrate(
    r0: ComplexValue,
    phi0: ComplexValue,
    t_end: ComplexValue,
    steps: usize,
) -> Result<(ComplexValue, ComplexValue, ComplexValue)> {
    let (mut r, mut phi, q) = (r0, phi0, ComplexValue::new(1.0, 0.0));
    let h = t_end / steps.max(1) as f64;
    for _ in 0..steps {
        let (k1r, k1p) = rhs(r, phi);
        let (k2r, k2p) = rhs(r + h / 2.0 * k1r, phi + h / 2.0 * k1p);
        let (k3r, k3p) = rhs(r + h / 2.0 * k2r, phi + h / 2.0 * k2p);
        let (k4r, k4p) = rhs(r + h * k3r, phi + h * k3p);
        r += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
        phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if r.norm() < MIN_FLOW_R {
            return Err(precondition(format!("flow reached |r| = {:e}", r.norm())));
        }
        ensure_finite(r, "flow integration")?;
        ensure_finite(phi, "flow integration")?;
    }
    Ok((r, phi, q))
}

fn closed_forms(r0: f64, phi0: f64, t: ComplexValue) -> (ComplexValue, ComplexValue) {
    let rt = (2.0 * r0 * phi0 * t + r0 * r0).sqrt();
    (rt, r0 * phi0 / rt)
}

pub fn flow_solve(r0: f64, phi0: f64, t_end: f64, steps: usize) -> Result<FlowReport> {
    if !(r0 > 0.0) || phi0 == 0.0 {
        return Err(precondition("flow needs r0 > 0 and phi0 != 0"));
    }
    let c = |x: f64| ComplexValue::new(x, 0.0);
    let steps = if t_end == 0.0 { 0 } else { steps };
    let (r, phi, q) = integrate(c(r0), c(phi0), c(t_end), steps)?;
    let (closed_r, closed_phi) = closed_forms(r0, phi0, c(t_end));
    let w0 = ComplexValue::from_polar(r0, phi0);
    Ok(FlowReport {
        endpoint: FlowState {
            r,
            phi,
            q,
            t: t_end,
        },
        closed_r,
        closed_phi,
        r_discrepancy: (r - closed_r).norm(),
        phi_discrepancy: (phi - closed_phi).norm(),
        invariant_drift: (r * (i() * phi).exp() - w0).norm(),
    })
}

/// Residuals of the flow-based generating function against
/// [`translation_series`]. Recorded, never gated.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowGenfuncDiagnostic {
    /// `exp(rφ/√(2rφt + r²)) J_n(√(2rφt + r²))`, as printed.
    pub residual_printed_form: f64,
    /// `e^{inφ(t)} J_n(r(t))` with the printed closed forms for `r(t)`, `φ(t)`.
    pub residual_corrected_form: f64,
    /// `e^{inφ(t)} J_n(r(t))` with `r(t)`, `φ(t)` from integrating the flow.
    pub residual_integrated_form: f64,
    pub smaller: String,
}

pub fn flow_genfunc_diagnostic(
    n: i32,
    r: f64,
    phi: f64,
    t: ComplexValue,
    terms: usize,
) -> Result<FlowGenfuncDiagnostic> {
    check_inputs(r, t, terms)?;
    let radicand = 2.0 * r * phi * t + r * r;
    if radicand.re <= 0.0 {
        return Err(Error::BranchAmbiguity {
            re: radicand.re,
            im: radicand.im,
        });
    }
    let eval = BesselEval::default();
    let rhs = translation_series(n, r, phi, t, terms)?;
    let (rt, phit) = closed_forms(r, phi, t);
    let printed = (r * phi / rt).exp() * eval.j(n, rt)?;
    let corrected = (i() * n as f64 * phit).exp() * eval.j(n, rt)?;
    let c = |x: f64| ComplexValue::new(x, 0.0);
    let (ri, phii, _) = integrate(c(r), c(phi), t, DEFAULT_FLOW_STEPS)?;
    let integrated = (i() * n as f64 * phii).exp() * eval.j(n, ri)?;
    let (a, b) = ((printed - rhs).norm(), (corrected - rhs).norm());
    Ok(FlowGenfuncDiagnostic {
        residual_printed_form: a,
        residual_corrected_form: b,
        residual_integrated_form: (integrated - rhs).norm(),
        smaller: if a <= b {
            "printed".into()
        } else {
            "corrected".into()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> ComplexValue {
        ComplexValue::new(x, 0.0)
    }

    #[test]
    fn zero_translation() {
        assert!(translation_genfunc_check(1, 2.0, 0.7, c(0.0), 30).unwrap() < 1e-15);
        assert!(translation_genfunc_corrected(1, 2.0, 0.7, c(0.0), 30).unwrap() < 1e-15);
        let d = flow_genfunc_diagnostic(2, 3.0, 0.4, c(0.0), 30).unwrap();
        assert!(d.residual_corrected_form < 1e-15);
    }

    #[test]
    fn corrected_form_holds_on_grid() {
        for n in 0..=2 {
            for r in [1.0, 2.0, 5.0] {
                for phi in [0.0, 0.7, std::f64::consts::FRAC_PI_3] {
                    for t in [
                        c(0.3),
                        c(-0.5),
                        ComplexValue::new(0.0, 0.5),
                        ComplexValue::new(0.2, -0.3),
                    ] {
                        let res = translation_genfunc_corrected(n, r, phi, t, 30).unwrap();
                        assert!(res < 1e-10, "n={n} r={r} phi={phi} t={t}: {res}");
                    }
                }
            }
        }
    }

    #[test]
    fn printed_form_misses_at_real_t() {
        // the printed radicand carries 2ti(x+iy) where the translation gives 2t(x+iy)
        let res = translation_genfunc_check(0, 2.0, 0.7, c(0.3), 30).unwrap();
        assert!(res > 1e-3, "{res}");
    }

    #[test]
    fn branch_guard() {
        let err = translation_genfunc_check(0, 1.0, 0.0, ComplexValue::new(0.0, 0.5), 30);
        assert!(matches!(err, Err(Error::BranchAmbiguity { .. })));
    }

    #[test]
    fn preconditions() {
        assert!(translation_genfunc_check(0, 2.0, 0.0, c(0.6), 30).is_err());
        assert!(translation_genfunc_check(0, 0.2, 0.0, c(0.1), 30).is_err());
        assert!(translation_genfunc_check(0, 2.0, 0.0, c(0.1), 10).is_err());
    }

    #[test]
    fn flow_basics() {
        let rep = flow_solve(2.0, 0.5, 0.0, 100).unwrap();
        assert_eq!(rep.endpoint.r, c(2.0));
        assert_eq!(rep.endpoint.phi, c(0.5));
        assert_eq!(rep.endpoint.q, c(1.0));
        let rep = flow_solve(2.0, 0.5, 0.3, 10_000).unwrap();
        assert_eq!(rep.endpoint.q, c(1.0));
        assert!(rep.invariant_drift < 1e-12);
        assert!(rep.r_discrepancy.is_finite() && rep.phi_discrepancy.is_finite());
        assert!(flow_solve(0.0, 0.5, 0.3, 10).is_err());
    }

    #[test]
    fn integrated_flow_reproduces_translation() {
        let d = flow_genfunc_diagnostic(0, 2.0, 0.5, c(0.2), 30).unwrap();
        assert!(d.residual_integrated_form < 1e-10, "{d:?}");
        let d = flow_genfunc_diagnostic(1, 3.0, 1.0, c(0.1), 30).unwrap();
        assert!(d.smaller == "printed" || d.smaller == "corrected");
    }
}
