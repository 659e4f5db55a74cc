use super::{ScaledBasis, VectorFieldOp};
use crate::error::{envelope, precondition, Result};
use crate::euclidean::BesselEval;
use crate::numeric::{rat, rational_to_f64, ComplexValue, Point, Polynomial, Rational, Var};

/// Sample offsets used for `x0` and `y0` around the point `(0, 0, R)`.
fn sample_offsets() -> Vec<Rational> {
    [-4, -2, -1, 0, 1, 2, 4]
        .iter()
        .map(|&k| rat(k, 4))
        .collect()
}

/// Largest `|((L'x + P_y) f)|` and `|((L'y - P_x) f)|` over points
/// `(x0, y0, R)` with `|x0|, |y0| <= 1`, for each `R`.
///
/// The test function is read in coordinates centred on the tangent point:
/// `f(x, y, z - R)`. A test function written in the global `z` would have
/// derivatives that grow with `R` at the evaluation point.
pub fn contraction_residual(f: &Polynomial, r_list: &[Rational]) -> Result<Vec<(Rational, f64)>> {
    if f.degree() > 6 {
        return Err(precondition(format!(
            "test polynomial degree {} exceeds 6",
            f.degree()
        )));
    }
    let mut out = Vec::with_capacity(r_list.len());
    for r in r_list {
        let basis = ScaledBasis::new(r.clone());
        let local = f.substitute(
            Var::Z,
            &(Polynomial::var(Var::Z) - Polynomial::constant(r.clone())),
        );
        let a = basis.lx().add(&VectorFieldOp::py()).apply(&local);
        let b = basis.ly().sub(&VectorFieldOp::px()).apply(&local);
        let mut worst = Rational::from_integer(0.into());
        for x0 in sample_offsets() {
            for y0 in sample_offsets() {
                let p = Point::new()
                    .with(Var::X, x0.clone())
                    .with(Var::Y, y0.clone())
                    .with(Var::Z, r.clone());
                for g in [&a, &b] {
                    let v = num_traits::Signed::abs(&g.eval(&p)?);
                    if v > worst {
                        worst = v;
                    }
                }
            }
        }
        out.push((r.clone(), rational_to_f64(&worst)));
    }
    Ok(out)
}

/// Step of the central differences in [`polar_ladder_limit`]; the θ step is
/// this divided by `R` so that it resolves the same distance on the tangent
/// plane at every scale.
pub const LIMIT_STEP: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitTestFunction {
    /// `J_n(r) e^{inφ}`
    Bessel(i32),
    Constant,
}

/// `|(L±/R) F - (±P±) f|` at the point `(r, φ)` of the tangent plane, where
/// `F(θ, φ) = f(R tan θ, φ)` is `f` carried to the sphere of radius `R`,
/// `L± = e^{±iφ}(∂θ ± i cot θ ∂φ)` act by finite differences and `P±` act
/// through the ladder relations. Returns the larger of the two residuals.
pub fn polar_ladder_limit(
    test: LimitTestFunction,
    r: f64,
    phi: f64,
    r_list: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if !(0.5..=5.0).contains(&r) {
        return Err(envelope(format!(
            "polar limit needs r in [0.5, 5], got {r}"
        )));
    }
    let eval = BesselEval::default();
    let i = ComplexValue::new(0.0, 1.0);
    let f = |rho: ComplexValue, ph: f64| -> Result<ComplexValue> {
        Ok(match test {
            LimitTestFunction::Bessel(n) => eval.j(n, rho)? * (i * n as f64 * ph).exp(),
            LimitTestFunction::Constant => ComplexValue::new(1.0, 0.0),
        })
    };
    // ±P± f through the ladder action: P± J_n e^{inφ} = -J_{n±1} e^{i(n±1)φ}
    let ladder = |sign: i32| -> Result<ComplexValue> {
        Ok(match test {
            LimitTestFunction::Bessel(n) => {
                let m = n + sign;
                -(sign as f64) * eval.j(m, ComplexValue::new(r, 0.0))? * (i * m as f64 * phi).exp()
            }
            LimitTestFunction::Constant => ComplexValue::new(0.0, 0.0),
        })
    };
    let mut out = Vec::with_capacity(r_list.len());
    for &big_r in r_list {
        let theta = (r / big_r).atan();
        let ht = LIMIT_STEP / big_r;
        let hp = LIMIT_STEP;
        let on_sphere = |th: f64, ph: f64| f(ComplexValue::new(big_r * th.tan(), 0.0), ph);
        let d_theta = (on_sphere(theta + ht, phi)? - on_sphere(theta - ht, phi)?) / (2.0 * ht);
        let d_phi = (on_sphere(theta, phi + hp)? - on_sphere(theta, phi - hp)?) / (2.0 * hp);
        let cot = 1.0 / theta.tan();
        let mut worst: f64 = 0.0;
        for sign in [1, -1] {
            let s = sign as f64;
            let l = (i * s * phi).exp() * (d_theta + s * i * cot * d_phi) / big_r;
            worst = worst.max((l - ladder(sign)?).norm());
        }
        out.push((big_r, worst));
    }
    Ok(out)
}

/// `P_l^m(x)` without the Condon–Shortley phase, by the forward recurrence in
/// `l` from `P_m^m = (2m-1)!! (1-x²)^{m/2}`.
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> Result<f64> {
    if l > 4096 {
        return Err(envelope(format!("degree {l} exceeds 4096")));
    }
    if m > l {
        return Err(precondition(format!("order {m} exceeds degree {l}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(precondition(format!("|x| = {} exceeds 1", x.abs())));
    }
    let s = (1.0 - x * x).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if l == m {
        return Ok(pmm);
    }
    let mut prev = pmm;
    let mut cur = (2 * m + 1) as f64 * x * pmm;
    for k in m + 1..l {
        let next = ((2 * k + 1) as f64 * x * cur - (k + m) as f64 * prev) / (k - m + 1) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `|l^{-m} P_l^m(cos(r/l)) - J_m(r)|` for each `l`.
pub fn mehler_heine_check(m: u32, r: f64, l_list: &[u32]) -> Result<Vec<(u32, f64)>> {
    if !(0.5..=8.0).contains(&r) || m > 5 {
        return Err(envelope(format!(
            "Mehler-Heine check needs r in [0.5, 8], m <= 5; got m={m}, r={r}"
        )));
    }
    let j = BesselEval::default()
        .j(m as i32, ComplexValue::new(r, 0.0))?
        .re;
    l_list
        .iter()
        .map(|&l| {
            let p = assoc_legendre(l, m, (r / l as f64).cos())?;
            Ok((l, (p / (l as f64).powi(m as i32) - j).abs()))
        })
        .collect()
}

/// The θ-form Legendre operator
/// `(1/sin θ) d/dθ (sin θ d/dθ) + l(l+1) - m²/sin²θ` applied to
/// `θ ↦ J_m(lθ)` at `θ = r/l`, divided by `l²`.
pub fn legendre_ode_residual(l: u32, m: u32, r: f64) -> Result<f64> {
    let lf = l as f64;
    let theta = r / lf;
    if l < 8 || !(0.5..=8.0).contains(&r) || theta >= std::f64::consts::FRAC_PI_4 {
        return Err(envelope(format!(
            "Legendre operator check needs l >= 8, r in [0.5, 8], r/l < pi/4; got l={l}, r={r}"
        )));
    }
    let d = BesselEval::default().derivatives(m as i32, ComplexValue::new(r, 0.0))?;
    let (g, g1, g2) = (d.j.re, lf * d.d1.re, lf * lf * d.d2.re);
    let (s, c) = theta.sin_cos();
    let mf = m as f64;
    let value = g2 + c / s * g1 + (lf * (lf + 1.0) - mf * mf / (s * s)) * g;
    Ok((value / (lf * lf)).abs())
}

/// `r² J'' + r J' + (r² - m²) J`, Bessel's equation in the form the limit
/// produces.
pub fn bessel_equation_residual(m: u32, r: f64) -> Result<f64> {
    let d = BesselEval::default().derivatives(m as i32, ComplexValue::new(r, 0.0))?;
    let mf = m as f64;
    Ok((r * r * d.d2 + r * d.d1 + (r * r - mf * mf) * d.j).norm())
}

/// `R = 8, 16, ..., 1024`.
pub fn doubling_schedule(from: u32, to: u32) -> Vec<u32> {
    std::iter::successors(Some(from), |&x| x.checked_mul(2))
        .take_while(|&x| x <= to)
        .collect()
}

/// Successive ratios `e_{k+1} / e_k`.
pub fn ratios(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| w[1] / w[0]).collect()
}
