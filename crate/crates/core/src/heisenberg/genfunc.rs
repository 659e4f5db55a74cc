use super::{apply_ladder, hermite_rodrigues_table, GaussianWeighted, ScaledLadderOp};
use crate::error::Result;
use crate::numeric::{
    factorial, int, series_exp, Coeff, OperatorSpace, Polynomial, PowerSeries, Rational, Var,
};

fn inv_factorial(k: usize) -> Rational {
    Rational::new(1.into(), factorial(k as u32))
}

/// `e^{-tD} f = Σ_k (-t)^k D^k f / k!` up to order `order`, with `D = d/dx`
/// acting on whatever space `f` lives in.
pub fn shift_series<S: OperatorSpace>(f: &S, order: usize) -> PowerSeries<S> {
    let mut dk = f.clone();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        coeffs.push(dk.scaled(&(sign * inv_factorial(k))));
        dk = dk.partial(Var::X);
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// `f(x - t)` expanded in powers of `t`, by direct substitution.
pub fn substituted_shift(f: &Polynomial, order: usize) -> PowerSeries<Polynomial> {
    let x_minus_t = Polynomial::var(Var::X) - Polynomial::var(Var::Aux);
    let g = f.substitute(Var::X, &x_minus_t);
    PowerSeries::from_fn(order, |k| g.coefficient_of(Var::Aux, k as u32))
}

/// `c · (x t)^power` style helper: the series `Σ_k a_k t^k` with polynomial
/// coefficients given as a list.
fn poly_series(order: usize, coeffs: &[(usize, Polynomial)]) -> PowerSeries<Polynomial> {
    let mut v = vec![Polynomial::zero(); order + 1];
    for (k, c) in coeffs {
        if *k <= order {
            v[*k] = c.clone();
        }
    }
    PowerSeries::from_coeffs(v, order)
}

/// Both sides of `e^{t(x-D)} = e^{tx} e^{-t²/2} e^{-tD}` applied to the ground
/// state, and their coefficientwise difference.
///
/// The left side applies `b₊ = x - D` repeatedly. The right side multiplies
/// the exponentials of `tx` and `-t²/2` with the operator shift series of the
/// weight. The normalization `π^{-1/4}` multiplies both sides alike and is
/// left out.
pub fn disentangle_sides(
    order: usize,
) -> Result<(PowerSeries<GaussianWeighted>, PowerSeries<GaussianWeighted>)> {
    let mut f = GaussianWeighted::ground();
    let mut lhs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        lhs.push(f.scaled(&inv_factorial(k)));
        f = apply_ladder(ScaledLadderOp::BPlus, &f);
    }
    let lhs = PowerSeries::from_coeffs(lhs, order);

    let etx = series_exp(&poly_series(order, &[(1, Polynomial::var(Var::X))]), order)?;
    let gauss = series_exp(
        &poly_series(
            order,
            &[(
                2,
                Polynomial::constant(Rational::new((-1).into(), 2.into())),
            )],
        ),
        order,
    )?;
    let shifted = shift_series(&GaussianWeighted::ground(), order);
    let rhs = etx.mul(&gauss).convolve(&shifted, |p, g| g.times_poly(p));
    Ok((lhs, rhs))
}

pub fn disentangle_check(order: usize) -> Result<PowerSeries<GaussianWeighted>> {
    let (lhs, rhs) = disentangle_sides(order)?;
    Ok(lhs.sub(&rhs))
}

/// `exp(2xt - t²) - Σ_{n<=K} H_n tⁿ/n!` with `H_n` from the Rodrigues path.
pub fn hermite_genfunc_check(order: usize, max_n: u32) -> Result<PowerSeries<Polynomial>> {
    let s = poly_series(
        order,
        &[
            (1, Polynomial::monomial(int(2), Var::X, 1)),
            (2, Polynomial::constant(int(-1))),
        ],
    );
    let lhs = series_exp(&s, order)?;
    let table = hermite_rodrigues_table(order as u32, max_n)?;
    let rhs = PowerSeries::from_fn(order, |k| table[k].scale(&inv_factorial(k)));
    Ok(lhs.sub(&rhs))
}
