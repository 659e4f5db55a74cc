//! Contraction of so(3) to e(2): residuals of the scaled rotation generators
//! against translations as the sphere radius grows.
use liegen::contraction::{
    contraction_residual, mehler_heine_check, polar_ladder_limit, ratios, LimitTestFunction,
};
use liegen::numeric::{int, Polynomial, Var};

fn main() -> liegen::Result<()> {
    let (x, z) = (Polynomial::var(Var::X), Polynomial::var(Var::Z));
    let f = &(&x * &z) + &z.pow(2);
    let rs = [8, 16, 32, 64, 128, 256, 512, 1024];
    let exact: Vec<_> = rs.iter().map(|&r| int(r)).collect();
    let res: Vec<f64> = contraction_residual(&f, &exact)?
        .into_iter()
        .map(|p| p.1)
        .collect();
    for (r, e) in rs.iter().zip(&res) {
        println!("R={r:5} vector field residual {e:.3e}");
    }
    println!("ratios: {:.4?}", ratios(&res));

    let rf: Vec<f64> = rs.iter().map(|&r| r as f64).collect();
    let polar: Vec<f64> = polar_ladder_limit(LimitTestFunction::Bessel(1), 1.0, 0.3, &rf)?
        .into_iter()
        .map(|p| p.1)
        .collect();
    for (r, e) in rs.iter().zip(&polar) {
        println!("R={r:5} polar ladder residual {e:.3e}");
    }

    for (l, err) in mehler_heine_check(2, 2.0, &[64, 128, 256, 512, 1024])? {
        println!("l={l:5} |l^-2 P_l^2(cos(2/l)) - J_2(2)| = {err:.3e}");
    }
    Ok(())
}
