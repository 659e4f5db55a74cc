//! Evaluate Bessel functions from the series and check the recursion,
//! differential relations and the finite-difference ladder crosscheck.
use liegen::euclidean::{
    bessel_j_real, polar_numeric_crosscheck, verify_bessel_identity, BesselIdentity, PolarOp,
    CROSSCHECK_STEP,
};

fn main() -> liegen::Result<()> {
    for n in 0..=3 {
        println!("J_{n}(2.5) = {:.15}", bessel_j_real(n, 2.5)?);
    }
    for which in BesselIdentity::ALL {
        let worst = [0.5, 2.0, 10.0]
            .iter()
            .map(|&r| verify_bessel_identity(which, 4, r))
            .collect::<liegen::Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("{:>18}: worst residual {worst:.2e}", which.id());
    }
    let d = polar_numeric_crosscheck(PolarOp::PPlus, 2, 3.0, 0.7, CROSSCHECK_STEP)?;
    println!("P+ J_2 e^(2i phi) vs finite differences: {d:.2e}");
    Ok(())
}
