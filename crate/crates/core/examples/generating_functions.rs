//! Hermite generating function as an exact power series, and the Bessel
//! translation generating function in its printed and corrected forms.
use liegen::euclidean::{translation_genfunc_check, translation_genfunc_corrected};
use liegen::heisenberg::{disentangle_check, hermite_genfunc_check};
use liegen::numeric::ComplexValue;

fn main() -> liegen::Result<()> {
    println!(
        "exp(2xt - t^2) residual zero through t^64: {}",
        hermite_genfunc_check(64, 64)?.is_zero()
    );
    println!(
        "disentangled expansions agree through t^32: {}",
        disentangle_check(32)?.is_zero()
    );
    let t = ComplexValue::new(0.3, 0.0);
    for n in 0..=2 {
        let printed = translation_genfunc_check(n, 2.0, 0.7, t, 30);
        let corrected = translation_genfunc_corrected(n, 2.0, 0.7, t, 30)?;
        println!("n={n}: printed form {printed:?}, corrected form {corrected:.2e}");
    }
    Ok(())
}
