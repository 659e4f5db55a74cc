//! Build Hermite polynomials by repeatedly raising the Gaussian ground state
//! and check the ladder and anticommutator identities exactly.
use liegen::heisenberg::{
    apply_ladder, hermite_recurrence, verify_hermite_identity, GaussianWeighted, HermiteIdentity,
    ScaledLadderOp,
};

fn main() -> liegen::Result<()> {
    let mut state = GaussianWeighted::ground();
    for n in 0..=6u32 {
        assert_eq!(state.p, hermite_recurrence(n));
        println!("b+^{n} e^(-x^2/2) = ({}) e^(-x^2/2)", state.p);
        state = apply_ladder(ScaledLadderOp::BPlus, &state);
    }
    for which in HermiteIdentity::ALL {
        let r = verify_hermite_identity(which, 12, 64)?;
        println!(
            "{:>15} at n=12: residual zero = {}",
            which.id(),
            r.is_zero()
        );
    }
    Ok(())
}
