//! Differential-operator representation of the Heisenberg algebra on
//! Gaussian-weighted polynomials, and the Hermite polynomials it produces.

mod discrete;
mod genfunc;
mod hermite;
mod ladder;
mod weighted;

pub use discrete::{discrete_matrix, DiscreteMatrix, DiscreteOp};
pub use genfunc::{
    disentangle_check, disentangle_sides, hermite_genfunc_check, shift_series, substituted_shift,
};
pub use hermite::{
    anticommutator_eigenvalue, anticommutator_expr, hermite_recurrence, hermite_recurrence_table,
    hermite_rodrigues, hermite_rodrigues_table, ladder_consistency, leading_coefficient,
    mixed_basis, oscillator_expr, overlap, parity_residual, verify_hermite_identity, ExactResidual,
    HermiteIdentity, NormFactor, DEFAULT_MAX_N,
};
pub use ladder::{apply_ladder, ladder_relations_hold, weighted_monomials, ScaledLadderOp};
pub use weighted::{weighted_inner_product, GaussianWeighted};
