//! so(3) as vector fields, its contraction to the Euclidean algebra as the
//! sphere radius grows, and the Legendre-to-Bessel limit.

mod limits;
mod vector_field;

pub use limits::{
    assoc_legendre, bessel_equation_residual, contraction_residual, doubling_schedule,
    legendre_ode_residual, mehler_heine_check, polar_ladder_limit, ratios, LimitTestFunction,
    LIMIT_STEP,
};
pub use vector_field::{
    commutator_matches_action, contracted_relations, jacobi_residual, scaled_commutator_check,
    so3_relations, vf_commutator, ScaledBasis, VectorFieldOp,
};
