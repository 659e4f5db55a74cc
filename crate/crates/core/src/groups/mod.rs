//! Closed-form 3×3 matrix realizations of the Heisenberg group H3 and the
//! Euclidean group E2, with their generators and group-axiom checks.

mod axioms;
mod e2;
mod h3;
mod matrix;

pub use axioms::{
    axiom_suite, exact_generator, generators_at_identity, Axiom, AxiomReport, Group, Residual,
    GENERATOR_STEP,
};
pub use e2::{
    e2_apply, e2_exp_rotation, e2_exp_translation, e2_generator, e2_generator_exact, Axis,
    E2Element,
};
pub use h3::{h3_generator, H3AlgebraElement, H3Element};
pub use matrix::Matrix3;
