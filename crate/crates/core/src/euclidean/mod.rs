//! Differential-operator representation of the Euclidean algebra on
//! cylindrical functions, the Bessel evaluator, and the Bessel identity and
//! generating-function checks.

mod bessel;
mod genfunc;
mod identities;
mod operators;
mod polar;

pub use bessel::{
    bessel_derivatives, bessel_j, bessel_j_real, bessel_zero_bisect, BesselEval, BesselTriple,
    MAX_ARG, MAX_ORDER,
};
pub use genfunc::{
    flow_genfunc_diagnostic, flow_solve, translation_genfunc_check, translation_genfunc_corrected,
    translation_series, FlowGenfuncDiagnostic, FlowReport, FlowState, DEFAULT_FLOW_STEPS,
    DEFAULT_TERMS,
};
pub use identities::{verify_bessel_identity, BesselIdentity};
pub use operators::{e2_differential_operators, e2_operator_relations};
pub use polar::{
    apply_polar_op, polar_numeric_crosscheck, CylFunc, CylTerm, PolarOp, CROSSCHECK_MIN_R,
    CROSSCHECK_STEP,
};
