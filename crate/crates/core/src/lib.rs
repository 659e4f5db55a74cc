//! Lie groups and algebras in matrix and differential-operator form, and the
//! special functions they generate.
//!
//! * [`groups`]: 3x3 realizations of the Heisenberg group `H3` and the
//!   Euclidean plane group `E2`, with exponential maps and axiom checks.
//! * [`heisenberg`]: ladder operators on Gaussian-weighted polynomials, the
//!   Hermite polynomials they generate, and exact checks of the classical
//!   Hermite identities.
//! * [`euclidean`]: the `e2` ladder operators on cylindrical functions, an
//!   extended-precision Bessel evaluator and numeric checks of the Bessel
//!   identities and generating functions.
//! * [`contraction`]: `so(3)` vector fields, the contraction `SO(3) -> E2`
//!   and the Legendre to Bessel limit.
//! * [`suite`]: verification suites, reports and tables behind the `liegen`
//!   binary.
//!
//! Exact work is done over [`numeric::Rational`] (arbitrary precision), so
//! identities that hold algebraically are checked with a residual that is
//! identically zero rather than small.

pub mod contraction;
pub mod error;
pub mod euclidean;
pub mod groups;
pub mod heisenberg;
pub mod numeric;
pub mod suite;

pub use error::{Error, Result};
