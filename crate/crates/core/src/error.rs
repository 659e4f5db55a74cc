use thiserror::Error;

use crate::numeric::Var;

/// Errors raised across the crate.
///
/// The CLI maps [`Error::Envelope`] to exit code 3 and [`Error::Config`] to
/// exit code 2; everything else is treated as an internal failure.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("evaluation point is missing coordinate {0:?}")]
    MissingCoordinate(Var),

    #[error("series has a nonzero constant term; exp/compose need a zero constant term")]
    NonZeroConstantTerm,

    #[error("requested order {requested} exceeds the series truncation order {available}")]
    OrderTooLarge { requested: usize, available: usize },

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("outside the supported envelope: {0}")]
    Envelope(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("branch ambiguity: radicand {re:.6e}{im:+.6e}i is not in the right half-plane")]
    BranchAmbiguity { re: f64, im: f64 },

    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn envelope(msg: impl Into<String>) -> Error {
    Error::Envelope(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
