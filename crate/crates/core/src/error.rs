use thiserror::Error;

use crate::oracle::RootSet;
use crate::routh::ChainFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("empty coefficient list")]
    EmptyInput,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("constant coefficient is nonzero, cannot divide by x")]
    NonzeroConstantTerm,

    #[error("polynomial has a root at the origin")]
    RootAtOrigin,

    #[error("a Routh step needs degree at least 1")]
    ConstantPolynomial,

    /// `q(0) = 0`, so `c = p(0)/q(0)` is undefined.
    #[error("degenerate Routh step: odd part vanishes at 0")]
    DegenerateStep,

    #[error("Routh chain failed: {0}")]
    Chain(ChainFailure),

    #[error("both combination weights are zero")]
    ZeroWeights,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid dimensions: {0}")]
    Dimension(String),

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize, partial: RootSet },
}
