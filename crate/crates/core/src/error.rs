//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the exact and numeric layers.
///
/// Violated mathematical preconditions (orders, constant terms, parameter
/// ranges) are reported through this enum rather than panics so that callers
/// such as the command-line front end can translate them into usage errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has no reciprocal: constant term is zero")]
    NotAUnit,

    #[error("inner series of a composition must have constant term zero")]
    CompositionConstantTerm,

    #[error("series square root requires constant term one")]
    SqrtConstantTerm,

    #[error("compositional inverse requires constant term zero and linear term one")]
    NotReversible,

    #[error("series order {order} too small: at least {needed} coefficients needed")]
    InsufficientOrder { needed: usize, order: usize },

    #[error("sequence must be nonempty and start with 1")]
    NotUnitSequence,

    #[error("path dips below height zero or does not return to it")]
    NotAPath,

    #[error("sequence length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("moment parameters require k != 0")]
    ZeroK,

    #[error("continued fraction depth {got} cannot determine {n_max} + 1 moments: need depth >= {required}")]
    InsufficientDepth {
        required: usize,
        got: usize,
        n_max: usize,
    },

    #[error("path length {n} exceeds the exhaustive enumeration bound {bound}")]
    PathBoundExceeded { n: usize, bound: usize },

    #[error("division by the zero polynomial")]
    ZeroPolynomialDivision,

    #[error("weight function requires k > 0")]
    NonPositiveK,

    #[error("relative tolerance {0} outside the supported range (1e-14, 1e-2)")]
    ToleranceOutOfRange(f64),

    #[error("need at least {needed} sample points, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("quadrature did not converge: estimate {estimate}, error bound {error_bound}")]
    QuadratureNonConvergence { estimate: f64, error_bound: f64 },
}
