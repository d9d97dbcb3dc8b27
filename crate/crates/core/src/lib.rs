//! Exact machinery for sequence transforms and generalized Motzkin moments.

pub mod error;
pub mod moments;
pub mod orthogonal;
pub mod polynomial;
pub mod recurrence;
pub mod scalar;
pub mod series;
pub mod transform;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use moments::{MomentRequest, MotzkinPath, Step};
pub use orthogonal::MomentFunctional;
pub use polynomial::Polynomial;
pub use recurrence::RecParams;
pub use scalar::ExactScalar;
pub use series::TruncatedSeries;
pub use transform::UnitSequence;
pub use weight::WeightSpec;
