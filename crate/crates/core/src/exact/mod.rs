//! Exact scalar arithmetic and dense linear algebra.
//!
//! Everything downstream (Cartan inference, central charges, symmetrizer
//! ranks, OPE coefficients) runs on the types in this module: arbitrary
//! precision rationals, rational angles representing roots of unity, and
//! cyclotomic field elements. No floating point anywhere.

mod angle;
mod cyclotomic;
mod matrix;
mod rational;

pub use angle::RationalAngle;
pub use cyclotomic::Cyclotomic;
pub use matrix::{ExactMatrix, Scalar};
pub use rational::{format_rational, parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("angle {0} does not embed in Q(zeta_{1})")]
    BadEmbedding(RationalAngle, u64),
}
