//! Exact scalar tower: rationals, Gaussian rationals and the surd ring
//! `Q(i)[sqrt(d), pi^(1/2), s]` used by every other module.

mod coefficient;
pub mod factor;
mod gauss;

use num_bigint::BigInt;
use thiserror::Error;

pub use coefficient::{Coefficient, SurdKey};
pub(crate) use coefficient::join_signed;
pub use gauss::GaussRational;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small rational literals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("cannot factor zero")]
    ZeroFactorization,
    #[error("expected a positive rational, got {0}")]
    NonPositive(String),
    #[error("integer {0} has a cofactor too large to certify as squarefree")]
    Unfactorable(String),
    #[error("{0} is not a single surd term and has no explicit inverse")]
    NotInvertible(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
