//! Symbolic summation of hypergeometric and basic hypergeometric terms.

pub mod catalog;
pub mod error;
pub mod field;
pub mod gosper;
pub mod scalar;
pub mod syntax;
pub mod telescope;
pub mod terms;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Polynomial, RatFn, RationalFunction, Var};
pub use scalar::Scalar;
pub use terms::{HyperTerm, Kind, SimilarFamily};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Gaussian rationals, used when a term involves the imaginary unit.
pub type Gaussian = num_complex::Complex<Rational>;
