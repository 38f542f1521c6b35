//! Exact polynomial and rational-function arithmetic over ℚ.

pub mod display;
pub mod gcd;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod ratfun;
pub mod resultant;
pub mod symbol;
pub mod unipoly;

pub use linalg::{gauss_jordan, nullspace, Echelon, LinearForm, Matrix, SolutionSpace};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ratfun::{RatFn, RationalFunction};
pub use symbol::Var;
