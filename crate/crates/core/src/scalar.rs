//! Scalar fields used for numeric evaluation of symbolic objects.
//!
//! Symbolic arithmetic is always exact over ℚ. Evaluation of terms and
//! rational functions is generic so the same code path serves exact
//! rational checks, Gaussian-rational checks (terms containing `i`) and
//! floating-point spot checks.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};

use crate::Rational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    /// A square root of -1, when the field has one.
    fn imaginary_unit() -> Option<Self>;

    fn pow_int(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 {
            if self.is_zero() {
                return None;
            }
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        Some(acc)
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }
}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }
}

impl Scalar for Complex<Rational> {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.clone(), Rational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(Rational::zero(), Rational::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_powers() {
        let two = Rational::from_integer(2.into());
        assert_eq!(two.pow_int(10).unwrap(), Rational::from_integer(1024.into()));
        assert_eq!(two.pow_int(-2).unwrap(), Rational::new(1.into(), 4.into()));
        assert_eq!(Rational::zero().pow_int(-1), None);
        let i = Complex::<Rational>::imaginary_unit().unwrap();
        assert_eq!(i.pow_int(2).unwrap(), Complex::from_rational(&-Rational::one()));
        assert_eq!(Scalar::pow_int(&3.0f64, 2), Some(9.0));
    }
}
