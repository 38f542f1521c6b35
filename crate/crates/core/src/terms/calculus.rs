//! Derivatives and differences of terms with respect to a parameter.

use std::collections::HashMap;

use super::quotient::quotient;
use super::{q_var, HyperTerm, Kind};
use crate::error::{Error, Result};
use crate::field::{RationalFunction, Var};

impl HyperTerm {
    /// `d t / d v`. Bases and the prefactor may depend on `v`; Pochhammer
    /// factors and exponents may not.
    pub fn differentiate(&self, v: Var) -> Result<HyperTerm> {
        if self.kind != Kind::Ordinary {
            return Err(Error::Invalid("derivatives apply to ordinary terms".into()));
        }
        for p in &self.pochhammers {
            if p.arg.contains(v) || p.len.contains(v) {
                return Err(Error::VarInPochhammer(v.name()));
            }
        }
        let mut log_derivative = RationalFunction::zero();
        for p in &self.powers {
            if p.exp.contains(v) {
                return Err(Error::VarInPochhammer(v.name()));
            }
            if p.base.contains(v) {
                let d = p.base.derivative(v).checked_div(&p.base)?;
                log_derivative = &log_derivative + &d.mul_poly(&p.exp);
            }
        }
        let mut t = self.clone();
        t.prefactor =
            &self.prefactor.derivative(v) + &(&self.prefactor * &log_derivative);
        Ok(t)
    }

    /// `(t(qv) - t(v)) / ((q-1) v)`.
    pub fn q_difference(&self, v: Var) -> Result<HyperTerm> {
        if self.pochhammers.iter().any(|p| p.len.contains(v))
            || self.powers.iter().any(|p| p.exp.contains(v))
        {
            return Err(Error::VarInPochhammer(v.name()));
        }
        let q = RationalFunction::var(q_var());
        let x = RationalFunction::var(v);
        let mut b = HashMap::new();
        b.insert(v, &q * &x);
        let scaled = self.substitute(&b)?;
        let r = quotient(&scaled, self)?;
        let factor = (&r - &RationalFunction::one())
            .checked_div(&(&(&q - &RationalFunction::one()) * &x))?;
        Ok(self.mul_rational(&factor))
    }

    /// `t(v+1) - t(v)`.
    pub fn forward_difference(&self, v: Var) -> Result<HyperTerm> {
        let r = quotient(&self.shift(v, 1)?, self)?;
        Ok(self.mul_rational(&(&r - &RationalFunction::one())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Polynomial;

    fn v(name: &str) -> RationalFunction {
        RationalFunction::var(Var::new(name))
    }

    fn p(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    #[test]
    fn derivative_of_powers() {
        // (2x)^n (-1/x^2)^k -> prefactor (n-2k)/x
        let x = v("x");
        let two_x = &RationalFunction::integer(2) * &x;
        let base = &RationalFunction::integer(-1) / &(&x * &x);
        let t = HyperTerm::one(Kind::Ordinary)
            .with_power(two_x, p("n"))
            .with_power(base, p("k"));
        let d = t.differentiate(Var::new("x")).unwrap();
        let expected = &(&v("n") - &(&RationalFunction::integer(2) * &v("k"))) / &x;
        assert_eq!(d.prefactor, expected);
        assert_eq!(d.powers, t.powers);
    }

    #[test]
    fn derivative_rejects_pochhammer_dependence() {
        let t = HyperTerm::one(Kind::Ordinary).with_pochhammer(-&v("x"), p("k"), 1);
        assert!(matches!(
            t.differentiate(Var::new("x")),
            Err(Error::VarInPochhammer(_))
        ));
        let t = HyperTerm::new(Kind::Ordinary, v("x"));
        assert!(t.differentiate(Var::new("x")).unwrap().prefactor.is_one());
    }

    #[test]
    fn q_difference_of_monomial() {
        // d x^2 = (q^2 - 1) x^2 / ((q - 1) x) = (q + 1) x
        let t = HyperTerm::new(Kind::Q, &v("x") * &v("x"));
        let d = t.q_difference(Var::new("x")).unwrap();
        assert_eq!(d.prefactor, &(&v("q") + &RationalFunction::one()) * &v("x"));
    }
}
