//! Exact evaluation of terms at a point.

use std::collections::HashMap;

use super::{as_small_integer, index_var, q_var, HyperTerm, Kind};
use crate::error::{Error, Result};
use crate::field::{Polynomial, Var};
use crate::scalar::Scalar;
use crate::Rational;

/// Value of `t` at `k = k0` with the given parameter values. Companion
/// symbols `q^v` default to `q` raised to the value of `v`.
pub fn eval_term<S: Scalar>(t: &HyperTerm, k0: i64, values: &HashMap<Var, Rational>) -> Result<S> {
    let mut with_k = values.clone();
    with_k.insert(index_var(), Rational::from_integer(k0.into()));
    eval_term_with(t, &with_k)
}

/// Value of `t` with every symbol, including `k`, taken from `values`.
pub fn eval_term_with<S: Scalar>(t: &HyperTerm, values: &HashMap<Var, Rational>) -> Result<S> {
    let lookup = |v: Var| -> Option<S> {
        if v.is_imaginary_unit() {
            return S::imaginary_unit();
        }
        if let Some(c) = values.get(&v) {
            return Some(S::from_rational(c));
        }
        let w = v.q_exponent()?;
        let e = as_small_integer(values.get(&w)?)?;
        S::from_rational(values.get(&q_var())?).pow_int(e)
    };
    for v in t.vars() {
        if lookup(v).is_none() {
            return Err(Error::Invalid(format!("no value for symbol {v}")));
        }
    }
    let integer_at = |p: &Polynomial| -> Result<i64> {
        let r: Rational = p
            .eval(&mut |v: Var| values.get(&v).cloned())
            .ok_or_else(|| Error::Invalid(format!("no value for exponent {p}")))?;
        as_small_integer(&r).ok_or_else(|| Error::Invalid(format!("exponent {p} is not an integer")))
    };
    let mut value = |v: Var| lookup(v);
    let mut acc: S = t
        .prefactor
        .eval(&mut value)
        .ok_or(Error::PoleEncountered)?;
    for p in &t.powers {
        let base: S = p.base.eval(&mut value).ok_or(Error::PoleEncountered)?;
        let e = integer_at(&p.exp)?;
        acc = acc * base.pow_int(e).ok_or(Error::PoleEncountered)?;
    }
    let q: Option<S> = values.get(&q_var()).map(S::from_rational);
    for p in &t.pochhammers {
        let arg: S = p.arg.eval(&mut value).ok_or(Error::PoleEncountered)?;
        let len = integer_at(&p.len)?;
        let block = pochhammer_value(t.kind, &arg, len, q.as_ref())?;
        acc = acc * block.pow_int(p.mult as i64).ok_or(Error::PoleEncountered)?;
    }
    Ok(acc)
}

/// `(a)_len` or `(a;q)_len`, with `(a)_{-m} = 1/((a-1)...(a-m))`.
pub fn pochhammer_value<S: Scalar>(kind: Kind, a: &S, len: i64, q: Option<&S>) -> Result<S> {
    let factor = |j: i64| -> Result<S> {
        match kind {
            Kind::Ordinary => Ok(a.clone() + S::from_rational(&Rational::from_integer(j.into()))),
            Kind::Q => {
                let q = q.ok_or_else(|| Error::Invalid("no value for q".into()))?;
                let qj = q.pow_int(j).ok_or(Error::PoleEncountered)?;
                Ok(S::one() - a.clone() * qj)
            }
        }
    };
    let mut acc = S::one();
    if len >= 0 {
        for j in 0..len {
            acc = acc * factor(j)?;
        }
        Ok(acc)
    } else {
        for j in 1..=-len {
            acc = acc * factor(-j)?;
        }
        if acc.is_zero() {
            return Err(Error::PoleEncountered);
        }
        Ok(S::one() / acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalFunction;

    fn r(c: i64) -> Rational {
        Rational::from_integer(c.into())
    }

    #[test]
    fn pochhammer_products() {
        assert_eq!(pochhammer_value(Kind::Ordinary, &r(2), 3, None).unwrap(), r(24));
        let q = Rational::new(1.into(), 2.into());
        // (2;1/2)_2 = (1-2)(1-1) = 0
        assert!(pochhammer_value(Kind::Q, &r(2), 2, Some(&q)).unwrap() == r(0));
        // (3)_{-2} = 1/(2*1)
        assert_eq!(
            pochhammer_value(Kind::Ordinary, &r(3), -2, None).unwrap(),
            Rational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn empty_products_at_zero() {
        let t = HyperTerm::new(Kind::Ordinary, RationalFunction::var(Var::new("a")))
            .with_pochhammer(RationalFunction::var(Var::new("b")), Polynomial::var(index_var()), 1);
        let mut vals = HashMap::new();
        vals.insert(Var::new("a"), r(7));
        vals.insert(Var::new("b"), r(5));
        assert_eq!(eval_term::<Rational>(&t, 0, &vals).unwrap(), r(7));
        assert_eq!(eval_term::<Rational>(&t, 2, &vals).unwrap(), r(7 * 5 * 6));
    }
}
