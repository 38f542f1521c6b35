//! Rational functions in canonical form.

use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::display;
use super::gcd::gcd;
use super::poly::Polynomial;
use super::symbol::Var;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// Quotient of coprime polynomials with integer coefficients whose
/// combined content is 1 and whose denominator has a positive leading
/// coefficient. Structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

pub type RatFn = RationalFunction;

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::scale_normalize(p, Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value, when the denominator is constant.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn contains_any(&self, vs: &[Var]) -> bool {
        vs.iter().any(|&v| self.contains(v))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() || num.is_constant() {
            return Self::scale_normalize(num, den);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::scale_normalize(num, den);
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Self::scale_normalize(n, d)
    }

    fn scale_normalize(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (cn, pn) = num.primitive();
        let (cd, pd) = den.primitive();
        let r = cn / cd;
        let mut n = pn.scale(&Rational::from_integer(r.numer().clone()));
        let mut d = pd.scale(&Rational::from_integer(r.denom().clone()));
        if d.lc().is_negative() {
            n = -n;
            d = -d;
        }
        RationalFunction { num: n, den: d }
    }

    /// Product of coprime-reduced pieces without a full gcd of the result.
    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::scale_normalize(&n1 * &n2, &d1 * &d2)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let on = if negate { -&other.num } else { other.num.clone() };
        if self.is_zero() {
            return Self::scale_normalize(on, other.den.clone());
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(&self.num + &on, self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            return Self::scale_normalize(
                &self.num * &other.den + &on * &self.den,
                &self.den * &other.den,
            );
        }
        let g = gcd(&self.den, &other.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = &self.num * &d1 + &on * &b1;
        let den = &self.den * &d1;
        if g.is_one() {
            return Self::scale_normalize(num, den);
        }
        Self::reduce(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scale_normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_impl(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::scale_normalize(self.num.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        self.mul_impl(&Self::from_poly(p.clone()))
    }

    /// Substitutes polynomials for symbols.
    pub fn subst_poly(&self, map: &HashMap<Var, Polynomial>) -> Result<Self> {
        Self::new(self.num.subst(map), self.den.subst(map))
    }

    /// Substitutes rational functions for symbols.
    pub fn subst(&self, map: &HashMap<Var, RationalFunction>) -> Result<Self> {
        if map.values().all(|r| r.den.is_one()) {
            let pm = map.iter().map(|(&v, r)| (v, r.num.clone())).collect();
            return self.subst_poly(&pm);
        }
        let n = subst_rational(&self.num, map);
        let d = subst_rational(&self.den, map);
        n.checked_div(&d)
    }

    pub fn subst_var(&self, v: Var, val: &RationalFunction) -> Result<Self> {
        let mut map = HashMap::new();
        map.insert(v, val.clone());
        self.subst(&map)
    }

    /// `v -> v + c`.
    pub fn shift(&self, v: Var, c: &Rational) -> Self {
        if !self.contains(v) {
            return self.clone();
        }
        Self::reduce(self.num.shift(v, c), self.den.shift(v, c))
    }

    /// `v -> factor * v`.
    pub fn scale_var(&self, v: Var, factor: &Polynomial) -> Self {
        if !self.contains(v) {
            return self.clone();
        }
        Self::reduce(self.num.scale_var(v, factor), self.den.scale_var(v, factor))
    }

    pub fn derivative(&self, v: Var) -> Self {
        let n = &self.num.derivative(v) * &self.den - &self.num * &self.den.derivative(v);
        Self::reduce(n, self.den.pow(2))
    }

    /// Evaluates the function; `None` on a pole or an unassigned symbol.
    pub fn eval<S: Scalar>(&self, value: &mut impl FnMut(Var) -> Option<S>) -> Option<S> {
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(value)? / d)
    }

    pub fn eval_rational(&self, map: &HashMap<Var, Rational>) -> Option<Rational> {
        self.eval(&mut |v| map.get(&v).cloned())
    }

    pub fn partial_eval(&self, map: &HashMap<Var, Rational>) -> Result<Self> {
        Self::new(self.num.partial_eval(map), self.den.partial_eval(map))
    }

    /// Integer-valued constant, if this is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.as_constant()?;
        c.is_integer().then(|| c.to_integer())
    }

    pub fn to_latex(&self) -> String {
        display::ratfn_to_latex(&self.num, &self.den)
    }
}

/// Evaluates `p` at rational-function values of its symbols, sharing one
/// power of each denominator.
fn subst_rational(p: &Polynomial, map: &HashMap<Var, RationalFunction>) -> RationalFunction {
    let mut degs: HashMap<Var, u32> = HashMap::new();
    for (m, _) in p.terms() {
        for (v, e) in m.iter() {
            if map.contains_key(&v) {
                let d = degs.entry(v).or_insert(0);
                *d = (*d).max(e);
            }
        }
    }
    let mut total = Polynomial::zero();
    let mut pow_cache: HashMap<(Var, u32, bool), Polynomial> = HashMap::new();
    let mut power = |v: Var, e: u32, numer: bool| -> Polynomial {
        pow_cache
            .entry((v, e, numer))
            .or_insert_with(|| {
                let r = &map[&v];
                if numer { r.num.pow(e) } else { r.den.pow(e) }
            })
            .clone()
    };
    for (m, c) in p.terms() {
        let mut t = Polynomial::constant(c.clone());
        for (v, e) in m.iter() {
            if map.contains_key(&v) {
                t = &t * &power(v, e, true);
            } else {
                t = t.mul_monomial(&super::monomial::Monomial::var(v, e));
            }
        }
        for (&v, &d) in &degs {
            let e = m.exponent(v);
            if d > e {
                t = &t * &power(v, d - e, false);
            }
        }
        total = &total + &t;
    }
    let mut den = Polynomial::one();
    for (v, d) in degs {
        den = &den * &map[&v].den.pow(d);
    }
    RationalFunction::reduce(total, den)
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to
/// handle that case.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: Self) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", display::ratfn_to_string(&self.num, &self.den))
    }
}

impl std::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn v(name: &str) -> RationalFunction {
        RationalFunction::var(Var::new(name))
    }

    fn int(c: i64) -> RationalFunction {
        RationalFunction::integer(c)
    }

    #[test]
    fn normal_form() {
        let (k, a) = (v("k"), v("a"));
        let r = &(&(&k + &a) * &int(2)) / &int(4);
        assert_eq!(r.num().to_string(), "a+k");
        assert_eq!(r.den().to_string(), "2");
        let r = &(-&k) / &int(-1);
        assert_eq!(r, k);
        let r = &(&(&k * &k) - &(&a * &a)) / &(&k - &a);
        assert_eq!(r, &k + &a);
    }

    #[test]
    fn field_operations() {
        let (k, n) = (v("k"), v("n"));
        let x = &k / &(&n + &int(1));
        let y = &int(1) / &(&k - &n);
        let s = &(&x + &y) - &y;
        assert_eq!(s, x);
        assert_eq!(&(&x * &y) / &y, x);
        assert!(RationalFunction::zero().inv().is_err());
        assert_eq!(x.pow(-2).unwrap(), &(&(&n + &int(1)) * &(&n + &int(1))) / &(&k * &k));
    }

    #[test]
    fn substitution_and_shift() {
        let (k, n) = (v("k"), v("n"));
        let kv = Var::new("k");
        let r = &(&k * &k) / &(&n - &k);
        let mut map = HashMap::new();
        map.insert(kv, &int(1) / &n);
        let s = r.subst(&map).unwrap();
        // (1/n^2) / (n - 1/n) = 1/(n^3 - n)
        let expected = &int(1) / &(&(&(&n * &n) * &n) - &n);
        assert_eq!(s, expected);
        assert_eq!(
            r.shift(kv, &Rational::one()),
            &(&(&k + &int(1)) * &(&k + &int(1))) / &(&(&n - &k) - &int(1))
        );
    }

    #[test]
    fn derivative_matches_quotient_rule() {
        let k = v("k");
        let kv = Var::new("k");
        let r = &int(1) / &k;
        assert_eq!(r.derivative(kv), &int(-1) / &(&k * &k));
    }
}
