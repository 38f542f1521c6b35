use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::monomial::Monomial;
use super::symbol::{Var, IMAGINARY_UNIT};
use crate::scalar::Scalar;
use crate::Rational;

static IMAG: Lazy<Var> = Lazy::new(|| Var::new(IMAGINARY_UNIT));

/// Sparse multivariate polynomial over ℚ.
///
/// Terms are kept sorted by decreasing monomial order with no zero
/// coefficients, so structural equality is mathematical equality. Products
/// are reduced with `i^2 = -1` for the symbol `i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: vec![(m, c)] }.reduce_imaginary()
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc).reduce_imaginary()
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    fn reduce_imaginary(self) -> Self {
        let i = *IMAG;
        if !self.terms.iter().any(|(m, _)| m.exponent(i) >= 2) {
            return self;
        }
        let terms = self.terms.into_iter().map(|(m, c)| {
            let e = m.exponent(i);
            if e < 2 {
                (m, c)
            } else {
                let sign = if (e / 2) % 2 == 1 { -c } else { c };
                (m.with_exponent(i, e % 2), sign)
            }
        });
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(acc)
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Leading coefficient in the graded-lex order (zero for the zero polynomial).
    pub fn lc(&self) -> Rational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.iter().map(|(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn contains_any(&self, vs: &[Var]) -> bool {
        vs.iter().any(|&v| self.contains(v))
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    /// Coefficients as a polynomial in `v`, indexed by power.
    pub fn coeffs_in(&self, v: Var) -> Vec<Polynomial> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        // Removing one variable preserves the relative order of the remaining
        // monomials only up to degree shifts, so re-sort each bucket.
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Polynomial { terms: ts }
            })
            .collect()
    }

    pub fn from_coeffs(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let mv = Monomial::var(v, e as u32);
            for (m, a) in &c.terms {
                terms.push((m.mul(&mv), a.clone()));
            }
        }
        let mut p = Polynomial { terms };
        p.terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        p
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> Polynomial {
        let d = self.degree(v);
        let mut ts: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(v) == d)
            .map(|(m, c)| (m.split_off(v).0, c.clone()))
            .collect();
        ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms: ts }
    }

    /// Groups terms by the monomial in `vars`, returning each coefficient
    /// polynomial in the remaining symbols.
    pub fn coefficients_wrt(&self, vars: &[Var]) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = Monomial::one();
            let mut rest = m.clone();
            for &v in vars {
                let (r, e) = rest.split_off(v);
                rest = r;
                key = key.mul(&Monomial::var(v, e));
            }
            out.entry(key).or_default().push((rest, c.clone()));
        }
        out.into_iter()
            .map(|(k, mut ts)| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, Polynomial { terms: ts })
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect(),
        }
        .reduce_imaginary()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            if e == 0 {
                None
            } else {
                Some((m.with_exponent(v, e - 1), c * Rational::from_integer(e.into())))
            }
        });
        Polynomial::from_terms(terms)
    }

    /// Simultaneous substitution of polynomials for symbols.
    pub fn subst(&self, map: &HashMap<Var, Polynomial>) -> Polynomial {
        if !self.terms.iter().any(|(m, _)| m.iter().any(|(v, _)| map.contains_key(&v))) {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut keep = Monomial::one();
            let mut factor = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                match map.get(&v) {
                    Some(val) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| val.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => keep = keep.mul(&Monomial::var(v, e)),
                }
            }
            for (fm, fc) in factor.terms {
                *acc.entry(fm.mul(&keep)).or_insert_with(Rational::zero) += fc;
            }
        }
        Polynomial::from_map(acc).reduce_imaginary()
    }

    pub fn subst_var(&self, v: Var, val: &Polynomial) -> Polynomial {
        let mut map = HashMap::new();
        map.insert(v, val.clone());
        self.subst(&map)
    }

    /// `v -> v + c`.
    pub fn shift(&self, v: Var, c: &Rational) -> Polynomial {
        if c.is_zero() || !self.contains(v) {
            return self.clone();
        }
        let val = &Polynomial::var(v) + &Polynomial::constant(c.clone());
        self.subst_var(v, &val)
    }

    /// `v -> factor * v`.
    pub fn scale_var(&self, v: Var, factor: &Polynomial) -> Polynomial {
        if !self.contains(v) {
            return self.clone();
        }
        let mut powers: HashMap<u32, Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let pw = powers.entry(e).or_insert_with(|| factor.pow(e));
            for (fm, fc) in &pw.terms {
                *acc.entry(fm.mul(m)).or_insert_with(Rational::zero) += fc * c;
            }
        }
        Polynomial::from_map(acc).reduce_imaginary()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        if d.contains(*IMAG) {
            return None;
        }
        let (dm, dc) = d.terms[0].clone();
        if d.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(&dm)?, c / &dc));
            }
            return Some(Polynomial { terms: out });
        }
        let dvars = d.vars();
        let bounds: Vec<(Var, u32)> = dvars
            .iter()
            .map(|&v| (v, self.degree(v).checked_sub(d.degree(v))))
            .map(|(v, b)| b.map(|b| (v, b)))
            .collect::<Option<_>>()?;
        if let Some(q) = self.div_small(d, &dm, &bounds) {
            return q;
        }
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let t = m.div(&dm)?;
            if bounds.iter().any(|&(v, b)| t.exponent(v) > b) {
                return None;
            }
            let coef = &c / &dc;
            for (m2, c2) in &d.terms[1..] {
                let key = m2.mul(&t);
                let delta = &coef * c2;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= delta;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((t, coef));
        }
        Some(Polynomial { terms: quot })
    }

    /// Exact division in `i128`. The outer `None` means the fast path does
    /// not apply; the inner one that `d` does not divide `self`.
    #[allow(clippy::option_option)]
    fn div_small(
        &self,
        d: &Polynomial,
        dm: &Monomial,
        bounds: &[(Var, u32)],
    ) -> Option<Option<Polynomial>> {
        let a = self.small_coeffs()?;
        let b = d.small_coeffs()?;
        let dc = b[0] as i128;
        let mut rem: BTreeMap<Monomial, i128> = self
            .terms
            .iter()
            .zip(&a)
            .map(|((m, _), &c)| (m.clone(), c as i128))
            .collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(t) = m.div(dm) else {
                return Some(None);
            };
            if bounds.iter().any(|&(v, e)| t.exponent(v) > e) {
                return Some(None);
            }
            if c % dc != 0 {
                return None;
            }
            let coef = c / dc;
            for ((m2, _), &c2) in d.terms[1..].iter().zip(&b[1..]) {
                let key = m2.mul(&t);
                let delta = coef.checked_mul(c2 as i128)?;
                let e = rem.entry(key).or_insert(0);
                *e = e.checked_sub(delta)?;
                if *e == 0 {
                    let key = m2.mul(&t);
                    rem.remove(&key);
                }
            }
            quot.push((t, Rational::from_integer(BigInt::from(coef))));
        }
        Some(Some(Polynomial { terms: quot }))
    }

    /// Positive rational `c` such that `self / c` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// Integer-primitive part with positive leading coefficient, and the
    /// signed factor removed.
    pub fn primitive(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::one(), Polynomial::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    pub fn primitive_part(&self) -> Polynomial {
        self.primitive().1
    }

    /// Evaluates with `value` supplying each symbol; `None` if a symbol is
    /// unassigned.
    pub fn eval<S: Scalar>(&self, value: &mut impl FnMut(Var) -> Option<S>) -> Option<S> {
        let mut cache: HashMap<Var, S> = HashMap::new();
        let mut powers: HashMap<(Var, u32), S> = HashMap::new();
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t: Option<S> = None;
            for (v, e) in m.iter() {
                let p = match powers.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let x = match cache.get(&v) {
                            Some(x) => x.clone(),
                            None => {
                                let x = value(v)?;
                                cache.insert(v, x.clone());
                                x
                            }
                        };
                        let p = x.pow_int(e as i64)?;
                        powers.insert((v, e), p.clone());
                        p
                    }
                };
                t = Some(match t {
                    Some(t) => t * p,
                    None => p,
                });
            }
            let c = S::from_rational(c);
            acc = acc + t.map_or(c.clone(), |t| t * c);
        }
        Some(acc)
    }

    /// Evaluates at rational values for every symbol in `map`, leaving the
    /// others symbolic.
    pub fn partial_eval(&self, map: &HashMap<Var, Rational>) -> Polynomial {
        let poly_map = map
            .iter()
            .map(|(&v, c)| (v, Polynomial::constant(c.clone())))
            .collect();
        self.subst(&poly_map)
    }

    fn add_sub(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { terms: out }
    }

    /// Coefficients as machine integers, when all of them are small integers.
    fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.terms
            .iter()
            .map(|(_, c)| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    /// Product computed in `i128`, or `None` on non-integer coefficients or
    /// overflow.
    fn mul_small(&self, other: &Polynomial) -> Option<Polynomial> {
        let a = self.small_coeffs()?;
        let b = other.small_coeffs()?;
        let mut acc: HashMap<Monomial, i128> =
            HashMap::with_capacity((a.len() * b.len()).min(1 << 16));
        for ((m1, _), &c1) in self.terms.iter().zip(&a) {
            for ((m2, _), &c2) in other.terms.iter().zip(&b) {
                let c = (c1 as i128) * (c2 as i128);
                let e = acc.entry(m1.mul(m2)).or_insert(0);
                *e = e.checked_add(c)?;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, Rational::from_integer(BigInt::from(c))))
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Some(Polynomial { terms }.reduce_imaginary())
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(p) = self.mul_small(other) {
            return p;
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity((self.terms.len() * other.terms.len()).min(1 << 16));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_map(acc).reduce_imaginary()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_sub(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_sub(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::display::poly_to_string(self))
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::display::poly_to_string(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::integer(c)
    }

    #[test]
    fn ring_operations() {
        let k = v("k");
        let p = &(&k + &int(1)) * &(&k - &int(1));
        assert_eq!(p, &(&k * &k) - &int(1));
        assert_eq!(&p - &p, Polynomial::zero());
        assert_eq!(p.degree(Var::new("k")), 2);
        assert_eq!(p.div_exact(&(&k - &int(1))), Some(&k + &int(1)));
        assert_eq!(p.div_exact(&(&k - &int(2))), None);
    }

    #[test]
    fn multivariate_division() {
        let (a, b, k) = (v("a"), v("b"), v("k"));
        let f = &(&k + &a) * &(&(&k * &b) - &a);
        let g = &(&k * &b) - &a;
        assert_eq!(f.div_exact(&g), Some(&k + &a));
        assert_eq!(f.div_exact(&(&k + &b)), None);
    }

    #[test]
    fn imaginary_unit_reduction() {
        let (a, x, i) = (v("a"), v("x"), v("i"));
        let plus = &a + &(&x * &i);
        let minus = &a - &(&x * &i);
        assert_eq!(&plus * &minus, &(&a * &a) + &(&x * &x));
    }

    #[test]
    fn substitution_and_coefficients() {
        let kv = Var::new("k");
        let (k, n) = (v("k"), v("n"));
        let p = &(&k * &k) + &(&n * &k);
        let shifted = p.shift(kv, &Rational::one());
        assert_eq!(shifted, &(&(&(&k + &int(1)) * &(&k + &int(1))) + &(&n * &k)) + &n);
        let cs = p.coeffs_in(kv);
        assert_eq!(cs, vec![Polynomial::zero(), n.clone(), int(1)]);
        assert_eq!(Polynomial::from_coeffs(kv, &cs), p);
        let q = Polynomial::var(Var::new("q"));
        assert_eq!(k.scale_var(kv, &q), &q * &k);
        assert_eq!(p.derivative(kv), &(&k * &int(2)) + &n);
    }

    #[test]
    fn content_and_primitive() {
        let k = v("k");
        let p = (&k * &int(-4)) + int(6);
        let (c, pp) = p.primitive();
        assert_eq!(c, Rational::from_integer((-2).into()));
        assert_eq!(pp, &(&k * &int(2)) - &int(3));
    }
}
