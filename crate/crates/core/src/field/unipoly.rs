//! Dense univariate polynomials over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Polynomial;
use super::symbol::Var;
use crate::Rational;

/// Coefficients in ascending order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    /// Views a polynomial free of every symbol but `v` as univariate.
    pub fn from_poly(p: &Polynomial, v: Var) -> Option<Self> {
        let mut coeffs = vec![Rational::zero(); p.degree(v) as usize + 1];
        for (m, c) in p.terms() {
            let (rest, e) = m.split_off(v);
            if !rest.is_one() {
                return None;
            }
            coeffs[e as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with -1 for zero.
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn lc(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lc = d.lc();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lc;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        UniPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// All nonnegative integer roots, ascending.
    pub fn nonneg_integer_roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut coeffs = self.0.clone();
        let mut roots = Vec::new();
        let lead_zero = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zero > 0 {
            roots.push(0);
            coeffs.drain(..lead_zero);
        }
        if coeffs.len() <= 1 {
            return roots;
        }
        let u = UniPoly(coeffs);
        let sf = u.quo(&u.gcd(&u.derivative()));
        let ints = to_integer_coeffs(&sf.0);
        roots.extend(positive_integer_roots(&ints));
        roots.sort_unstable();
        roots
    }

    /// Distinct rational roots. With `u` scaled to integer coefficients and
    /// leading coefficient `A`, the roots of `A^(d-1) u(y/A)` are the
    /// integers `A r`.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree() < 1 {
            return Vec::new();
        }
        let ints = to_integer_coeffs(&self.0);
        let d = ints.len() - 1;
        let lc = ints[d].clone();
        let scaled: Vec<Rational> = ints
            .iter()
            .enumerate()
            .map(|(i, c)| match d - i {
                0 => Rational::one(),
                e => Rational::from_integer(c * num_traits::pow(lc.clone(), e - 1)),
            })
            .collect();
        let lc = Rational::from_integer(lc);
        let mut roots: Vec<Rational> = UniPoly::new(scaled.clone())
            .nonneg_integer_roots()
            .into_iter()
            .map(|y| Rational::from_integer(y.into()) / &lc)
            .collect();
        let mirrored: Vec<Rational> = scaled
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        for y in UniPoly::new(mirrored).nonneg_integer_roots() {
            if y > 0 {
                roots.push(Rational::from_integer(-BigInt::from(y)) / &lc);
            }
        }
        roots
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Quotient of the division by `d`.
    pub fn quo(&self, d: &UniPoly) -> UniPoly {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        if r.len() <= dd {
            return UniPoly(Vec::new());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        let lc = d.lc();
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lc;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            q[shift] = f;
            r.pop();
        }
        UniPoly::new(q)
    }
}

/// Positive integer roots of a squarefree integer polynomial with nonzero
/// constant term: simple roots modulo a prime, lifted p-adically past the
/// Cauchy bound and checked exactly.
fn positive_integer_roots(c: &[BigInt]) -> Vec<u64> {
    let n = c.len() - 1;
    let lc = c[n].abs();
    let bound = c[..n].iter().map(|x| x.abs().div_ceil(&lc)).max().unwrap_or_default() + 1;
    let limit = &bound * 2;
    let eval = |x: &BigInt, m: &BigInt| -> BigInt {
        c.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m))
    };
    let deriv: Vec<BigInt> = c.iter().enumerate().skip(1).map(|(i, a)| a * i).collect();
    let eval_d = |x: &BigInt, m: &BigInt| -> BigInt {
        deriv.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m))
    };
    'primes: for p in primes_from(30_011).take(64) {
        let pb = BigInt::from(p);
        if (&lc % &pb).is_zero() {
            continue;
        }
        let cm: Vec<u64> = c.iter().map(|a| a.mod_floor(&pb).to_u64().unwrap()).collect();
        let mut simple = Vec::new();
        for r in 0..p {
            let v = cm.iter().rev().fold(0u64, |acc, &a| (acc * r + a) % p);
            if v == 0 {
                if eval_d(&BigInt::from(r), &pb).is_zero() {
                    continue 'primes;
                }
                simple.push(r);
            }
        }
        let mut out = Vec::new();
        for r in simple {
            let mut m = pb.clone();
            let mut x = BigInt::from(r);
            while m <= limit {
                m = &m * &m;
                let inv = eval_d(&x, &m).modinv(&m).expect("simple root");
                x = (&x - eval(&x, &m) * inv).mod_floor(&m);
            }
            if x.is_positive() && x < bound {
                let exact = c.iter().rev().fold(BigInt::zero(), |acc, a| acc * &x + a);
                if exact.is_zero() {
                    if let Some(h) = x.to_u64() {
                        out.push(h);
                    }
                }
            }
        }
        return out;
    }
    Vec::new()
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn to_integer_coeffs(coeffs: &[Rational]) -> Vec<BigInt> {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect()
}

impl UniPoly {
    /// Fujiwara's bound on the moduli of the roots, rounded up.
    pub fn root_bound(&self) -> u64 {
        root_bound(&self.0)
    }
}

fn root_bound(coeffs: &[Rational]) -> u64 {
    let n = coeffs.len() - 1;
    if n == 0 {
        return 0;
    }
    let lc = coeffs[n].to_f64().unwrap_or(f64::MAX).abs();
    let mut best = 0.0f64;
    for i in 1..=n {
        let c = coeffs[n - i].to_f64().unwrap_or(f64::MAX).abs() / lc;
        let mut r = c.powf(1.0 / i as f64);
        if i == n {
            r = (c / 2.0).powf(1.0 / i as f64);
        }
        best = best.max(r);
    }
    let b = 2.0 * best + 1.0;
    if b.is_finite() && b < 1e18 {
        b.ceil() as u64
    } else {
        u64::MAX
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    #[test]
    fn gcd_and_roots() {
        // (x-1)(x-3) and (x-1)(x+5)
        let a = up(&[3, -4, 1]);
        let b = up(&[-5, 4, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        // h(h-2)
        assert_eq!(up(&[0, -2, 1]).nonneg_integer_roots(), vec![0, 2]);
        // 2h - 1
        assert!(up(&[-1, 2]).nonneg_integer_roots().is_empty());
        // (h-7)(h+2)(h-100)
        let p = up(&[1400, 486, -105, 1]);
        assert_eq!(p.nonneg_integer_roots(), vec![7, 100]);
        // (h-3)^2 (h-123456789)
        let p = up(&[-1111111101, 740740743, -123456795, 1]);
        assert_eq!(p.nonneg_integer_roots(), vec![3, 123456789]);
    }

    #[test]
    fn rational_roots_of_both_signs() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        // (2x+3)(x-4)(3x-1) = 6x^3 - 17x^2 - 31x + 12
        let mut roots = up(&[12, -31, -17, 6]).rational_roots();
        roots.sort();
        assert_eq!(roots, vec![r(-3, 2), r(1, 3), r(4, 1)]);
        // x^2 + 1 has none; -2x has the root 0
        assert!(up(&[1, 0, 1]).rational_roots().is_empty());
        assert_eq!(up(&[0, -2]).rational_roots(), vec![r(0, 1)]);
    }
}
