//! Multivariate gcd over ℚ.
//!
//! Recursive scheme: split off monomial content, pick a main variable,
//! divide out contents with respect to it, and run a subresultant PRS on
//! the primitive parts. A univariate specialization test short-circuits
//! the common coprime case.

use std::cell::Cell;
use std::collections::HashMap;

use num_traits::One;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::symbol::{Var, IMAGINARY_UNIT};
use super::unipoly::UniPoly;
use crate::Rational;

/// Greatest common divisor, integer-primitive with positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one();
    }
    let mp = monomial_content(p);
    let mq = monomial_content(q);
    let m = Polynomial::monomial(mp.gcd(&mq), Rational::one());
    let imag = Var::new(IMAGINARY_UNIT);
    if p.contains(imag) || q.contains(imag) {
        return m;
    }
    let p1 = strip_monomial(p, &mp);
    let q1 = strip_monomial(q, &mq);
    let g = gcd_reduced(&p1, &q1);
    (&g * &m).primitive_part()
}

thread_local! {
    static BUDGET: Cell<Option<usize>> = const { Cell::new(None) };
}

/// A common divisor of `p` and `q`, computed as [`gcd`] but giving up on
/// remainder sequences whose polynomials exceed `max_terms` terms. The
/// result divides the true gcd and may be smaller.
pub fn gcd_bounded(p: &Polynomial, q: &Polynomial, max_terms: usize) -> Polynomial {
    let saved = BUDGET.with(|b| b.replace(Some(max_terms)));
    let g = gcd(p, q);
    BUDGET.with(|b| b.set(saved));
    g
}

fn over_budget(r: &[Polynomial]) -> bool {
    BUDGET.with(|b| b.get()).is_some_and(|max| r.iter().map(|c| c.len()).sum::<usize>() > max)
}

/// Gcd made primitive with respect to `v`.
pub fn gcd_main(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    let g = gcd(p, q);
    if g.is_zero() {
        return g;
    }
    primitive_part_in(&g, v)
}

pub fn lcm(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let g = gcd(p, q);
    (&p.div_exact(&g).expect("gcd divides") * q).primitive_part()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Polynomial, v: Var) -> Polynomial {
    let coeffs = p.coeffs_in(v);
    let mut nonzero: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut g = Polynomial::zero();
    for c in nonzero {
        g = gcd(&g, c);
        if g.is_constant() {
            return Polynomial::one();
        }
    }
    g
}

pub fn primitive_part_in(p: &Polynomial, v: Var) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").primitive_part()
}

fn monomial_content(p: &Polynomial) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().map(|t| t.0.clone()).unwrap_or_default();
    it.fold(first, |acc, (m, _)| acc.gcd(m))
}

fn strip_monomial(p: &Polynomial, m: &Monomial) -> Polynomial {
    if m.is_one() {
        return p.clone();
    }
    Polynomial::from_terms(
        p.terms()
            .iter()
            .map(|(t, c)| (t.div(m).expect("monomial content"), c.clone())),
    )
}

fn gcd_reduced(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_constant() || q.is_constant() {
        return Polynomial::one();
    }
    if p == q {
        return p.primitive_part();
    }
    let pv = p.vars();
    let qv = q.vars();
    if let Some(&v) = pv.iter().find(|v| !qv.contains(v)) {
        return gcd(&content_in(p, v), q);
    }
    if let Some(&v) = qv.iter().find(|v| !pv.contains(v)) {
        return gcd(p, &content_in(q, v));
    }
    let v = *pv
        .iter()
        .min_by_key(|&&v| (p.degree(v).max(q.degree(v)), v))
        .unwrap();
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let pp = p.div_exact(&cp).expect("content divides");
    let qq = q.div_exact(&cq).expect("content divides");
    let cg = gcd(&cp, &cq);
    if specialized_gcd_degree(&pp, &qq, v) == Some(0) {
        return cg;
    }
    let g = subresultant_gcd(&pp, &qq, v);
    (&cg * &g).primitive_part()
}

/// Degree in `v` of the gcd after specializing all other symbols to small
/// integers. An upper bound on the true degree; `None` if no admissible
/// specialization was found.
fn specialized_gcd_degree(p: &Polynomial, q: &Polynomial, v: Var) -> Option<i64> {
    let mut others: Vec<Var> = p.vars().into_iter().chain(q.vars()).filter(|&w| w != v).collect();
    others.sort();
    others.dedup();
    let lp = p.lc_in(v);
    let lq = q.lc_in(v);
    for attempt in 0..4i64 {
        let map: HashMap<Var, Rational> = others
            .iter()
            .enumerate()
            .map(|(j, &w)| {
                let val = SPECIAL_VALUES[(j + 3 * attempt as usize) % SPECIAL_VALUES.len()]
                    + 29 * attempt;
                (w, Rational::from_integer(val.into()))
            })
            .collect();
        if lp.partial_eval(&map).is_zero() || lq.partial_eval(&map).is_zero() {
            continue;
        }
        let up = UniPoly::from_poly(&p.partial_eval(&map), v)?;
        let uq = UniPoly::from_poly(&q.partial_eval(&map), v)?;
        return Some(up.gcd(&uq).degree());
    }
    None
}

const SPECIAL_VALUES: [i64; 16] = [
    7, 13, 23, 37, 53, 71, 97, 113, 131, 151, 173, 193, 211, 233, 257, 277,
];

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` on coefficient vectors.
/// `None` when the remainder outgrows the active term budget.
pub(crate) fn prem(a: &[Polynomial], b: &[Polynomial]) -> Option<Vec<Polynomial>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return Some(r);
    }
    let mut e = (r.len() - 1 - db + 1) as u32;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lr * bj;
            r[shift + j] = &r[shift + j] - &t;
        }
        trim(&mut r);
        e -= 1;
        if over_budget(&r) {
            return None;
        }
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    Some(r)
}

fn subresultant_gcd(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    let (mut a, mut b) = (p.coeffs_in(v), q.coeffs_in(v));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Polynomial::one();
    let mut h = Polynomial::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let Some(r) = prem(&a, &b) else {
            return Polynomial::one();
        };
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return Polynomial::one();
        }
        let div = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&div).expect("subresultant division"))
            .collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h")
        };
    }
    primitive_part_in(&Polynomial::from_coeffs(v, &b), v)
}

/// True when `d` divides `p` exactly.
pub fn divides(d: &Polynomial, p: &Polynomial) -> bool {
    p.div_exact(d).is_some()
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
    fn univariate_examples() {
        let k = v("k");
        let kv = Var::new("k");
        let p = &(&k * &k) - &int(1);
        let q = &k - &int(1);
        assert_eq!(gcd_main(&p, &q, kv), q);
    }

    #[test]
    fn parametric_common_factor() {
        let (k, a, b) = (v("k"), v("a"), v("b"));
        let kv = Var::new("k");
        let ka = &k + &a;
        let p = &ka * &(&k + &int(1));
        let q = &ka * &(&k + &int(2));
        assert_eq!(gcd_main(&p, &q, kv), ka);
        assert_eq!(gcd_main(&(&k + &a), &(&k + &b), kv), Polynomial::one());
    }

    #[test]
    fn multivariate_with_contents() {
        let (k, n, x) = (v("k"), v("n"), v("x"));
        let f1 = &(&n * &x) + &int(3);
        let f2 = &(&k * &k) + &(&n * &k) - x.clone();
        let f3 = &(&k * &x) - &n;
        let p = &(&f1 * &f2) * &(&f3 * &x);
        let q = &(&f1 * &f3) * &(&f2 * &(&x * &x));
        let expected = (&(&f1 * &f2) * &(&f3 * &x)).primitive_part();
        assert_eq!(gcd(&p, &q), expected);
        let r = &(&f1 * &f2) * &(&k + &int(5));
        assert_eq!(gcd(&r, &(&f2 * &(&k - &int(5)))), f2.primitive_part());
    }

    #[test]
    fn gcd_divides_both() {
        let (k, a) = (v("k"), v("a"));
        let p = (&(&k + &a) * &(&k + &a)) * (&k - &int(2));
        let q = &(&k + &a) * &(&(&k * &a) + &int(1));
        let g = gcd(&p, &q);
        assert!(divides(&g, &p) && divides(&g, &q));
        assert_eq!(g, (&k + &a).primitive_part());
    }
}
