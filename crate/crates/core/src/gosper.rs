//! Gosper representations, degree bounds and the key-equation system.
//!
//! For a shift quotient `r` the Gosper form is `r = (a/b) c(k+1)/c(k)`
//! with `gcd(a(k), b(k+h)) = 1` for every `h >= 0`; in the basic case the
//! main variable is `X = q^k` and shifts act as `X -> qX`. The key equation
//! `a(k) x(k+1) - b(k-1) x(k) = c(k) P(k)`, with `P = Σ a_i p_i` carrying
//! undetermined coefficients, becomes a homogeneous linear system in the
//! `a_i` and the coefficients of `x`.

use std::collections::HashMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::gcd::{gcd_main, primitive_part_in};
use crate::field::resultant::{nonneg_integer_roots, resultant};
use crate::field::unipoly::UniPoly;
use crate::field::{Matrix, Monomial, Polynomial, RationalFunction, Var};
use crate::terms::{as_q_power, q_var, HyperTerm, Kind};
use crate::Rational;

/// Environment variable capping the degree of the unknown polynomial.
pub const MAX_DEGREE_ENV: &str = "HYPERSCOPE_MAX_DEGREE";

pub fn max_degree() -> i64 {
    std::env::var(MAX_DEGREE_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperForm {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
}

/// `p(X) -> p(s X)` for the basic case, `p(k) -> p(k + h)` otherwise.
fn shift_main(kind: Kind, p: &Polynomial, h: i64) -> Polynomial {
    let v = kind.main_var();
    match kind {
        Kind::Ordinary => p.shift(v, &Rational::from_integer(h.into())),
        Kind::Q => {
            let q = q_var();
            if h >= 0 {
                p.scale_var(v, &Polynomial::monomial(Monomial::var(q, h as u32), Rational::one()))
            } else {
                // p(X/q^h') = Σ p_e X^e q^(-e h'); clear with q^(deg h').
                let hh = (-h) as u32;
                let d = p.degree(v);
                let coeffs = p.coeffs_in(v);
                let parts: Vec<Polynomial> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(e, c)| c.mul_monomial(&Monomial::var(q, (d - e as u32) * hh)))
                    .collect();
                Polynomial::from_coeffs(v, &parts)
            }
        }
    }
}

/// Exact `p(X/q^h)` as a rational function.
fn q_unshift(p: &Polynomial, h: i64) -> RationalFunction {
    let v = Kind::Q.main_var();
    let d = p.degree(v) as i64;
    let scaled = shift_main(Kind::Q, p, -h);
    let qd = Polynomial::monomial(Monomial::var(q_var(), (d * h) as u32), Rational::one());
    RationalFunction::new(scaled, qd).expect("nonzero power of q")
}

fn specialize(p: &Polynomial, values: &HashMap<Var, Rational>) -> Polynomial {
    p.partial_eval(values)
}

/// Deterministic integer values for the parameters of `a` and `b` that keep
/// the degrees in the main variable.
fn specialization(a: &Polynomial, b: &Polynomial, main: Var) -> HashMap<Var, Rational> {
    let mut vars: Vec<Var> = a.vars().into_iter().chain(b.vars()).filter(|&v| v != main).collect();
    vars.sort();
    vars.dedup();
    for attempt in 0..16i64 {
        let values: HashMap<Var, Rational> = vars
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let val = 1009 + 7919 * j as i64 + 104_729 * attempt;
                (v, Rational::from_integer(val.into()))
            })
            .collect();
        let ok = |p: &Polynomial| !specialize(&p.lc_in(main), &values).is_zero();
        if ok(a) && ok(b) {
            return values;
        }
    }
    HashMap::new()
}

/// Candidate dispersions `h >= 1`: a superset of the true dispersion set,
/// found from a resultant after specializing the parameters.
fn dispersion_candidates(kind: Kind, a: &Polynomial, b: &Polynomial) -> Vec<i64> {
    let main = kind.main_var();
    if a.degree(main) == 0 || b.degree(main) == 0 {
        return Vec::new();
    }
    let values = specialization(a, b, main);
    let (sa, sb) = (specialize(a, &values), specialize(b, &values));
    if sa.vars().iter().any(|&v| v != main) || sb.vars().iter().any(|&v| v != main) {
        // Specialization failed; fall back to a symbolic resultant.
        return symbolic_candidates(kind, a, b);
    }
    let h = Var::new("h");
    match kind {
        Kind::Ordinary => {
            let shifted = sb.subst_var(main, &(&Polynomial::var(main) + &Polynomial::var(h)));
            let res = resultant(&sa, &shifted, main);
            nonneg_integer_roots(&res, h)
                .into_iter()
                .filter(|&r| r > 0)
                .map(|r| r as i64)
                .collect()
        }
        Kind::Q => {
            let y = Var::new("y");
            let shifted = sb.scale_var(main, &Polynomial::var(y));
            let res = resultant(&sa, &shifted, main);
            let Some(u) = UniPoly::from_poly(&res, y) else {
                return symbolic_candidates(kind, a, b);
            };
            if u.is_zero() {
                return symbolic_candidates(kind, a, b);
            }
            let qs = values
                .get(&q_var())
                .cloned()
                .unwrap_or_else(|| Rational::from_integer(2.into()));
            q_power_roots(&u, &qs)
        }
    }
}

/// Exponents `h >= 1` with `u(qs^h) = 0`.
fn q_power_roots(u: &UniPoly, qs: &Rational) -> Vec<i64> {
    let bound = Rational::from_integer(u.root_bound().into());
    let mut out = Vec::new();
    if qs.abs() <= Rational::one() {
        return out;
    }
    let mut y = qs.clone();
    let mut h = 1;
    while y.abs() <= bound && h < 4096 {
        if u.eval(&y).is_zero() {
            out.push(h);
        }
        y *= qs;
        h += 1;
    }
    out
}

fn symbolic_candidates(kind: Kind, a: &Polynomial, b: &Polynomial) -> Vec<i64> {
    let main = kind.main_var();
    match kind {
        Kind::Ordinary => {
            let h = Var::new("h");
            let shifted = b.subst_var(main, &(&Polynomial::var(main) + &Polynomial::var(h)));
            nonneg_integer_roots(&resultant(a, &shifted, main), h)
                .into_iter()
                .filter(|&r| r > 0)
                .map(|r| r as i64)
                .collect()
        }
        Kind::Q => (1..=max_degree()).collect(),
    }
}

fn split_main_power(p: &Polynomial, v: Var) -> (u32, Polynomial) {
    let e = p.min_degree(v);
    if e == 0 {
        return (0, p.clone());
    }
    let m = Monomial::var(v, e);
    (e, p.div_exact(&Polynomial::monomial(m, Rational::one())).expect("monomial factor"))
}

/// Gosper form of a nonzero rational function of the main variable.
pub fn gosper_form(r: &RationalFunction, kind: Kind) -> GosperForm {
    let main = kind.main_var();
    let (mut a, mut b) = (r.num().clone(), r.den().clone());
    let (ea, eb) = match kind {
        Kind::Ordinary => (0, 0),
        Kind::Q => {
            let (ea, a1) = split_main_power(&a, main);
            let (eb, b1) = split_main_power(&b, main);
            a = a1;
            b = b1;
            (ea, eb)
        }
    };
    let mut c = Polynomial::one();
    let mut candidates = dispersion_candidates(kind, &a, &b);
    candidates.sort_unstable();
    candidates.dedup();
    for h in candidates {
        loop {
            let g = gcd_main(&a, &shift_main(kind, &b, h), main);
            if g.degree(main) == 0 {
                break;
            }
            a = a.div_exact(&g).expect("gcd divides a");
            let back = unshift_primitive(kind, &g, h);
            b = b.div_exact(&back).expect("shifted gcd divides b");
            for i in 1..=h {
                c = &c * &unshift_primitive(kind, &g, i);
            }
        }
    }
    let xa = Polynomial::monomial(Monomial::var(main, ea), Rational::one());
    let xb = Polynomial::monomial(Monomial::var(main, eb), Rational::one());
    let (a, b) = (&a * &xa, &b * &xb);
    let c = primitive_part_in(&c, main);
    // Extraction is exact up to factors free of the main variable.
    let current = &(&RationalFunction::from_poly(a.clone()) / &RationalFunction::from_poly(b.clone()))
        * &(&RationalFunction::from_poly(shift_main(kind, &c, 1)) / &RationalFunction::from_poly(c.clone()));
    let (fn_, fd) = (r / &current).into_parts();
    debug_assert!(!fn_.contains(main) && !fd.contains(main));
    GosperForm {
        a: &a * &fn_,
        b: &b * &fd,
        c,
    }
}

/// `g(k-h)` or the primitive part of `g(X/q^h)`.
fn unshift_primitive(kind: Kind, g: &Polynomial, h: i64) -> Polynomial {
    match kind {
        Kind::Ordinary => shift_main(kind, g, -h),
        Kind::Q => primitive_part_in(&shift_main(kind, g, -h), kind.main_var()),
    }
}

/// Upper bound on `deg x` for `a(k) x(k+1) - b(k-1) x(k) = R(k)` with
/// `deg R <= rhs_degree`; `None` when no polynomial solution can exist.
pub fn degree_bound(a: &Polynomial, b: &Polynomial, rhs_degree: i64) -> Option<i64> {
    let k = Kind::Ordinary.main_var();
    let big_a = a;
    let big_b = b.shift(k, &-Rational::one());
    let (da, db) = (big_a.degree(k) as i64, big_b.degree(k) as i64);
    let (la, lb) = (big_a.lc_in(k), big_b.lc_in(k));
    let d = if da != db || la != lb {
        rhs_degree - da.max(db)
    } else {
        let delta = da;
        let mut best = rhs_degree - delta + 1;
        if delta >= 1 {
            let ca = big_a.coeffs_in(k);
            let cb = big_b.coeffs_in(k);
            let sub = |c: &[Polynomial]| c.get(delta as usize - 1).cloned().unwrap_or_default();
            let alpha = RationalFunction::new(&sub(&cb) - &sub(&ca), la.clone()).ok();
            if let Some(alpha) = alpha.and_then(|r| r.as_constant()) {
                if alpha.is_integer() && !alpha.is_negative() {
                    if let Some(v) = alpha.to_integer().to_i64() {
                        best = best.max(v);
                    }
                }
            }
        }
        best
    };
    (d >= 0).then_some(d)
}

/// Range `lo..=hi` of exponents for a Laurent solution `x(X)` of
/// `a(X) x(qX) - b(X/q) x(X) = R(X)`, where `R` has exponents between
/// `rhs_low` and `rhs_high`.
pub fn q_degree_range(
    a: &Polynomial,
    b: &Polynomial,
    rhs_low: i64,
    rhs_high: i64,
) -> Option<(i64, i64)> {
    let v = Kind::Q.main_var();
    let big_b = q_unshift(b, 1);
    let bnum = big_b.num();
    let (da, db) = (a.degree(v) as i64, bnum.degree(v) as i64);
    let (ta, tb) = (a.min_degree(v) as i64, bnum.min_degree(v) as i64);
    let coeff = |p: &Polynomial, e: i64| -> Polynomial {
        p.coeffs_in(v).get(e as usize).cloned().unwrap_or_default()
    };
    // Leading (or trailing) coefficient ratio of b(X/q) over a, as q^s.
    let q_ratio = |x: &Polynomial, y: &Polynomial| -> Option<i64> {
        let r = RationalFunction::new(y.clone(), x * big_b.den()).ok()?;
        as_q_power(&r)
    };
    let mut hi = rhs_high - da.max(db);
    if da == db {
        if let Some(s) = q_ratio(&coeff(a, da), &coeff(bnum, db)) {
            hi = hi.max(s);
        }
    }
    let mut lo = rhs_low - ta.min(tb);
    if ta == tb {
        if let Some(s) = q_ratio(&coeff(a, ta), &coeff(bnum, tb)) {
            lo = lo.min(s);
        }
    }
    (hi >= lo).then_some((lo, hi))
}

/// The key equation with undetermined right-hand coefficients.
#[derive(Clone, Debug)]
pub struct GosperEquation {
    pub kind: Kind,
    pub form: GosperForm,
    /// `p_1..p_m`.
    pub rhs: Vec<Polynomial>,
    /// Exponent range of `x`; empty when `hi < lo`.
    pub lo: i64,
    pub hi: i64,
}

impl GosperEquation {
    pub fn new(kind: Kind, form: GosperForm, rhs: Vec<Polynomial>) -> Result<Self> {
        let v = kind.main_var();
        let cap = max_degree();
        let high = form.c.degree(v) as i64 + rhs.iter().map(|p| p.degree(v) as i64).max().unwrap_or(0);
        let (lo, hi) = match kind {
            Kind::Ordinary => match degree_bound(&form.a, &form.b, high) {
                Some(d) => (0, d),
                None => (0, -1),
            },
            Kind::Q => {
                let low = form.c.min_degree(v) as i64
                    + rhs
                        .iter()
                        .filter(|p| !p.is_zero())
                        .map(|p| p.min_degree(v) as i64)
                        .min()
                        .unwrap_or(0);
                q_degree_range(&form.a, &form.b, low, high).unwrap_or((0, -1))
            }
        };
        if hi - lo + 1 > cap || hi > cap {
            return Err(Error::DegreeBoundExceeded {
                bound: hi.max(hi - lo + 1),
                limit: cap,
            });
        }
        Ok(GosperEquation {
            kind,
            form,
            rhs,
            lo,
            hi,
        })
    }

    pub fn m(&self) -> usize {
        self.rhs.len()
    }

    /// Number of coefficients of `x`.
    pub fn x_len(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn unknowns(&self) -> usize {
        self.m() + self.x_len()
    }

    /// Column order for elimination: coefficients of `x` first, then
    /// `a_m, ..., a_1`, so that the leading `a_i` stay free.
    pub fn pivot_order(&self) -> Vec<usize> {
        let m = self.m();
        (m..self.unknowns()).chain((0..m).rev()).collect()
    }

    /// `x` from values of the unknowns (indexed as in the system).
    pub fn x_from(&self, values: &[RationalFunction]) -> RationalFunction {
        let v = self.kind.main_var();
        let m = self.m();
        let mut acc = RationalFunction::zero();
        for (idx, j) in (self.lo..=self.hi).enumerate() {
            let c = &values[m + idx];
            if c.is_zero() {
                continue;
            }
            let pw = RationalFunction::var(v).pow(j).expect("main variable is nonzero");
            acc = &acc + &(c * &pw);
        }
        acc
    }

    /// `b(k-1)` or `b(X/q)`.
    pub fn shifted_b(&self) -> RationalFunction {
        match self.kind {
            Kind::Ordinary => RationalFunction::from_poly(self.form.b.shift(
                Kind::Ordinary.main_var(),
                &-Rational::one(),
            )),
            Kind::Q => q_unshift(&self.form.b, 1),
        }
    }
}

/// Coefficient-comparison matrix whose nullspace is the solution set of the
/// key equation, with unknowns `(a_1..a_m, c_lo..c_hi)`.
pub fn build_gosper_system(eq: &GosperEquation) -> Matrix {
    let v = eq.kind.main_var();
    let mut columns: Vec<Polynomial> = Vec::with_capacity(eq.unknowns());
    match eq.kind {
        Kind::Ordinary => {
            let big_b = eq.form.b.shift(v, &-Rational::one());
            for p in &eq.rhs {
                columns.push(-(&eq.form.c * p));
            }
            let kp1 = &Polynomial::var(v) + &Polynomial::one();
            let kv = Polynomial::var(v);
            for j in 0..eq.x_len() as u32 {
                columns.push(&(&eq.form.a * &kp1.pow(j)) - &(&big_b * &kv.pow(j)));
            }
        }
        Kind::Q => {
            // Multiply through by q^(deg b + t) X^s to stay polynomial.
            let q = q_var();
            let t = (-eq.lo).max(0) as u32;
            let s = t;
            let degb = eq.form.b.degree(v);
            let qpow = |e: u32| Polynomial::monomial(Monomial::var(q, e), Rational::one());
            let xpow = |e: u32| Polynomial::monomial(Monomial::var(v, e), Rational::one());
            let big_b = shift_main(Kind::Q, &eq.form.b, -1);
            let scale = &qpow(degb + t) * &xpow(s);
            for p in &eq.rhs {
                columns.push(-(&(&eq.form.c * p) * &scale));
            }
            for j in eq.lo..=eq.hi {
                let e = (j + s as i64) as u32;
                let qa = qpow(degb + (t as i64 + j) as u32);
                let bq = &big_b * &qpow(t);
                let col = &(&(&eq.form.a * &qa) - &bq) * &xpow(e);
                columns.push(col);
            }
        }
    }
    let coeffs: Vec<Vec<Polynomial>> = columns.iter().map(|c| c.coeffs_in(v)).collect();
    let rows = coeffs.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut mat = Matrix::zeros(rows, columns.len());
    for (j, col) in coeffs.into_iter().enumerate() {
        for (e, entry) in col.into_iter().enumerate() {
            mat.rows[e][j] = entry;
        }
    }
    mat.prune();
    mat
}

/// Indefinite sum of a single term: `g` with `g(k+1) - g(k) = t(k)`.
pub fn gosper_sum(t: &HyperTerm) -> Result<crate::telescope::Certificate> {
    let problem = crate::telescope::TelescopeProblem::new(vec![t.clone()])?;
    let sol = match crate::telescope::extended_telescope(&problem) {
        Ok(sol) => sol,
        Err(Error::OnlyTrivial) => return Err(Error::NotSummable),
        Err(e) => return Err(e),
    };
    let mut values = HashMap::new();
    values.insert(0usize, RationalFunction::one());
    if !sol.space.free.contains(&0) {
        return Err(Error::NotSummable);
    }
    sol.certificate(&values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Polynomial {
        Polynomial::var(Var::new("k"))
    }

    fn rf(p: Polynomial) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::integer(c)
    }

    #[test]
    fn form_of_shifted_ratio() {
        let r = &rf(&k() + &int(2)) / &rf(k());
        let f = gosper_form(&r, Kind::Ordinary);
        assert!(f.a.is_one() && f.b.is_one());
        assert_eq!(f.c, &k() * &(&k() + &int(1)));
    }

    #[test]
    fn form_with_symbolic_offset() {
        let (a, b) = (Polynomial::var(Var::new("a")), Polynomial::var(Var::new("b")));
        let r = &rf(&k() + &a) / &rf(&k() + &b);
        let f = gosper_form(&r, Kind::Ordinary);
        assert_eq!(f.a, &k() + &a);
        assert_eq!(f.b, &k() + &b);
        assert!(f.c.is_one());
    }

    #[test]
    fn form_of_factorial() {
        let f = gosper_form(&rf(&k() + &int(1)), Kind::Ordinary);
        assert_eq!(f.a, &k() + &int(1));
        assert!(f.b.is_one() && f.c.is_one());
    }

    #[test]
    fn bounds() {
        assert_eq!(degree_bound(&int(1), &int(1), 1), Some(2));
        assert!(degree_bound(&(&k() + &int(1)), &int(1), 1).unwrap() >= 0);
    }

    #[test]
    fn constant_system_forces_zero() {
        let form = GosperForm {
            a: int(1),
            b: int(1),
            c: int(1),
        };
        let eq = GosperEquation {
            kind: Kind::Ordinary,
            form,
            rhs: vec![int(1)],
            lo: 0,
            hi: 0,
        };
        let space = crate::field::nullspace(&build_gosper_system(&eq), &eq.pivot_order());
        assert!(!space.free.contains(&0));
    }

    #[test]
    fn sum_of_k() {
        let t = HyperTerm::new(Kind::Ordinary, rf(k()));
        let cert = gosper_sum(&t).unwrap();
        // g = k(k-1)/2 = multiplier * k
        let expected = &rf(&k() - &int(1)) / &rf(int(2));
        assert_eq!(cert.g_multiplier, expected);
    }

    #[test]
    fn sum_of_k_factorial() {
        let t = HyperTerm::new(Kind::Ordinary, rf(k())).with_pochhammer(RationalFunction::one(), k(), 1);
        let cert = gosper_sum(&t).unwrap();
        // g = k! = multiplier * k * k!
        assert_eq!(cert.g_multiplier, &RationalFunction::one() / &rf(k()));
    }

    #[test]
    fn harmonic_is_not_summable() {
        let t = HyperTerm::new(Kind::Ordinary, &RationalFunction::one() / &rf(k()));
        assert_eq!(gosper_sum(&t), Err(Error::NotSummable));
    }
}
