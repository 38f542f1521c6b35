//! Reduction of term quotients to rational functions.

use num_traits::One;

use super::{as_small_integer, q_var, HyperTerm, Kind, Pochhammer, Power};
use crate::error::{Error, Result};
use crate::field::{Monomial, Polynomial, RationalFunction, Var};
use crate::Rational;

/// `q^E` for an integer-affine exponent `E`, written with companion
/// symbols: `q^(2n - k + 1) = (q^n)^2 (q^k)^-1 q`.
pub fn q_power_of(e: &Polynomial) -> Option<RationalFunction> {
    let q = q_var();
    let mut num = Monomial::one();
    let mut den = Monomial::one();
    for (m, c) in e.terms() {
        let c = as_small_integer(c)?;
        let v = match m.degree() {
            0 => q,
            1 => m.iter().next().unwrap().0.q_power(),
            _ => return None,
        };
        let part = Monomial::var(v, c.unsigned_abs() as u32);
        if c > 0 {
            num = num.mul(&part);
        } else {
            den = den.mul(&part);
        }
    }
    RationalFunction::new(
        Polynomial::monomial(num, Rational::one()),
        Polynomial::monomial(den, Rational::one()),
    )
    .ok()
}

/// `Some(j)` when `r = q^j` exactly.
pub fn as_q_power(r: &RationalFunction) -> Option<i64> {
    let q = q_var();
    let side = |p: &Polynomial| -> Option<(i64, Rational)> {
        if !p.is_monomial() {
            return None;
        }
        let (m, c) = p.leading()?;
        let e = m.exponent(q);
        (m.degree() == e).then(|| (e as i64, c.clone()))
    };
    let (en, cn) = side(r.num())?;
    let (ed, cd) = side(r.den())?;
    (cn == cd).then_some(en - ed)
}

/// Integer offset `i` with `a = b + i` (ordinary) or `a = b q^i` (basic).
fn arg_offset(kind: Kind, a: &RationalFunction, b: &RationalFunction) -> Option<i64> {
    match kind {
        Kind::Ordinary => as_small_integer(&(a - b).as_constant()?),
        Kind::Q => {
            if b.is_zero() {
                return None;
            }
            as_q_power(&(a / b))
        }
    }
}

/// `(α+L)_s` (ordinary) or `(αq^L;q)_s` (basic) for an integer `s`.
fn shifted_block(
    kind: Kind,
    alpha: &RationalFunction,
    len: &Polynomial,
    s: i64,
) -> Result<RationalFunction> {
    let start = match kind {
        Kind::Ordinary => alpha + &RationalFunction::from_poly(len.clone()),
        Kind::Q => {
            let ql = q_power_of(len).ok_or_else(|| {
                Error::NotSimilar(format!("length {len} is not integer-affine"))
            })?;
            alpha * &ql
        }
    };
    finite_block(kind, &start, s)
}

/// `(β)_s` or `(β;q)_s` for an integer `s`, negative lengths included.
pub(crate) fn finite_block(kind: Kind, beta: &RationalFunction, s: i64) -> Result<RationalFunction> {
    let factor = |j: i64| -> RationalFunction {
        match kind {
            Kind::Ordinary => beta + &RationalFunction::integer(j),
            Kind::Q => {
                let qj = RationalFunction::var(q_var()).pow(j).expect("q is nonzero");
                &RationalFunction::one() - &(beta * &qj)
            }
        }
    };
    let mut acc = RationalFunction::one();
    if s >= 0 {
        for j in 0..s {
            acc = &acc * &factor(j);
        }
        Ok(acc)
    } else {
        for j in 1..=-s {
            acc = &acc * &factor(-j);
        }
        acc.inv()
    }
}

struct Class {
    arg: RationalFunction,
    len: Polynomial,
    members: Vec<(i64, i64, i32)>,
}

fn reduce_pochhammers(kind: Kind, pochs: &[Pochhammer]) -> Result<RationalFunction> {
    let mut classes: Vec<Class> = Vec::new();
    'outer: for p in pochs {
        for c in classes.iter_mut() {
            let Some(i) = arg_offset(kind, &p.arg, &c.arg) else {
                continue;
            };
            let Some(j) = (&p.len - &c.len).as_constant().as_ref().and_then(as_small_integer) else {
                continue;
            };
            c.members.push((i, j, p.mult));
            continue 'outer;
        }
        classes.push(Class {
            arg: p.arg.clone(),
            len: p.len.clone(),
            members: vec![(0, 0, p.mult)],
        });
    }
    let mut acc = RationalFunction::one();
    for c in classes {
        let net: i32 = c.members.iter().map(|m| m.2).sum();
        if net != 0 {
            return Err(Error::NotSimilar(format!(
                "unbalanced Pochhammer factors with argument {} and length {}",
                c.arg, c.len
            )));
        }
        for (i, j, mult) in c.members {
            if i == 0 && j == 0 {
                continue;
            }
            // (α+i)_{L+j} = (α)_L (α+L)_{i+j} / (α)_i
            let num = shifted_block(kind, &c.arg, &c.len, i + j)?;
            let den = finite_block(kind, &c.arg, i)?;
            let f = num.checked_div(&den)?;
            acc = &acc * &f.pow(mult as i64)?;
        }
    }
    Ok(acc)
}

fn reduce_powers(kind: Kind, powers: &[Power]) -> Result<RationalFunction> {
    let mut merged: Vec<Power> = Vec::new();
    let q = RationalFunction::var(q_var());
    for p in powers {
        // Bases that are exact powers of q fold into q itself.
        let p = match as_q_power(&p.base) {
            Some(j) if j != 1 && j != 0 => Power {
                base: q.clone(),
                exp: p.exp.scale(&Rational::from_integer(j.into())),
            },
            _ => p.clone(),
        };
        match merged.iter_mut().find(|m| m.base == p.base) {
            Some(m) => m.exp = &m.exp + &p.exp,
            None => merged.push(p),
        }
    }
    merged.retain(|p| !p.exp.is_zero() && !p.base.is_one());
    // Pair b1^E b2^-E into (b1/b2)^E when the ratio is a power of q.
    let mut i = 0;
    while i < merged.len() {
        let mut paired = false;
        for j in i + 1..merged.len() {
            if (&merged[i].exp + &merged[j].exp).is_zero() {
                let r = &merged[i].base / &merged[j].base;
                if let Some(s) = as_q_power(&r) {
                    let exp = merged[i].exp.scale(&Rational::from_integer(s.into()));
                    merged.remove(j);
                    merged.remove(i);
                    if let Some(m) = merged.iter_mut().find(|m| m.base == q) {
                        m.exp = &m.exp + &exp;
                    } else {
                        merged.push(Power {
                            base: q.clone(),
                            exp,
                        });
                    }
                    paired = true;
                    break;
                }
            }
        }
        if !paired {
            i += 1;
        }
    }
    let mut acc = RationalFunction::one();
    for p in merged {
        if p.exp.is_zero() {
            continue;
        }
        if let Some(c) = p.exp.as_constant() {
            let e = as_small_integer(&c)
                .ok_or_else(|| Error::NotSimilar(format!("non-integer exponent {c}")))?;
            acc = &acc * &p.base.pow(e)?;
            continue;
        }
        if kind == Kind::Q && p.base == q {
            if let Some(r) = q_power_of(&p.exp) {
                acc = &acc * &r;
                continue;
            }
        }
        return Err(Error::NotSimilar(format!(
            "residual factor ({})^({})",
            p.base, p.exp
        )));
    }
    Ok(acc)
}

/// Reduces a term whose factors cancel up to rational functions.
pub(crate) fn to_rational(t: &HyperTerm) -> Result<RationalFunction> {
    let pochs = reduce_pochhammers(t.kind, &t.pochhammers)?;
    let powers = reduce_powers(t.kind, &t.powers)?;
    Ok(&(&t.prefactor * &pochs) * &powers)
}

/// `t1 / t2` as a rational function.
pub fn quotient(t1: &HyperTerm, t2: &HyperTerm) -> Result<RationalFunction> {
    if t1.kind != t2.kind {
        return Err(Error::NotSimilar("terms of different kinds".into()));
    }
    if t2.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if t1.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let mut q = t2.inverse()?;
    q.prefactor = &q.prefactor * &t1.prefactor;
    q.powers.extend(t1.powers.iter().cloned());
    q.pochhammers.extend(t1.pochhammers.iter().cloned());
    to_rational(&q)
}

/// `t(k+1) / t(k)`.
pub fn ratio(t: &HyperTerm) -> Result<RationalFunction> {
    let k: Var = super::index_var();
    quotient(&t.shift(k, 1)?, t)
}
