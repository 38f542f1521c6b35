//! Hypergeometric and basic hypergeometric terms.
//!
//! A term is a rational prefactor times a product of powers `base^e` and
//! Pochhammer symbols `(α)_L` or `(α;q)_L`, where the exponents `e` and
//! lengths `L` are polynomials in `k` and the integer-valued parameters
//! (`n`, `m`, `x`, ...). For basic terms the main variable is `X = q^k`,
//! and each integer-valued symbol `v` has a companion symbol `q^v`.

mod calculus;
mod eval;
mod family;
mod quotient;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Polynomial, RationalFunction, Var};
use crate::Rational;

pub use eval::{eval_term, eval_term_with, pochhammer_value};
pub use family::SimilarFamily;
pub use quotient::{as_q_power, q_power_of, quotient, ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Kind {
    #[default]
    Ordinary,
    Q,
}

impl Kind {
    /// The variable that rational functions of the summation index use:
    /// `k`, or `q^k` for basic terms.
    pub fn main_var(self) -> Var {
        match self {
            Kind::Ordinary => Var::new("k"),
            Kind::Q => Var::new("q^k"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Q => "q",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "ordinary" => Ok(Kind::Ordinary),
            "q" => Ok(Kind::Q),
            other => Err(Error::Invalid(format!("unknown kind {other}"))),
        }
    }
}

pub fn index_var() -> Var {
    Var::new("k")
}

pub fn q_var() -> Var {
    Var::new("q")
}

/// `base^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Power {
    pub base: RationalFunction,
    pub exp: Polynomial,
}

/// `(arg)_len^mult`, or `(arg;q)_len^mult` in a basic term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pochhammer {
    pub arg: RationalFunction,
    pub len: Polynomial,
    pub mult: i32,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperTerm {
    pub kind: Kind,
    pub prefactor: RationalFunction,
    pub powers: Vec<Power>,
    pub pochhammers: Vec<Pochhammer>,
}

impl HyperTerm {
    pub fn new(kind: Kind, prefactor: RationalFunction) -> Self {
        HyperTerm {
            kind,
            prefactor,
            powers: Vec::new(),
            pochhammers: Vec::new(),
        }
    }

    pub fn one(kind: Kind) -> Self {
        Self::new(kind, RationalFunction::one())
    }

    pub fn with_power(mut self, base: RationalFunction, exp: Polynomial) -> Self {
        self.powers.push(Power { base, exp });
        self.normalized()
    }

    pub fn with_pochhammer(mut self, arg: RationalFunction, len: Polynomial, mult: i32) -> Self {
        self.pochhammers.push(Pochhammer { arg, len, mult });
        self.normalized()
    }

    /// `1/len!` as a Pochhammer factor `(1)_len^-1`, or `1/(q;q)_len`.
    pub fn over_factorial(self, len: Polynomial) -> Self {
        let arg = match self.kind {
            Kind::Ordinary => RationalFunction::one(),
            Kind::Q => RationalFunction::var(q_var()),
        };
        self.with_pochhammer(arg, len, -1)
    }

    pub fn mul_rational(&self, r: &RationalFunction) -> Self {
        let mut t = self.clone();
        t.prefactor = &t.prefactor * r;
        t
    }

    pub fn mul(&self, other: &HyperTerm) -> Self {
        let mut t = self.clone();
        t.prefactor = &t.prefactor * &other.prefactor;
        t.powers.extend(other.powers.iter().cloned());
        t.pochhammers.extend(other.pochhammers.iter().cloned());
        t.normalized()
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(HyperTerm {
            kind: self.kind,
            prefactor: self.prefactor.inv()?,
            powers: self
                .powers
                .iter()
                .map(|p| Power {
                    base: p.base.clone(),
                    exp: -&p.exp,
                })
                .collect(),
            pochhammers: self
                .pochhammers
                .iter()
                .map(|p| Pochhammer {
                    arg: p.arg.clone(),
                    len: p.len.clone(),
                    mult: -p.mult,
                })
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    /// All symbols occurring anywhere in the term.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.prefactor.vars();
        for p in &self.powers {
            vs.extend(p.base.vars());
            vs.extend(p.exp.vars());
        }
        for p in &self.pochhammers {
            vs.extend(p.arg.vars());
            vs.extend(p.len.vars());
        }
        vs.sort();
        vs.dedup();
        vs
    }

    /// Merges equal factors, drops trivial ones and sorts into a canonical
    /// order.
    pub fn normalized(mut self) -> Self {
        let mut powers: Vec<Power> = Vec::new();
        for p in self.powers.drain(..) {
            if p.exp.is_zero() || p.base.is_one() {
                continue;
            }
            if let Some(c) = p.exp.as_constant().filter(|c| c.is_integer()) {
                if let Ok(v) = p.base.pow(integer(&c)) {
                    self.prefactor = &self.prefactor * &v;
                    continue;
                }
            }
            match powers.iter_mut().find(|q| q.base == p.base) {
                Some(q) => q.exp = &q.exp + &p.exp,
                None => powers.push(p),
            }
        }
        powers.retain(|p| !p.exp.is_zero());
        if self.kind == Kind::Q {
            let q = RationalFunction::var(q_var());
            let mut rest = Vec::new();
            for p in powers {
                match (p.base == q).then(|| q_power_of(&p.exp)).flatten() {
                    Some(r) => self.prefactor = &self.prefactor * &r,
                    None => rest.push(p),
                }
            }
            powers = rest;
        }
        powers.sort_by_cached_key(|p| (p.base.to_string(), p.exp.to_string()));
        let q_kind = self.kind == Kind::Q;
        let mut pochs: Vec<Pochhammer> = Vec::new();
        for p in self.pochhammers.drain(..) {
            if p.mult == 0 || p.len.is_zero() || (q_kind && p.arg.is_zero()) {
                continue;
            }
            match pochs.iter_mut().find(|q| q.arg == p.arg && q.len == p.len) {
                Some(q) => q.mult += p.mult,
                None => pochs.push(p),
            }
        }
        pochs.retain(|p| p.mult != 0);
        pochs.sort_by_cached_key(|p| (p.len.to_string(), p.arg.to_string(), p.mult));
        self.powers = powers;
        self.pochhammers = pochs;
        self
    }

    /// Substitutes rational functions for parameters. Exponents and
    /// lengths accept only polynomial bindings; companion symbols `q^v`
    /// follow bindings of `v` that are integer-affine.
    pub fn substitute(&self, bindings: &HashMap<Var, RationalFunction>) -> Result<Self> {
        let present = self.vars();
        let mut full = bindings.clone();
        let mut poly_map: HashMap<Var, Polynomial> = HashMap::new();
        for (&v, val) in bindings {
            if let Some(p) = val.as_polynomial() {
                poly_map.insert(v, p.clone());
                let cv = v.q_power();
                if present.contains(&cv) && !bindings.contains_key(&cv) {
                    let qp = q_power_of(&p).ok_or_else(|| {
                        Error::Invalid(format!("cannot shift q^{v} by a non-integer amount"))
                    })?;
                    full.insert(cv, qp);
                }
            }
        }
        let mut out = HyperTerm::new(self.kind, self.prefactor.subst(&full)?);
        for p in &self.powers {
            let exp = subst_exponent(&p.exp, bindings, &poly_map)?;
            out.powers.push(Power {
                base: p.base.subst(&full)?,
                exp,
            });
        }
        for p in &self.pochhammers {
            let len = subst_exponent(&p.len, bindings, &poly_map)?;
            out.pochhammers.push(Pochhammer {
                arg: p.arg.subst(&full)?,
                len,
                mult: p.mult,
            });
        }
        Ok(out.normalized())
    }

    /// `v -> v + s`.
    pub fn shift(&self, v: Var, s: i64) -> Result<Self> {
        let mut b = HashMap::new();
        b.insert(v, &RationalFunction::var(v) + &RationalFunction::integer(s));
        self.substitute(&b)
    }

    /// Replaces the symbol `v` by a rational-function value everywhere.
    pub fn substitute_one(&self, v: Var, val: &RationalFunction) -> Result<Self> {
        let mut b = HashMap::new();
        b.insert(v, val.clone());
        self.substitute(&b)
    }
}

fn subst_exponent(
    e: &Polynomial,
    bindings: &HashMap<Var, RationalFunction>,
    poly_map: &HashMap<Var, Polynomial>,
) -> Result<Polynomial> {
    for v in e.vars() {
        if bindings.contains_key(&v) && !poly_map.contains_key(&v) {
            return Err(Error::Invalid(format!(
                "exponent symbol {v} bound to a non-polynomial value"
            )));
        }
    }
    Ok(e.subst(poly_map))
}

pub(crate) fn integer(c: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    c.to_integer().to_i64().expect("small integer")
}

pub(crate) fn as_small_integer(c: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

fn wrap(s: String) -> String {
    if s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '^') {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.prefactor.is_one() || (self.powers.is_empty() && self.pochhammers.is_empty()) {
            parts.push(wrap(self.prefactor.to_string()));
        }
        for p in &self.powers {
            parts.push(format!("{}^{}", wrap(p.base.to_string()), wrap(p.exp.to_string())));
        }
        let name = match self.kind {
            Kind::Ordinary => "poch",
            Kind::Q => "qpoch",
        };
        for p in &self.pochhammers {
            let body = format!("{name}({},{})", p.arg, p.len);
            if p.mult == 1 {
                parts.push(body);
            } else {
                parts.push(format!("{body}^({})", p.mult));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.kind.name(), self)
    }
}
