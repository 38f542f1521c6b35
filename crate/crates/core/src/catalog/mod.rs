//! Built-in families of orthogonal polynomials given by terminating
//! hypergeometric sums, and relations derived from them.

mod derive;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{RationalFunction, Var};
use crate::syntax::{parse_ratfn, parse_term};
use crate::terms::{HyperTerm, Kind};

pub use derive::{
    connection_recurrence, default_sigma, derivative_three_term, param_shift_relation, solve_relation,
    structure_inverse, structure_sigma, three_term, ConnectionRecurrence, Derivation,
};

/// A family `P_n(x) = Σ_k P_{n,k}(x)`.
#[derive(Clone, Debug)]
pub struct PolynomialFamily {
    pub name: String,
    pub kind: Kind,
    pub parameters: Vec<Var>,
    /// The symbol frozen when deriving relations.
    pub argument: Var,
    /// Left-hand multiplier of the three-term recurrence: `x`, or the
    /// lattice value for families in a quadratic or q-lattice argument.
    pub multiplier: RationalFunction,
    /// The degree symbol, `n` unless renamed.
    pub degree: Var,
    pub summand: HyperTerm,
    /// Normalization the golden values refer to.
    pub convention: &'static str,
    pub monic: bool,
}

/// Operator applied to a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Value,
    /// `d/dx`, or the q-difference `(P(qx) - P(x))/((q-1)x)`.
    Derivative,
    /// `P(x+1) - P(x)`.
    Difference,
}

/// `op P_{n+shift}` with parameters substituted.
#[derive(Clone, Debug, PartialEq)]
pub struct Member {
    pub shift: i64,
    pub op: Op,
    pub params: Vec<(Var, RationalFunction)>,
}

impl Member {
    pub fn value(shift: i64) -> Self {
        Member {
            shift,
            op: Op::Value,
            params: Vec::new(),
        }
    }

    pub fn derivative(shift: i64) -> Self {
        Member {
            shift,
            op: Op::Derivative,
            params: Vec::new(),
        }
    }

    pub fn with_params(mut self, params: &[(Var, RationalFunction)]) -> Self {
        self.params = params.to_vec();
        self
    }
}

pub const NAMES: &[&str] = &[
    "hermite",
    "laguerre",
    "jacobi",
    "charlier",
    "meixner",
    "krawtchouk",
    "hahn",
    "wilson",
    "racah",
    "pollaczek",
    "qhermite1",
    "askey-wilson",
    "qracah",
];

struct FamilyDef {
    kind: Kind,
    params: &'static [&'static str],
    argument: &'static str,
    multiplier: &'static str,
    summand: &'static str,
    convention: &'static str,
    monic: bool,
}

fn definition(name: &str) -> Option<FamilyDef> {
    use Kind::{Ordinary, Q};
    let s = match name {
        "hermite" => FamilyDef {
            kind: Ordinary,
            params: &[],
            argument: "x",
            multiplier: "x",
            summand: "(2*x)^n * poch(-n/2,k) * poch(-(n-1)/2,k) / fact(k) * (-1/x^2)^k",
            convention: "H_n(x) = (2x)^n 2F0(-n/2, -(n-1)/2; ; -1/x^2)",
            monic: false,
        },
        "laguerre" => FamilyDef {
            kind: Ordinary,
            params: &["a"],
            argument: "x",
            multiplier: "x",
            summand: "(-1)^n * poch(a+1,n) * poch(-n,k) / poch(a+1,k) / fact(k) * x^k",
            convention: "monic, (-1)^n n! L_n^(a)(x)",
            monic: true,
        },
        "jacobi" => FamilyDef {
            kind: Ordinary,
            params: &["a", "b"],
            argument: "x",
            multiplier: "x",
            summand: "2^n * poch(a+1,n) / poch(n+a+b+1,n) * poch(-n,k) * poch(n+a+b+1,k) \
                      / poch(a+1,k) / fact(k) * ((1-x)/2)^k",
            convention: "monic Jacobi",
            monic: true,
        },
        "charlier" => FamilyDef {
            kind: Ordinary,
            params: &["a"],
            argument: "x",
            multiplier: "x",
            summand: "(-a)^n * poch(-n,k) * poch(-x,k) / fact(k) * (-1/a)^k",
            convention: "monic, (-a)^n C_n(x;a)",
            monic: true,
        },
        "meixner" => FamilyDef {
            kind: Ordinary,
            params: &["b", "c"],
            argument: "x",
            multiplier: "x",
            summand: "poch(b,n) * (c/(c-1))^n * poch(-n,k) * poch(-x,k) / poch(b,k) / fact(k) \
                      * (1-1/c)^k",
            convention: "monic, (b)_n (c/(c-1))^n M_n(x;b,c)",
            monic: true,
        },
        "krawtchouk" => FamilyDef {
            kind: Ordinary,
            params: &["p", "N"],
            argument: "x",
            multiplier: "x",
            summand: "poch(-N,n) * p^n * poch(-n,k) * poch(-x,k) / poch(-N,k) / fact(k) * (1/p)^k",
            convention: "monic, (-N)_n p^n K_n(x;p,N)",
            monic: true,
        },
        "hahn" => FamilyDef {
            kind: Ordinary,
            params: &["a", "b", "N"],
            argument: "x",
            multiplier: "x",
            summand: "poch(a+1,n) * poch(-N,n) / poch(n+a+b+1,n) * poch(-n,k) * poch(n+a+b+1,k) \
                      * poch(-x,k) / poch(a+1,k) / poch(-N,k) / fact(k)",
            convention: "monic, (a+1)_n (-N)_n / (n+a+b+1)_n Q_n(x;a,b,N)",
            monic: true,
        },
        "wilson" => FamilyDef {
            kind: Ordinary,
            params: &["a", "b", "c", "d"],
            argument: "x",
            multiplier: "x^2",
            summand: "poch(a+b,n) * poch(a+c,n) * poch(a+d,n) * poch(-n,k) * poch(n+a+b+c+d-1,k) \
                      * poch(a+x*i,k) * poch(a-x*i,k) / (poch(a+b,k) * poch(a+c,k) * poch(a+d,k) * fact(k))",
            convention: "W_n(x^2) with the (a+b)_n (a+c)_n (a+d)_n prefactor",
            monic: false,
        },
        "racah" => FamilyDef {
            kind: Ordinary,
            params: &["a", "b", "c", "d"],
            argument: "x",
            multiplier: "x*(x+c+d+1)",
            summand: "poch(-n,k) * poch(n+a+b+1,k) * poch(-x,k) * poch(x+c+d+1,k) \
                      / (poch(a+1,k) * poch(b+d+1,k) * poch(c+1,k) * fact(k))",
            convention: "R_n(x(x+c+d+1)) = 4F3(-n, n+a+b+1, -x, x+c+d+1; a+1, b+d+1, c+1; 1)",
            monic: false,
        },
        "pollaczek" => FamilyDef {
            kind: Ordinary,
            params: &["a", "b"],
            argument: "eta",
            multiplier: "(a*eta^2+1)/((1+a)*eta)",
            summand: "eta^n * poch(-n,k) * poch(b*(1-eta^2)/((1+a)*(1-a*eta^2)),k) / poch(b/a,k) \
                      / fact(k) * (-(1-a*eta^2)/(a*eta^2))^k",
            convention: "eta^n 2F1(-n, b(x-eta)/xi; b/a; -xi/(a eta)) with x = (a eta^2+1)/((1+a) eta)",
            monic: false,
        },
        "qhermite1" => FamilyDef {
            kind: Q,
            params: &[],
            argument: "x",
            multiplier: "x",
            summand: "q^binom2(n) * qpoch(q^(-n),k) * qpoch(1/x,k) / qfact(k) * (-q*x)^k",
            convention: "q^binom2(n) 2phi1(q^-n, 1/x; 0; q; -qx)",
            monic: false,
        },
        "askey-wilson" => FamilyDef {
            kind: Q,
            params: &["a", "b", "c", "d"],
            argument: "z",
            multiplier: "(z+1/z)/2",
            summand: "qpoch(a*b,n) * qpoch(a*c,n) * qpoch(a*d,n) / a^n * qpoch(q^(-n),k) \
                      * qpoch(a*b*c*d*q^(n-1),k) * qpoch(a*z,k) * qpoch(a/z,k) \
                      / (qpoch(a*b,k) * qpoch(a*c,k) * qpoch(a*d,k) * qfact(k)) * q^k",
            convention: "p_n(x;a,b,c,d|q) with x = (z+1/z)/2",
            monic: false,
        },
        "qracah" => FamilyDef {
            kind: Q,
            params: &["a", "b", "c", "d"],
            argument: "q^x",
            multiplier: "q^(-x) + c*d*q^(x+1)",
            summand: "qpoch(q^(-n),k) * qpoch(a*b*q^(n+1),k) * qpoch(q^(-x),k) * qpoch(c*d*q^(x+1),k) \
                      / (qpoch(a*q,k) * qpoch(b*d*q,k) * qpoch(c*q,k) * qfact(k)) * q^k",
            convention: "R_n(q^-x + cd q^(x+1)) = 4phi3(q^-n, abq^(n+1), q^-x, cdq^(x+1); aq, bdq, cq; q; q)",
            monic: false,
        },
        _ => return None,
    };
    Some(s)
}

/// Looks up a registered family.
pub fn family(name: &str) -> Result<PolynomialFamily> {
    let s = definition(name).ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    Ok(PolynomialFamily {
        name: name.to_string(),
        kind: s.kind,
        parameters: s.params.iter().map(|p| Var::new(p)).collect(),
        argument: Var::new(s.argument),
        multiplier: parse_ratfn(s.multiplier)?,
        degree: Var::new("n"),
        summand: parse_term(s.summand, s.kind)?,
        convention: s.convention,
        monic: s.monic,
    })
}

impl PolynomialFamily {
    /// Renames parameters or the degree symbol, e.g. `b -> gamma`.
    pub fn renamed(&self, map: &[(&str, &str)]) -> Result<PolynomialFamily> {
        let bindings: HashMap<Var, RationalFunction> = map
            .iter()
            .map(|(from, to)| (Var::new(from), RationalFunction::var(Var::new(to))))
            .collect();
        let rename = |v: Var| -> Var {
            map.iter()
                .find(|(from, _)| Var::new(from) == v)
                .map(|(_, to)| Var::new(to))
                .unwrap_or(v)
        };
        Ok(PolynomialFamily {
            name: self.name.clone(),
            kind: self.kind,
            parameters: self.parameters.iter().map(|&p| rename(p)).collect(),
            argument: rename(self.argument),
            multiplier: self.multiplier.subst(&bindings)?,
            degree: rename(self.degree),
            summand: self.summand.substitute(&bindings)?,
            convention: self.convention,
            monic: self.monic,
        })
    }

    /// The summand of `op P_{n+shift}`.
    pub fn member(&self, m: &Member) -> Result<HyperTerm> {
        let mut t = self.summand.shift(self.degree, m.shift)?;
        if !m.params.is_empty() {
            t = t.substitute(&m.params.iter().cloned().collect())?;
        }
        match m.op {
            Op::Value => Ok(t),
            Op::Derivative => match self.kind {
                Kind::Ordinary => t.differentiate(self.argument),
                Kind::Q => t.q_difference(self.argument),
            },
            Op::Difference => t.forward_difference(self.argument),
        }
    }

    pub fn term(&self, shift: i64) -> Result<HyperTerm> {
        self.member(&Member::value(shift))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::quotient;

    #[test]
    fn registry_is_complete() {
        for name in NAMES {
            let f = family(name).unwrap();
            assert_eq!(f.name, *name);
            // neighbouring degrees are similar
            quotient(&f.term(1).unwrap(), &f.term(0).unwrap()).unwrap();
            quotient(&f.term(-1).unwrap(), &f.term(0).unwrap()).unwrap();
        }
        assert!(matches!(family("legendre"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn renaming() {
        let f = family("meixner").unwrap().renamed(&[("b", "delta"), ("c", "nu"), ("n", "m")]).unwrap();
        assert_eq!(f.degree, Var::new("m"));
        assert!(f.summand.vars().contains(&Var::new("delta")));
        assert!(!f.summand.vars().contains(&Var::new("b")));
    }
}
