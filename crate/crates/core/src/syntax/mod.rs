//! Surface syntax for summands and rational expressions.
//!
//! ```text
//! term     = factor { ("*" | "/") factor }
//! factor   = unary [ "^" factor ]
//! primary  = call | "(" term ")" | int | symbol
//! call     = poch(expr, len) | qpoch(expr, len) | fact(len) | qfact(len)
//!          | power(expr, exponent) | qpow(exponent) | binom2(expr)
//! ```
//!
//! Exponents and lengths are polynomials in the summation index and the
//! integer-valued parameters. In a basic term `q^e` with an integer-affine
//! exponent becomes a product of companion symbols.

mod lexer;
mod parser;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{Polynomial, RationalFunction, Var};
use crate::terms::{q_power_of, q_var, HyperTerm, Kind};
use crate::Rational;

pub use parser::{Expr, Node};

/// Parses a summand on line 1.
pub fn parse_term(src: &str, kind: Kind) -> Result<HyperTerm> {
    parse_term_at(src, kind, 1)
}

/// Parses a summand, reporting positions on the given line.
pub fn parse_term_at(src: &str, kind: Kind, line: usize) -> Result<HyperTerm> {
    let ast = parser::parse(src, line)?;
    let t = Lowering { kind }.term(&ast)?;
    check_index_placement(&t)?;
    Ok(t)
}

/// Parses a rational expression; `q^e` becomes companion symbols.
pub fn parse_ratfn(src: &str) -> Result<RationalFunction> {
    let ast = parser::parse(src, 1)?;
    Lowering { kind: Kind::Q }.rational(&ast)
}

/// Parses a polynomial expression.
pub fn parse_poly(src: &str) -> Result<Polynomial> {
    let r = parse_ratfn(src)?;
    r.as_polynomial()
        .ok_or_else(|| Error::Lowering(format!("{src} is not a polynomial")))
}

/// Parses a term file: one term per line, `#` starts a comment.
pub fn parse_terms_file(src: &str, kind: Kind) -> Result<Vec<HyperTerm>> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        out.push(parse_term_at(body, kind, i + 1)?);
    }
    Ok(out)
}

fn check_index_placement(t: &HyperTerm) -> Result<()> {
    let k = crate::terms::index_var();
    let x = Kind::Q.main_var();
    for p in &t.pochhammers {
        if p.arg.contains(k) || p.arg.contains(x) {
            return Err(Error::Lowering(format!(
                "the summation index occurs in the Pochhammer argument {}",
                p.arg
            )));
        }
    }
    for p in &t.powers {
        if p.base.contains(k) || p.base.contains(x) {
            return Err(Error::Lowering(format!(
                "the summation index occurs in the base {} of a power",
                p.base
            )));
        }
    }
    Ok(())
}

struct Lowering {
    kind: Kind,
}

fn at(node: &Node, message: impl Into<String>) -> Error {
    Error::Lowering(format!("{}:{}: {}", node.line, node.column, message.into()))
}

impl Lowering {
    fn term(&self, node: &Node) -> Result<HyperTerm> {
        match &node.expr {
            Expr::Mul(a, b) => Ok(self.term(a)?.mul(&self.term(b)?)),
            Expr::Div(a, b) => {
                let d = self.term(b)?;
                if d.is_zero() {
                    return Err(at(node, "division by zero"));
                }
                Ok(self.term(a)?.mul(&d.inverse()?))
            }
            Expr::Neg(a) => Ok(self.term(a)?.mul_rational(&RationalFunction::integer(-1))),
            Expr::Pow(base, exp) => self.power(node, base, exp),
            Expr::Call(name, args) => self.call(node, name, args),
            _ => Ok(HyperTerm::new(self.kind, self.rational(node)?)),
        }
    }

    fn power(&self, node: &Node, base: &Node, exp: &Node) -> Result<HyperTerm> {
        let e = self.polynomial(exp)?;
        if let Some(c) = e.as_constant() {
            if !c.is_integer() {
                return Err(at(exp, "fractional constant exponent"));
            }
            let n = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| at(exp, "exponent too large"))?;
            let t = self.term(base)?;
            let mut acc = HyperTerm::one(self.kind);
            let unit = if n >= 0 { t } else { t.inverse()? };
            for _ in 0..n.unsigned_abs() {
                acc = acc.mul(&unit);
            }
            return Ok(acc);
        }
        let b = self.rational(base).map_err(|_| at(node, "a symbolic power needs a rational base"))?;
        Ok(HyperTerm::one(self.kind).with_power(b, e))
    }

    fn call(&self, node: &Node, name: &str, args: &[Node]) -> Result<HyperTerm> {
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(at(node, format!("{name} expects {n} argument(s)")))
            }
        };
        match name {
            "poch" | "qpoch" => {
                arity(2)?;
                let want = if name == "poch" { Kind::Ordinary } else { Kind::Q };
                if want != self.kind {
                    return Err(at(node, format!("{name} in a {} term", self.kind.name())));
                }
                let arg = self.rational(&args[0])?;
                let len = self.polynomial(&args[1])?;
                Ok(HyperTerm::one(self.kind).with_pochhammer(arg, len, 1))
            }
            "fact" | "qfact" => {
                arity(1)?;
                let len = self.polynomial(&args[0])?;
                let arg = match self.kind {
                    Kind::Ordinary => RationalFunction::one(),
                    Kind::Q => RationalFunction::var(q_var()),
                };
                Ok(HyperTerm::one(self.kind).with_pochhammer(arg, len, 1))
            }
            "power" => {
                arity(2)?;
                self.power(node, &args[0], &args[1])
            }
            "qpow" => {
                arity(1)?;
                let e = self.polynomial(&args[0])?;
                Ok(HyperTerm::one(self.kind).with_power(RationalFunction::var(q_var()), e))
            }
            _ => Ok(HyperTerm::new(self.kind, self.rational(node)?)),
        }
    }

    fn polynomial(&self, node: &Node) -> Result<Polynomial> {
        let r = self.rational(node)?;
        r.as_polynomial()
            .ok_or_else(|| at(node, "expected a polynomial exponent or length"))
    }

    fn rational(&self, node: &Node) -> Result<RationalFunction> {
        match &node.expr {
            Expr::Int(n) => Ok(RationalFunction::constant(Rational::from_integer(n.clone()))),
            Expr::Sym(s) => Ok(RationalFunction::var(Var::new(s))),
            Expr::Add(a, b) => Ok(&self.rational(a)? + &self.rational(b)?),
            Expr::Sub(a, b) => Ok(&self.rational(a)? - &self.rational(b)?),
            Expr::Mul(a, b) => Ok(&self.rational(a)? * &self.rational(b)?),
            Expr::Div(a, b) => self
                .rational(a)?
                .checked_div(&self.rational(b)?)
                .map_err(|_| at(node, "division by zero")),
            Expr::Neg(a) => Ok(-&self.rational(a)?),
            Expr::Pow(base, exp) => {
                let e = self.polynomial(exp)?;
                if let Some(c) = e.as_constant() {
                    let n = c
                        .is_integer()
                        .then(|| c.to_integer().to_i64())
                        .flatten()
                        .ok_or_else(|| at(exp, "expected an integer exponent"))?;
                    return self
                        .rational(base)?
                        .pow(n)
                        .map_err(|_| at(node, "zero to a negative power"));
                }
                if matches!(&base.expr, Expr::Sym(s) if s == "q") {
                    return q_power_of(&e)
                        .ok_or_else(|| at(exp, "q-exponent must be integer-affine in the parameters"));
                }
                Err(at(node, "symbolic exponent in a rational expression"))
            }
            Expr::Call(name, args) => match (name.as_str(), args.len()) {
                ("binom2", 1) => {
                    let e = self.rational(&args[0])?;
                    let half = RationalFunction::constant(Rational::new(1.into(), 2.into()));
                    Ok(&(&e * &(&e - &RationalFunction::one())) * &half)
                }
                ("qpow", 1) => {
                    let e = self.polynomial(&args[0])?;
                    q_power_of(&e).ok_or_else(|| at(node, "q-exponent must be integer-affine"))
                }
                _ => Err(at(node, format!("{name} is not a rational function"))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::ratio;

    #[test]
    fn hermite_summand() {
        let t = parse_term(
            "(2*x)^n * poch(-n/2,k) * poch(-(n-1)/2,k) / fact(k) * (-1/x^2)^k",
            Kind::Ordinary,
        )
        .unwrap();
        let r = ratio(&t).unwrap();
        let expected = parse_ratfn("(k-n/2)*(k-(n-1)/2)/(k+1)*(-1/x^2)").unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn cancelling_pochhammers() {
        let t = parse_term("poch(a,k) / poch(a,k)", Kind::Ordinary).unwrap();
        assert!(t.prefactor.is_one() && t.pochhammers.is_empty() && t.powers.is_empty());
    }

    #[test]
    fn q_term() {
        let t = parse_term("qpoch(q^(-n),k) * q^k / qpoch(q,k)", Kind::Q).unwrap();
        let expected = parse_ratfn("(1-q^k/q^n)*q/(1-q*q^k)").unwrap();
        assert_eq!(ratio(&t).unwrap(), expected);
    }

    #[test]
    fn binomial_exponents() {
        let t = parse_term("q^binom2(k) * qpoch(a,k)", Kind::Q).unwrap();
        let expected = parse_ratfn("q^k*(1-a*q^k)").unwrap();
        assert_eq!(ratio(&t).unwrap(), expected);
    }

    #[test]
    fn shifted_factorials() {
        let t = parse_term("((1-x)/2)^(k-1) / fact(k-1)", Kind::Ordinary).unwrap();
        let expected = parse_ratfn("(1-x)/(2*k)").unwrap();
        assert_eq!(ratio(&t).unwrap(), expected);
    }

    #[test]
    fn index_in_argument_is_rejected() {
        let e = parse_term("poch(k,n)", Kind::Ordinary).unwrap_err();
        assert!(matches!(e, Error::Lowering(_)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("poch(a,k", Kind::Ordinary) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 9)),
            other => panic!("{other:?}"),
        }
        match parse_terms_file("# header\nk\nk *\n", Kind::Ordinary) {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_round_trip() {
        for (src, kind) in [
            ("(2*x)^n * poch(-n/2,k) * poch(-(n-1)/2,k) / fact(k) * (-1/x^2)^k", Kind::Ordinary),
            ("qpoch(q^(-n),k) * qpoch(a*q^n,k) * q^k / qpoch(q,k)", Kind::Q),
            ("k^2 * poch(a+1,n+1) / poch(b,k)^2", Kind::Ordinary),
        ] {
            let t = parse_term(src, kind).unwrap();
            let again = parse_term(&t.to_string(), kind).unwrap();
            assert_eq!(t, again, "{t}");
        }
    }
}
