//! Independent checks of certificates and derived relations.
//!
//! The symbolic check re-derives the telescoping identity from the term
//! ratios. Numeric checks evaluate the terms themselves at random exact
//! points, so they share no code with the solver beyond term evaluation.

use std::collections::{BTreeSet, HashMap};
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{Derivation, PolynomialFamily};
use crate::error::{Error, Result};
use crate::field::{Polynomial, RationalFunction, Var};
use crate::telescope::{Certificate, TelescopeProblem, ZeilbergerRecurrence};
use crate::terms::{eval_term, eval_term_with, index_var, q_var, HyperTerm, Kind};
use crate::{Gaussian, Rational};

pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_SEED: u64 = 0x5eed;
const MAX_ATTEMPTS_PER_TRIAL: usize = 50;

/// A numeric trial whose two sides differ.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericFailure {
    pub assignment: Vec<(Var, Rational)>,
    pub lhs: Gaussian,
    pub rhs: Gaussian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub symbolic_ok: bool,
    /// Trials that reached a comparison.
    pub numeric_trials: usize,
    pub numeric_failures: Vec<NumericFailure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn numeric_ok(&self) -> bool {
        self.numeric_failures.is_empty()
    }

    pub fn passed(&self, trials: usize) -> bool {
        self.symbolic_ok && self.numeric_ok() && self.numeric_trials >= trials
    }
}

/// Options for the numeric trials.
#[derive(Clone, Copy, Debug)]
pub struct Trials {
    pub count: usize,
    pub seed: u64,
}

impl Default for Trials {
    fn default() -> Self {
        Trials {
            count: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
        }
    }
}

/// `k -> k+1` on a rational function of the summation index.
fn shift_index(r: &RationalFunction, kind: Kind) -> RationalFunction {
    let one = Rational::from_integer(1.into());
    let r = r.shift(index_var(), &one);
    match kind {
        Kind::Ordinary => r,
        Kind::Q => r.scale_var(kind.main_var(), &Polynomial::var(q_var())),
    }
}

/// `Σ a_i p_i(k)/Q(k) - (G(k+1) r(k) - G(k))`, zero exactly when the
/// certificate is valid.
pub fn certificate_residual(p: &TelescopeProblem, cert: &Certificate) -> Result<RationalFunction> {
    let fam = &p.family;
    let q_big = RationalFunction::from_poly(fam.common_den.clone());
    let mut lhs = RationalFunction::zero();
    for (a, num) in cert.coeffs.iter().zip(&fam.numerators) {
        lhs = &lhs + &(a * &RationalFunction::from_poly(num.clone()));
    }
    let lhs = lhs.checked_div(&q_big)?;
    let g = &cert.g_multiplier;
    let rhs = &(&shift_index(g, fam.kind()) * &fam.ratio) - g;
    Ok(&lhs - &rhs)
}

/// Whether the residual vanishes, decided on cleared denominators:
/// `Σ a_i p_i · Gd Gd' rd = Q · (Gn' rn Gd - Gn Gd' rd) · L` with
/// `L = lcm(den a_i)` and primes marking `k -> k+1`.
pub fn certificate_holds(p: &TelescopeProblem, cert: &Certificate) -> bool {
    let fam = &p.family;
    let kind = fam.kind();
    let l = cert
        .coeffs
        .iter()
        .fold(Polynomial::one(), |acc, a| crate::field::gcd::lcm(&acc, a.den()));
    let mut sum = Polynomial::zero();
    for (a, num) in cert.coeffs.iter().zip(&fam.numerators) {
        if a.is_zero() {
            continue;
        }
        let cof = l.div_exact(a.den()).expect("lcm is a multiple");
        sum = &sum + &(&(a.num() * &cof) * num);
    }
    let g = &cert.g_multiplier;
    let g1 = shift_index(g, kind);
    let (gn, gd) = (g.num(), g.den());
    let (gn1, gd1) = (g1.num(), g1.den());
    let (rn, rd) = (fam.ratio.num(), fam.ratio.den());
    let lhs = &(&sum * gd) * &(gd1 * rd);
    let diff = &(&(gn1 * rn) * gd) - &(&(gn * gd1) * rd);
    let rhs = &(&fam.common_den * &diff) * &l;
    lhs == rhs
}

/// Symbolic check plus [`DEFAULT_TRIALS`] exact numeric trials.
pub fn verify_certificate(p: &TelescopeProblem, cert: &Certificate) -> VerificationReport {
    verify_certificate_with(p, cert, Trials::default())
}

pub fn verify_certificate_with(p: &TelescopeProblem, cert: &Certificate, trials: Trials) -> VerificationReport {
    let start = Instant::now();
    let symbolic_ok = certificate_holds(p, cert);
    let kind = p.kind();
    let f1 = &p.family.members[0];
    let g = HyperTerm::new(kind, cert.g_multiplier.clone());
    let pairs: Vec<(HyperTerm, &HyperTerm)> = p
        .family
        .members
        .iter()
        .zip(&cert.coeffs)
        .filter(|(_, a)| !a.is_zero())
        .map(|(f, a)| (HyperTerm::new(kind, a.clone()), f))
        .collect();
    let mut all: Vec<&HyperTerm> = pairs.iter().flat_map(|(a, f)| [a, *f]).collect();
    all.push(&g);
    all.push(f1);
    let symbols = Symbols::collect(&all, kind);
    let mut rng = ChaCha8Rng::seed_from_u64(trials.seed);
    let mut report = VerificationReport {
        symbolic_ok,
        numeric_trials: 0,
        numeric_failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for _ in 0..trials.count {
        for _ in 0..MAX_ATTEMPTS_PER_TRIAL {
            let values = symbols.sample(&mut rng);
            let k0 = rng.gen_range(0..=8i64);
            let outcome = (|| -> Result<(Gaussian, Gaussian)> {
                let at = |t: &HyperTerm, k: i64| eval_term::<Gaussian>(t, k, &values);
                let mut lhs = Gaussian::zero();
                for (a, f) in &pairs {
                    lhs = lhs + at(a, k0)? * at(f, k0)?;
                }
                let rhs = at(&g, k0 + 1)? * at(f1, k0 + 1)? - at(&g, k0)? * at(f1, k0)?;
                Ok((lhs, rhs))
            })();
            match outcome {
                Ok((lhs, rhs)) => {
                    report.numeric_trials += 1;
                    if lhs != rhs {
                        let mut assignment = sorted(&values);
                        assignment.push((index_var(), Rational::from_integer(k0.into())));
                        report.numeric_failures.push(NumericFailure { assignment, lhs, rhs });
                    }
                    break;
                }
                Err(Error::PoleEncountered | Error::DivisionByZero) => continue,
                Err(_) => break,
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Checks `factor · lhs = Σ coeffs_j · rhs_j` by summing the members of
/// the family over `k` for each degree in `degrees`.
pub fn verify_relation_numeric(
    fam: &PolynomialFamily,
    d: &Derivation,
    degrees: RangeInclusive<i64>,
    trials: Trials,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs_term = fam.member(&d.lhs)?;
    let rhs_terms: Vec<HyperTerm> = d.rhs.iter().map(|m| fam.member(m)).collect::<Result<_>>()?;
    let mut all: Vec<&HyperTerm> = rhs_terms.iter().collect();
    all.push(&lhs_term);
    let mut symbols = Symbols::collect(&all, fam.kind);
    symbols.integers.remove(&fam.degree);
    symbols.rationals.remove(&fam.degree);
    let coeff_terms: Vec<HyperTerm> = d
        .coeffs
        .iter()
        .map(|c| HyperTerm::new(fam.kind, c.clone()))
        .collect();
    let factor = HyperTerm::new(fam.kind, d.factor.clone());
    let reach = d.rhs.iter().map(|m| m.shift.abs()).max().unwrap_or(0).max(d.lhs.shift.abs()) + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(trials.seed);
    let mut report = VerificationReport {
        symbolic_ok: true,
        numeric_trials: 0,
        numeric_failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in degrees {
        for _ in 0..trials.count {
            for _ in 0..MAX_ATTEMPTS_PER_TRIAL {
                let mut values = symbols.sample(&mut rng);
                values.insert(fam.degree, Rational::from_integer(n.into()));
                let sum = |t: &HyperTerm| -> Result<Gaussian> {
                    let mut acc = Gaussian::zero();
                    for k in 0..=n + reach {
                        acc = acc + eval_term::<Gaussian>(t, k, &values)?;
                    }
                    Ok(acc)
                };
                let outcome = (|| -> Result<(Gaussian, Gaussian)> {
                    let lhs = eval_term_with::<Gaussian>(&factor, &values)? * sum(&lhs_term)?;
                    let mut rhs = Gaussian::zero();
                    for (c, t) in coeff_terms.iter().zip(&rhs_terms) {
                        let cv = eval_term_with::<Gaussian>(c, &values)?;
                        if !cv.is_zero() {
                            rhs = rhs + cv * sum(t)?;
                        }
                    }
                    Ok((lhs, rhs))
                })();
                match outcome {
                    Ok((lhs, rhs)) => {
                        report.numeric_trials += 1;
                        if lhs != rhs {
                            report.numeric_failures.push(NumericFailure {
                                assignment: sorted(&values),
                                lhs,
                                rhs,
                            });
                        }
                        break;
                    }
                    Err(Error::PoleEncountered | Error::DivisionByZero) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Checks `Σ_j a_j(n) S(n+j) = 0` for `S(n) = Σ_{k=0}^{n} F(n,k)` with
/// every other symbol taken from `values`.
pub fn verify_recurrence_numeric(
    rec: &ZeilbergerRecurrence,
    f: &HyperTerm,
    n: Var,
    degrees: RangeInclusive<i64>,
    values: &HashMap<Var, Rational>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport {
        symbolic_ok: true,
        numeric_trials: 0,
        numeric_failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let s = |m: i64| -> Result<Gaussian> {
        let mut vals = values.clone();
        vals.insert(n, Rational::from_integer(m.into()));
        let mut acc = Gaussian::zero();
        for k in 0..=m {
            acc = acc + eval_term::<Gaussian>(f, k, &vals)?;
        }
        Ok(acc)
    };
    for n0 in degrees {
        let mut vals = values.clone();
        vals.insert(n, Rational::from_integer(n0.into()));
        let mut lhs = Gaussian::zero();
        for (j, a) in rec.coeffs.iter().enumerate() {
            let t = HyperTerm::new(f.kind, RationalFunction::from_poly(a.clone()));
            lhs = lhs + eval_term_with::<Gaussian>(&t, &vals)? * s(n0 + j as i64)?;
        }
        report.numeric_trials += 1;
        if !lhs.is_zero() {
            report.numeric_failures.push(NumericFailure {
                assignment: sorted(&vals),
                lhs,
                rhs: Gaussian::zero(),
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn sorted(values: &HashMap<Var, Rational>) -> Vec<(Var, Rational)> {
    let mut v: Vec<(Var, Rational)> = values.iter().map(|(k, c)| (*k, c.clone())).collect();
    v.sort_by_key(|(k, _)| k.name());
    v
}

/// Symbols to sample, split by the values they may take.
struct Symbols {
    integers: BTreeSet<Var>,
    rationals: BTreeSet<Var>,
    q: bool,
}

impl Symbols {
    fn collect(terms: &[&HyperTerm], kind: Kind) -> Self {
        let k = index_var();
        let mut integers = BTreeSet::new();
        let mut rationals = BTreeSet::new();
        let mut q = kind == Kind::Q;
        for t in terms {
            for p in &t.pochhammers {
                integers.extend(p.len.vars());
            }
            for p in &t.powers {
                integers.extend(p.exp.vars());
            }
            for v in t.vars() {
                if v == q_var() {
                    q = true;
                } else if let Some(e) = v.q_exponent() {
                    q = true;
                    integers.insert(e);
                } else if !v.is_imaginary_unit() {
                    rationals.insert(v);
                }
            }
        }
        integers.remove(&k);
        rationals.retain(|v| *v != k && !integers.contains(v));
        Symbols { integers, rationals, q }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> HashMap<Var, Rational> {
        let mut values = HashMap::new();
        for &v in &self.integers {
            values.insert(v, Rational::from_integer(rng.gen_range(1..=8i64).into()));
        }
        for &v in &self.rationals {
            let (p, q) = (rng.gen_range(1..=50i64), rng.gen_range(1..=50i64));
            values.insert(v, Rational::new(p.into(), q.into()));
        }
        if self.q {
            let p1 = rng.gen_range(1..=50i64);
            let mut p2 = rng.gen_range(1..=50i64);
            while p2 == p1 {
                p2 = rng.gen_range(1..=50i64);
            }
            values.insert(q_var(), Rational::new(p1.into(), p2.into()));
        }
        values
    }
}
