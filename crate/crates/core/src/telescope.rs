//! Telescoping of linear combinations of similar terms.
//!
//! Given similar terms `f_1..f_m`, find coefficients `a_i` free of `k` and
//! a term `g` with `Σ a_i f_i(k) = g(k+1) - g(k)`. With `r = f_1(k+1)/f_1(k)`
//! and `f_i/f_1 = p_i/Q`, a Gosper form of `r Q(k)/Q(k+1)` turns this into
//! the key equation of [`crate::gosper`]; every solution gives
//! `g(k) = b(k-1) x(k) / (c(k) Q(k)) · f_1(k)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::gcd::{gcd, lcm};
use crate::field::linalg::{eliminate, nullspace_reduced};
use crate::field::{nullspace, LinearForm, Matrix, Polynomial, RationalFunction, SolutionSpace, Var};
use crate::gosper::{build_gosper_system, gosper_form, GosperEquation};
use crate::terms::{quotient, HyperTerm, Kind, SimilarFamily};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct TelescopeProblem {
    pub family: SimilarFamily,
    /// Symbols the coefficients must not contain.
    pub freeze: Vec<Var>,
}

impl TelescopeProblem {
    pub fn new(members: Vec<HyperTerm>) -> Result<Self> {
        Ok(TelescopeProblem {
            family: SimilarFamily::new(members)?,
            freeze: Vec::new(),
        })
    }

    pub fn from_family(family: SimilarFamily) -> Self {
        TelescopeProblem {
            family,
            freeze: Vec::new(),
        }
    }

    pub fn with_freeze(mut self, freeze: &[Var]) -> Self {
        self.freeze = freeze.to_vec();
        self
    }

    pub fn kind(&self) -> Kind {
        self.family.kind()
    }

    /// Symbols other than the summation variable.
    pub fn parameters(&self) -> Vec<Var> {
        let main = self.kind().main_var();
        let k = crate::terms::index_var();
        let mut vs: Vec<Var> = self
            .family
            .members
            .iter()
            .flat_map(|t| t.vars())
            .filter(|&v| v != main && v != k)
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

/// Name of the `j`-th free variable (1-based).
pub fn free_symbol(j: usize) -> Var {
    Var::new(&format!("v{j}"))
}

/// Solution space of the telescoping system.
#[derive(Clone, Debug)]
pub struct TelescopeSolution {
    pub kind: Kind,
    pub equation: GosperEquation,
    pub common_den: Polynomial,
    pub space: SolutionSpace,
}

/// Coefficients and the certificate multiplier `g(k)/f_1(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: Kind,
    pub coeffs: Vec<RationalFunction>,
    pub g_multiplier: RationalFunction,
}

impl TelescopeSolution {
    pub fn m(&self) -> usize {
        self.equation.m()
    }

    /// Free unknowns among the `a_i`, in order.
    pub fn free_coefficients(&self) -> Vec<usize> {
        let m = self.m();
        self.space.free.iter().copied().filter(|&f| f < m).collect()
    }

    pub fn dimension(&self) -> usize {
        self.free_coefficients().len()
    }

    /// Assigns `v_1, v_2, ...` to the free coefficients.
    pub fn symbolic_values(&self) -> HashMap<usize, RationalFunction> {
        self.free_coefficients()
            .into_iter()
            .enumerate()
            .map(|(j, f)| (f, RationalFunction::var(free_symbol(j + 1))))
            .collect()
    }

    /// The certificate at a point of the space. Free coefficients missing
    /// from `values` are zero, as are free coefficients of `x`.
    pub fn certificate(&self, values: &HashMap<usize, RationalFunction>) -> Result<Certificate> {
        let all = self.space.instantiate(values);
        let m = self.m();
        let x = self.equation.x_from(&all);
        let denom = RationalFunction::from_poly(&self.equation.form.c * &self.common_den);
        let g = (&self.equation.shifted_b() * &x).checked_div(&denom)?;
        Ok(Certificate {
            kind: self.kind,
            coeffs: all[..m].to_vec(),
            g_multiplier: g,
        })
    }

    /// The certificate with free coefficients left symbolic as `v_j`.
    pub fn symbolic_certificate(&self) -> Result<Certificate> {
        self.certificate(&self.symbolic_values())
    }

    /// Certificate with the first free coefficient set to 1 and the rest 0.
    pub fn first_certificate(&self) -> Result<Certificate> {
        let free = self.free_coefficients();
        let f = *free.first().ok_or(Error::OnlyTrivial)?;
        let mut values = HashMap::new();
        values.insert(f, RationalFunction::one());
        self.certificate(&values)
    }

    /// Restricts to coefficients free of the given symbols.
    pub fn restrict(&self, freeze: &[Var]) -> Result<TelescopeSolution> {
        let space = restrict_free_of(&self.space, self.m(), freeze)?;
        Ok(TelescopeSolution {
            space,
            ..self.clone()
        })
    }
}

/// Solves the telescoping problem over `ℚ(parameters)` with the `a_i` free
/// of the frozen symbols.
pub fn extended_telescope(p: &TelescopeProblem) -> Result<TelescopeSolution> {
    let fam = &p.family;
    let kind = fam.kind();
    let main = kind.main_var();
    let q_big = RationalFunction::from_poly(fam.common_den.clone());
    let shifted_q = match kind {
        Kind::Ordinary => q_big.shift(main, &Rational::from_integer(1.into())),
        Kind::Q => q_big.scale_var(main, &Polynomial::var(crate::terms::q_var())),
    };
    let r = &(&fam.ratio * &q_big) / &shifted_q;
    let form = gosper_form(&r, kind);
    let eq = GosperEquation::new(kind, form, fam.numerators.clone())?;
    let sys = build_gosper_system(&eq);
    let space = if p.freeze.is_empty() {
        nullspace(&sys, &eq.pivot_order())
    } else {
        solve_frozen(&sys, eq.m(), &p.freeze)?
    };
    let sol = TelescopeSolution {
        kind,
        equation: eq,
        common_den: fam.common_den.clone(),
        space,
    };
    if sol.dimension() == 0 {
        return Err(Error::OnlyTrivial);
    }
    Ok(sol)
}

/// Nullspace of the system over `(a_1..a_m, c_lo..c_hi)` with the `a_i`
/// free of `freeze`. The `c_j` are eliminated first; the rows left over
/// involve only the `a_i` and split by the monomials of the frozen symbols.
fn solve_frozen(sys: &Matrix, m: usize, freeze: &[Var]) -> Result<SolutionSpace> {
    let c_cols: Vec<usize> = (m..sys.cols).collect();
    let (ech, rest) = eliminate(sys, &c_cols);
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for row in &rest {
        let mut split: BTreeMap<crate::field::Monomial, Vec<Polynomial>> = BTreeMap::new();
        for (j, e) in row[..m].iter().enumerate() {
            for (mono, coeff) in e.coefficients_wrt(freeze) {
                let r = split.entry(mono).or_insert_with(|| vec![Polynomial::zero(); m]);
                r[j] = &r[j] + &coeff;
            }
        }
        rows.extend(split.into_values());
    }
    let mut mat = Matrix::from_rows(rows, m);
    mat.prune();
    let order: Vec<usize> = (0..m).rev().collect();
    let small = nullspace_reduced(&mat, &order);
    if small.free.is_empty() {
        return Err(Error::OnlyTrivial);
    }
    let mut free = small.free.clone();
    free.extend(ech.free.iter().copied());
    let mut bound = small.bound.clone();
    let det = RationalFunction::from_poly(ech.det.clone());
    for &(c, r) in &ech.pivots {
        let mut form = LinearForm::new();
        for (j, e) in ech.rows[r].iter().enumerate() {
            if j == c || e.is_zero() {
                continue;
            }
            let coeff = -&(&RationalFunction::from_poly(e.clone()) / &det);
            let parts = if j < m {
                small.form(j)
            } else {
                LinearForm::from([(j, RationalFunction::one())])
            };
            for (f, d) in parts {
                let entry = form.entry(f).or_insert_with(RationalFunction::zero);
                *entry = &*entry + &(&coeff * &d);
            }
        }
        form.retain(|_, c| !c.is_zero());
        bound.insert(c, form);
    }
    free.sort_unstable();
    Ok(SolutionSpace {
        unknowns: sys.cols,
        free,
        bound,
    })
}

/// Restricts a solution space over `(a_1..a_m, c_lo..c_hi)` to points whose
/// `a_i` are free of every symbol in `freeze`.
pub fn restrict_free_of(space: &SolutionSpace, m: usize, freeze: &[Var]) -> Result<SolutionSpace> {
    let free_a: Vec<usize> = space.free.iter().copied().filter(|&f| f < m).collect();
    if free_a.is_empty() {
        return Err(Error::OnlyTrivial);
    }
    if freeze.is_empty() {
        return Ok(space.clone());
    }
    // One equation D_i a_i - Σ_f N_if a_f = 0 per bound a_i, split by the
    // monomials of the frozen symbols.
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..m {
        if free_a.contains(&i) {
            continue;
        }
        let form = space.form(i);
        let den = form
            .values()
            .fold(Polynomial::one(), |acc, c| lcm(&acc, c.den()));
        let mut entries: Vec<(usize, Polynomial)> = vec![(i, den.clone())];
        for (&f, c) in &form {
            if f >= m {
                continue;
            }
            let cof = den.div_exact(c.den()).expect("lcm is a multiple");
            entries.push((f, -(c.num() * &cof)));
        }
        let mut split: BTreeMap<crate::field::Monomial, Vec<Polynomial>> = BTreeMap::new();
        for (j, e) in entries {
            for (mono, coeff) in e.coefficients_wrt(freeze) {
                let row = split.entry(mono).or_insert_with(|| vec![Polynomial::zero(); m]);
                row[j] = &row[j] + &coeff;
            }
        }
        rows.extend(split.into_values());
    }
    let mut mat = Matrix::from_rows(rows, m);
    mat.prune();
    let order: Vec<usize> = (0..m).rev().collect();
    let small = nullspace_reduced(&mat, &order);
    if small.free.is_empty() {
        return Err(Error::OnlyTrivial);
    }
    // Compose: every unknown of the big space as a form in the new free a's.
    let mut bound = BTreeMap::new();
    for u in 0..space.unknowns {
        if small.free.contains(&u) {
            continue;
        }
        let old = space.form(u);
        let mut composed = LinearForm::new();
        for (&f, c) in &old {
            if f >= m {
                continue;
            }
            for (&g, d) in &small.form(f) {
                let term = c * d;
                let entry = composed.entry(g).or_insert_with(RationalFunction::zero);
                *entry = &*entry + &term;
            }
        }
        composed.retain(|_, c| !c.is_zero());
        bound.insert(u, composed);
    }
    Ok(SolutionSpace {
        unknowns: space.unknowns,
        free: small.free.clone(),
        bound,
    })
}

/// Normalized linear relation `Σ a_i S_i = 0` among the sums of the `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub coeffs: Vec<RationalFunction>,
    /// Summing the certificate assumes `g` vanishes at both ends.
    pub boundary_terms_assumed_zero: bool,
    pub certificate: Certificate,
}

impl Relation {
    /// `-a_i / a_1`, the coefficient of `S_i` when `S_1` is isolated.
    pub fn solved_for_first(&self, i: usize) -> Option<RationalFunction> {
        let a1 = &self.coeffs[0];
        if a1.is_zero() {
            return None;
        }
        Some(-&(&self.coeffs[i] / a1))
    }
}

/// Sums a certificate into a relation, dividing by `a_1` when it is
/// nonzero and otherwise clearing denominators and content.
pub fn sum_relation(cert: &Certificate) -> Result<Relation> {
    if cert.coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::AllZero);
    }
    let a1 = cert.coeffs[0].clone();
    let (coeffs, scale) = if !a1.is_zero() {
        let coeffs = cert.coeffs.iter().map(|c| c / &a1).collect();
        (coeffs, a1.inv()?)
    } else {
        let polys = content_normalize(&cert.coeffs);
        let scale = {
            let first = cert.coeffs.iter().position(|c| !c.is_zero()).unwrap();
            (&RationalFunction::from_poly(polys[first].clone()) / &cert.coeffs[first]).clone()
        };
        (polys.into_iter().map(RationalFunction::from_poly).collect(), scale)
    };
    Ok(Relation {
        coeffs,
        boundary_terms_assumed_zero: true,
        certificate: Certificate {
            kind: cert.kind,
            coeffs: cert.coeffs.iter().map(|c| c * &scale).collect(),
            g_multiplier: &cert.g_multiplier * &scale,
        },
    })
}

/// Clears denominators and common polynomial content; the first nonzero
/// entry gets a positive leading coefficient.
pub fn content_normalize(coeffs: &[RationalFunction]) -> Vec<Polynomial> {
    let den = coeffs
        .iter()
        .fold(Polynomial::one(), |acc, c| lcm(&acc, c.den()));
    let polys: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| {
            let cof = den.div_exact(c.den()).expect("lcm is a multiple");
            c.num() * &cof
        })
        .collect();
    let g = polys.iter().fold(Polynomial::zero(), |acc, p| gcd(&acc, p));
    let mut polys: Vec<Polynomial> = polys
        .iter()
        .map(|p| p.div_exact(&g).expect("gcd divides"))
        .collect();
    let content = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.content())
        .fold(None::<Rational>, |acc, c| {
            Some(match acc {
                None => c,
                Some(a) => rational_gcd(&a, &c),
            })
        })
        .unwrap_or_else(|| Rational::from_integer(1.into()));
    let sign_negative = polys
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.lc().is_negative())
        .unwrap_or(false);
    let mut factor = content.recip();
    if sign_negative {
        factor = -factor;
    }
    for p in polys.iter_mut() {
        *p = p.scale(&factor);
    }
    polys
}

fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rational::new(n, d)
}

/// A recurrence `Σ_j a_j(n) S(n+j) = 0` for `S(n) = Σ_k F(n,k)`.
#[derive(Clone, Debug)]
pub struct ZeilbergerRecurrence {
    pub order: usize,
    pub coeffs: Vec<Polynomial>,
    pub certificate: Certificate,
    pub problem: TelescopeProblem,
}

/// Classical Zeilberger: the least order `J <= max_order` with a relation
/// among `F(n,k), ..., F(n+J,k)`.
pub fn classic_zeilberger(f: &HyperTerm, n: Var, max_order: usize) -> Result<ZeilbergerRecurrence> {
    let rho = quotient(&f.shift(n, 1)?, f)?;
    for order in 1..=max_order {
        let mut members = vec![f.clone()];
        let mut quotients = vec![RationalFunction::one()];
        let mut acc = RationalFunction::one();
        for i in 1..=order {
            acc = &acc * &rho.shift(n, &Rational::from_integer((i as i64 - 1).into()));
            quotients.push(acc.clone());
            members.push(f.shift(n, i as i64)?);
        }
        let family = SimilarFamily::from_quotients(members, quotients)?;
        let problem = TelescopeProblem::from_family(family);
        match extended_telescope(&problem) {
            Ok(sol) => {
                let cert = sol.first_certificate()?;
                let coeffs = content_normalize(&cert.coeffs);
                let scale = &RationalFunction::from_poly(
                    coeffs.iter().find(|p| !p.is_zero()).cloned().unwrap(),
                ) / cert.coeffs.iter().find(|c| !c.is_zero()).unwrap();
                let certificate = Certificate {
                    kind: cert.kind,
                    coeffs: cert.coeffs.iter().map(|c| c * &scale).collect(),
                    g_multiplier: &cert.g_multiplier * &scale,
                };
                return Ok(ZeilbergerRecurrence {
                    order,
                    coeffs,
                    certificate,
                    problem,
                });
            }
            Err(Error::OnlyTrivial) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::OrderExceeded(max_order))
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*S{}", i + 1))
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> RationalFunction {
        RationalFunction::var(Var::new(name))
    }

    fn p(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    fn int(c: i64) -> RationalFunction {
        RationalFunction::integer(c)
    }

    fn half(c: i64) -> RationalFunction {
        RationalFunction::constant(Rational::new(c.into(), 2.into()))
    }

    /// Terms of `H_n(x) = Σ_k (2x)^n (-n/2)_k (-(n-1)/2)_k / k! (-1/x^2)^k`.
    fn hermite(shift: i64) -> HyperTerm {
        let n = &v("n") + &int(shift);
        let np = &p("n") + &Polynomial::integer(shift);
        HyperTerm::one(Kind::Ordinary)
            .with_power(&int(2) * &v("x"), np)
            .with_pochhammer(-&(&n * &half(1)), p("k"), 1)
            .with_pochhammer(-&(&(&n - &int(1)) * &half(1)), p("k"), 1)
            .over_factorial(p("k"))
            .with_power(-&(&int(1) / &(&v("x") * &v("x"))), p("k"))
    }

    fn hermite_problem() -> TelescopeProblem {
        TelescopeProblem::new(vec![
            hermite(0).mul_rational(&v("x")),
            hermite(1),
            hermite(0),
            hermite(-1),
        ])
        .unwrap()
    }

    #[test]
    fn hermite_space() {
        let sol = extended_telescope(&hermite_problem()).unwrap();
        assert_eq!(sol.free_coefficients(), vec![0, 1]);
        let cert = sol.symbolic_certificate().unwrap();
        let (v1, v2) = (v("v1"), v("v2"));
        assert_eq!(cert.coeffs[0], v1);
        assert_eq!(cert.coeffs[1], v2);
        assert_eq!(cert.coeffs[2], -&(&v("x") * &(&v1 + &(&int(2) * &v2))));
        assert_eq!(cert.coeffs[3], &(&int(2) * &v("n")) * &v2);
        let g = &(&int(-4) * &(&v("k") * &v2)) / &(&(&v("n") + &int(1)) - &(&int(2) * &v("k")));
        assert_eq!(cert.g_multiplier, g);
    }

    #[test]
    fn hermite_frozen() {
        let sol = extended_telescope(&hermite_problem())
            .unwrap()
            .restrict(&[Var::new("x")])
            .unwrap();
        assert_eq!(sol.free_coefficients(), vec![0]);
        let cert = sol.symbolic_certificate().unwrap();
        let v1 = v("v1");
        assert_eq!(cert.coeffs[1], -&(&v1 * &half(1)));
        assert!(cert.coeffs[2].is_zero());
        assert_eq!(cert.coeffs[3], -&(&v("n") * &v1));
        let rel = sum_relation(&sol.first_certificate().unwrap()).unwrap();
        assert_eq!(rel.solved_for_first(1).unwrap(), half(1));
        assert!(rel.solved_for_first(2).unwrap().is_zero());
        assert_eq!(rel.solved_for_first(3).unwrap(), v("n"));
        assert!(rel.boundary_terms_assumed_zero);
    }

    #[test]
    fn zero_instantiation() {
        let sol = extended_telescope(&hermite_problem())
            .unwrap()
            .restrict(&[Var::new("x")])
            .unwrap();
        let cert = sol.certificate(&HashMap::new()).unwrap();
        assert_eq!(sum_relation(&cert), Err(Error::AllZero));
    }

    #[test]
    fn cancelling_pair() {
        let f = hermite(0);
        let sol = extended_telescope(&TelescopeProblem::new(vec![f.clone(), f.mul_rational(&int(-1))]).unwrap())
            .unwrap();
        let cert = sol.first_certificate().unwrap();
        assert_eq!(cert.coeffs[0], cert.coeffs[1]);
        assert!(cert.g_multiplier.is_zero());
    }

    #[test]
    fn empty_freeze_is_identity() {
        let sol = extended_telescope(&hermite_problem()).unwrap();
        let same = sol.restrict(&[]).unwrap();
        assert_eq!(same.space, sol.space);
    }

    #[test]
    fn binomial_recurrence() {
        // C(n,k) = (-1)^k (-n)_k / k!
        let f = HyperTerm::one(Kind::Ordinary)
            .with_power(int(-1), p("k"))
            .with_pochhammer(-&v("n"), p("k"), 1)
            .over_factorial(p("k"));
        let rec = classic_zeilberger(&f, Var::new("n"), 3).unwrap();
        assert_eq!(rec.order, 1);
        assert_eq!(rec.coeffs, vec![Polynomial::integer(2), Polynomial::integer(-1)]);
    }

    #[test]
    fn squared_binomial_recurrence() {
        let f = HyperTerm::one(Kind::Ordinary)
            .with_power(int(-1), p("k"))
            .with_pochhammer(-&v("n"), p("k"), 1)
            .over_factorial(p("k"));
        let f2 = f.mul(&f);
        let rec = classic_zeilberger(&f2, Var::new("n"), 3).unwrap();
        assert_eq!(rec.order, 1);
        let two_n_one = &(&p("n") * &Polynomial::integer(4)) + &Polynomial::integer(2);
        assert_eq!(rec.coeffs, vec![two_n_one, -&(&p("n") + &Polynomial::one())]);
    }

    #[test]
    fn n_free_summand() {
        let f = HyperTerm::one(Kind::Ordinary).over_factorial(p("k"));
        let rec = classic_zeilberger(&f, Var::new("n"), 2).unwrap();
        assert_eq!(rec.order, 1);
        assert_eq!(rec.coeffs, vec![Polynomial::one(), Polynomial::integer(-1)]);
    }
}
