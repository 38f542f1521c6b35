use super::{Member, Op, PolynomialFamily};
use crate::error::{Error, Result};
use crate::field::{Polynomial, RationalFunction, Var};
use crate::telescope::{
    content_normalize, extended_telescope, sum_relation, Relation, TelescopeProblem,
};
use crate::terms::{quotient, HyperTerm};

/// `factor · lhs = Σ coeffs_j · rhs_j`, derived from a telescoping relation.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub factor: RationalFunction,
    pub lhs: Member,
    pub rhs: Vec<Member>,
    pub coeffs: Vec<RationalFunction>,
    pub relation: Relation,
    pub problem: TelescopeProblem,
}

impl Derivation {
    pub fn alpha(&self) -> &RationalFunction {
        &self.coeffs[0]
    }

    pub fn beta(&self) -> &RationalFunction {
        &self.coeffs[1]
    }

    pub fn gamma(&self) -> &RationalFunction {
        &self.coeffs[2]
    }
}

/// Solves `f_1 = Σ c_j f_{j+1}` with `c_j` free of `freeze`, where
/// `f_1 = factor · lhs`.
pub fn solve_relation(
    fam: &PolynomialFamily,
    factor: &RationalFunction,
    lhs: Member,
    rhs: Vec<Member>,
    freeze: &[Var],
) -> Result<Derivation> {
    let mut members = vec![fam.member(&lhs)?.mul_rational(factor)];
    for m in &rhs {
        members.push(fam.member(m)?);
    }
    let problem = TelescopeProblem::new(members)?.with_freeze(freeze);
    let relation = solve_members(&problem)?;
    let coeffs = (1..=rhs.len())
        .map(|i| relation.solved_for_first(i).ok_or(Error::OnlyTrivial))
        .collect::<Result<_>>()?;
    Ok(Derivation {
        factor: factor.clone(),
        lhs,
        rhs,
        coeffs,
        relation,
        problem,
    })
}

fn solve_members(problem: &TelescopeProblem) -> Result<Relation> {
    let sol = extended_telescope(problem)?;
    sum_relation(&sol.first_certificate()?)
}

fn neighbours(op: Op) -> Vec<Member> {
    (0..3)
        .map(|j| Member {
            shift: 1 - j,
            op,
            params: Vec::new(),
        })
        .collect()
}

/// `λ P_n = α P_{n+1} + β P_n + γ P_{n-1}`, `λ` the family multiplier.
pub fn three_term(fam: &PolynomialFamily) -> Result<Derivation> {
    solve_relation(
        fam,
        &fam.multiplier,
        Member::value(0),
        neighbours(Op::Value),
        &[fam.argument],
    )
}

/// `σ P'_n = a P_{n+1} + b P_n + c P_{n-1}`.
pub fn structure_sigma(fam: &PolynomialFamily, sigma: &RationalFunction) -> Result<Derivation> {
    if sigma.is_zero() {
        return Err(Error::Invalid("sigma must be nonzero".into()));
    }
    solve_relation(
        fam,
        sigma,
        Member::derivative(0),
        neighbours(Op::Value),
        &[fam.argument],
    )
}

/// `λ P'_n = α P'_{n+1} + β P'_n + γ P'_{n-1}`.
pub fn derivative_three_term(fam: &PolynomialFamily) -> Result<Derivation> {
    solve_relation(
        fam,
        &fam.multiplier,
        Member::derivative(0),
        neighbours(Op::Derivative),
        &[fam.argument],
    )
}

/// `P_n = ā P'_{n+1} + b̄ P'_n + c̄ P'_{n-1}`.
pub fn structure_inverse(fam: &PolynomialFamily) -> Result<Derivation> {
    solve_relation(
        fam,
        &RationalFunction::one(),
        Member::value(0),
        neighbours(Op::Derivative),
        &[fam.argument],
    )
}

/// `P_n` at shifted parameters in terms of `P'_{n+1}, P'_n, P'_{n-1}`.
pub fn param_shift_relation(
    fam: &PolynomialFamily,
    shift: &[(Var, RationalFunction)],
) -> Result<Derivation> {
    let params: Vec<(Var, RationalFunction)> = shift
        .iter()
        .map(|(v, s)| (*v, &RationalFunction::var(*v) + s))
        .collect();
    solve_relation(
        fam,
        &RationalFunction::one(),
        Member::value(0).with_params(&params),
        neighbours(Op::Derivative),
        &[fam.argument],
    )
}

/// Recurrence `a_{m-1} C_{m-1}(n) + b_m C_m(n) + c_{m+1} C_{m+1}(n) = 0`
/// for the coefficients of `src_n` in the basis `dst_m`.
#[derive(Clone, Debug)]
pub struct ConnectionRecurrence {
    /// Coefficients of `src_n(x)`, `src_n(x+1)`, `src_n(x-1)` in the
    /// annihilating operator.
    pub operator: Vec<Polynomial>,
    /// `a_m`, `b_m`, `c_m` with `S_m = a_m P_{m+1} + b_m P_m + c_m P_{m-1}`
    /// and `P_m = dst_m(x+1) - dst_m(x)`.
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub c: RationalFunction,
}

fn stage<T>(i: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Stage {
        stage: i,
        source: Box::new(e),
    })
}

/// Connection coefficients of `src` in terms of `dst`. The degree symbol of
/// `dst` must differ from that of `src`; the argument is shared. Reading
/// off coefficients assumes the basis `dst_m(x+1) - dst_m(x)` is linearly
/// independent; this is not checked.
pub fn connection_recurrence(
    src: &PolynomialFamily,
    dst: &PolynomialFamily,
) -> Result<ConnectionRecurrence> {
    let x = src.argument;
    if dst.degree == src.degree {
        return Err(Error::Invalid("source and target need distinct degree symbols".into()));
    }
    let shifts = [0i64, 1, -1];
    let operator = stage(1, (|| {
        let base = src.term(0)?;
        let members = shifts
            .iter()
            .map(|&s| base.shift(x, s))
            .collect::<Result<Vec<_>>>()?;
        TelescopeProblem::new(members)
            .and_then(|p| extended_telescope(&p))
            .and_then(|sol| sol.first_certificate())
            .map(|cert| content_normalize(&cert.coeffs))
    })())?;
    let combined = stage(2, (|| {
        let base = dst.term(0)?;
        let mut factor = RationalFunction::zero();
        for (&s, c) in shifts.iter().zip(&operator) {
            let r = quotient(&base.shift(x, s)?, &base)?;
            factor = &factor + &r.mul_poly(c);
        }
        Ok::<HyperTerm, Error>(base.mul_rational(&factor))
    })())?;
    let derivation = stage(3, (|| {
        let mut members = vec![combined];
        for s in [1, 0, -1] {
            members.push(dst.member(&Member {
                shift: s,
                op: Op::Difference,
                params: Vec::new(),
            })?);
        }
        TelescopeProblem::new(members).and_then(|p| solve_members(&p.with_freeze(&[x])))
    })())?;
    let coeff = |i| derivation.solved_for_first(i).ok_or(Error::Stage {
        stage: 3,
        source: Box::new(Error::OnlyTrivial),
    });
    Ok(ConnectionRecurrence {
        operator,
        a: coeff(1)?,
        b: coeff(2)?,
        c: coeff(3)?,
    })
}

/// Default `σ` for structure relations, where one is known.
pub fn default_sigma(fam: &PolynomialFamily) -> Option<RationalFunction> {
    match fam.name.as_str() {
        "jacobi" => {
            let x = RationalFunction::var(fam.argument);
            Some(&RationalFunction::one() - &(&x * &x))
        }
        _ => None,
    }
}
