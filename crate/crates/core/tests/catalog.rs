use hyperscope::catalog::{
    connection_recurrence, default_sigma, derivative_three_term, family, param_shift_relation,
    structure_inverse, structure_sigma, three_term, Derivation,
};
use hyperscope::syntax::parse_ratfn;
use hyperscope::{RationalFunction, Var};

fn expr(src: &str) -> RationalFunction {
    parse_ratfn(src).unwrap()
}

fn assert_coeffs(d: &Derivation, expected: [&str; 3]) {
    for (got, want) in d.coeffs.iter().zip(expected) {
        assert_eq!(*got, expr(want), "expected {want}, got {got}");
    }
}

fn table_row(name: &str, beta: &str, gamma: &str) {
    let d = three_term(&family(name).unwrap()).unwrap();
    assert_coeffs(&d, ["1", beta, gamma]);
}

#[test]
fn laguerre_row() {
    table_row("laguerre", "a+2*n+1", "n*(a+n)");
}

#[test]
fn jacobi_row() {
    table_row(
        "jacobi",
        "-(a-b)*(a+b)/((2*n+2+a+b)*(2*n+a+b))",
        "4*(n+b)*(a+n)*(n+a+b)*n/((2*n+a+b+1)*(2*n+a+b-1)*(2*n+a+b)^2)",
    );
}

#[test]
fn charlier_row() {
    table_row("charlier", "a+n", "a*n");
}

#[test]
fn meixner_row() {
    table_row("meixner", "(c*b+n*c+n)/(1-c)", "n*c*(b+n-1)/(c-1)^2");
}

#[test]
fn krawtchouk_row() {
    table_row("krawtchouk", "N*p-2*n*p+n", "p*n*(1-p)*(N-n+1)");
}

#[test]
fn hahn_row() {
    table_row(
        "hahn",
        "((b+a+2*n^2+2*n+2*n*b+2*n*a+a^2+a*b)*N-n*(a-b)*(n+a+b+1))/((2*n+a+b)*(2*n+2+a+b))",
        "n*(N-n+1)*(n+b)*(a+n)*(n+a+b)*(a+b+N+1+n)/((2*n+a+b+1)*(2*n+a+b-1)*(2*n+a+b)^2)",
    );
}

#[test]
fn hermite_recurrence() {
    let d = three_term(&family("hermite").unwrap()).unwrap();
    assert_coeffs(&d, ["1/2", "0", "n"]);
}

#[test]
fn wilson() {
    let d = three_term(&family("wilson").unwrap()).unwrap();
    let s = "(a+b+c+d)";
    assert_coeffs(
        &d,
        [
            &format!("-({s}+n-1)/(({s}+2*n)*({s}+2*n-1))"),
            &format!(
                "(4*n^2-4*(1-{s})*n+{s}^2-2*(a^2+b^2+c^2+d^2))/8 \
                 + ({s}-2)*(a+b-c-d)*(a+c-b-d)*(a+d-b-c)/(8*({s}+2*n)*({s}+2*n-2))"
            ),
            &format!(
                "-(a+b+n-1)*(a+c+n-1)*(a+d+n-1)*(b+c+n-1)*(b+d+n-1)*(c+d+n-1)*n\
                 /(({s}+2*n-1)*({s}+2*n-2))"
            ),
        ],
    );
}

#[test]
fn racah() {
    let d = three_term(&family("racah").unwrap()).unwrap();
    assert_coeffs(
        &d,
        [
            "(a+n+1)*(c+n+1)*(a+b+n+1)*(d+b+n+1)/((a+b+2*n+1)*(a+b+2*n+2))",
            "(-4*n^2-4*(a+b+1)*n+(a-2*d-b-2-2*c)*(a-b))/8 - (c+1)*(b+d+1)/2 \
             - (a-b)*(a+b)*(a-2*d-b)*(a-2*c+b)/(8*(a+b+2*n)*(a+b+2*n+2))",
            "(b+n)*(a-d+n)*(a+b-c+n)*n/((a+b+2*n)*(a+b+2*n+1))",
        ],
    );
}

#[test]
fn askey_wilson() {
    let d = three_term(&family("askey-wilson").unwrap()).unwrap();
    let e = "(a*b*c*d)";
    let s1 = "(a+b+c+d)";
    let s3 = "(b*c*d+a*c*d+a*b*d+a*b*c)";
    assert_coeffs(
        &d,
        [
            &format!("(1-{e}*q^(n-1))/(2*(1-{e}*q^(2*n))*(1-{e}*q^(2*n-1)))"),
            &format!(
                "q^(n-1)*({e}*q^(2*n-1)+1)*({s1}*q+{s3})/(2*(1-{e}*q^(2*n))*(1-{e}*q^(2*n-2))) \
                 - q^(2*n-2)*(1+q)*({s3}*q+{e}*{s1})/(2*(1-{e}*q^(2*n))*(1-{e}*q^(2*n-2)))"
            ),
            &format!(
                "(1-q^n)*(1-a*b*q^(n-1))*(1-a*c*q^(n-1))*(1-a*d*q^(n-1))*(1-b*c*q^(n-1))\
                 *(1-b*d*q^(n-1))*(1-c*d*q^(n-1))/(2*(1-{e}*q^(2*n-1))*(1-{e}*q^(2*n-2)))"
            ),
        ],
    );
}

#[test]
fn q_racah() {
    let d = three_term(&family("qracah").unwrap()).unwrap();
    assert_coeffs(
        &d,
        [
            "(1-a*q^(n+1))*(1-a*b*q^(n+1))*(1-b*d*q^(n+1))*(1-c*q^(n+1))\
             /((1-a*b*q^(2*n+1))*(1-a*b*q^(2*n+2)))",
            "q^(n+1)*(a*b*q^(2*n+1)+1)*(c+b*c*d+d*c+a+b*d+a*b+c*a+a*b*d)\
             /((1-a*b*q^(2*n))*(1-a*b*q^(2*n+2))) \
             - q^(2*n+1)*(1+q)*(a*b^2*d+a*b*c*d+c*a+b*c*d+a*b*d+a*b+a*b*c+a^2*b)\
             /((1-a*b*q^(2*n))*(1-a*b*q^(2*n+2)))",
            "(1-q^n)*(1-b*q^n)*(c-a*b*q^n)*(d-a*q^n)*q/((1-a*b*q^(2*n))*(1-a*b*q^(2*n+1)))",
        ],
    );
}

#[test]
fn pollaczek() {
    let d = three_term(&family("pollaczek").unwrap()).unwrap();
    assert_coeffs(&d, ["(a*n+b)/((1+a)*n+b)", "0", "n/((1+a)*n+b)"]);
}

#[test]
fn q_hermite_relations() {
    let f = family("qhermite1").unwrap();
    let d = derivative_three_term(&f).unwrap();
    assert_coeffs(&d, ["(1-q^n)/(1-q^(n+1))", "0", "q^(n-2)*(1-q^n)"]);
    let d = structure_sigma(&f, &RationalFunction::one()).unwrap();
    assert_coeffs(&d, ["0", "0", "(1-q^n)/(1-q)"]);
    let d = structure_inverse(&f).unwrap();
    assert_coeffs(&d, ["(1-q)/(1-q^(n+1))", "0", "0"]);
}

#[test]
fn jacobi_structure() {
    let f = family("jacobi").unwrap();
    let d = derivative_three_term(&f).unwrap();
    assert_coeffs(
        &d,
        [
            "n/(n+1)",
            "-(a+2+b)*(a-b)/((2*n+2+a+b)*(2*n+a+b))",
            "4*n*(b+n)*(a+n)*(n+a+b+1)/((2*n+a+b+1)*(2*n+a+b-1)*(2*n+a+b)^2)",
        ],
    );
    let d = structure_sigma(&f, &default_sigma(&f).unwrap()).unwrap();
    assert_coeffs(
        &d,
        [
            "-n",
            "2*n*(a-b)*(n+a+b+1)/((2*n+2+a+b)*(2*n+a+b))",
            "4*(n+b)*(a+n)*(n+a+b+1)*(n+a+b)*n/((2*n+a+b+1)*(2*n+a+b-1)*(2*n+a+b)^2)",
        ],
    );
    let d = structure_inverse(&f).unwrap();
    assert_coeffs(
        &d,
        [
            "1/(n+1)",
            "2*(a-b)/((2*n+2+a+b)*(2*n+a+b))",
            "-4*(n+b)*(a+n)*n/((2*n+a+b+1)*(2*n+a+b-1)*(2*n+a+b)^2)",
        ],
    );
}

fn shift(pairs: &[(&str, i64)]) -> Vec<(Var, RationalFunction)> {
    pairs
        .iter()
        .map(|&(v, s)| (Var::new(v), RationalFunction::integer(s)))
        .collect()
}

#[test]
fn jacobi_parameter_shifts() {
    let f = family("jacobi").unwrap();
    let cases: [(&[(&str, i64)], [&str; 3]); 4] = [
        (
            &[("a", 1)],
            ["1/(n+1)", "2*(a+1+n)/((2*n+2+a+b)*(2*n+a+b+1))", "0"],
        ),
        (
            &[("b", 1)],
            ["1/(n+1)", "-2*(b+1+n)/((2*n+2+a+b)*(2*n+a+b+1))", "0"],
        ),
        (
            &[("a", 1), ("b", -1)],
            [
                "1/(n+1)",
                "4*(a+1+n)/((2*n+2+a+b)*(2*n+a+b))",
                "4*(a+1+n)*(a+n)*n/((2*n+a+b-1)*(2*n+a+b+1)*(2*n+a+b)^2)",
            ],
        ),
        (
            &[("a", -1), ("b", 1)],
            [
                "1/(n+1)",
                "-4*(b+1+n)/((2*n+2+a+b)*(2*n+a+b))",
                "4*(b+1+n)*(b+n)*n/((2*n+a+b-1)*(2*n+a+b+1)*(2*n+a+b)^2)",
            ],
        ),
    ];
    for (s, want) in cases {
        let d = param_shift_relation(&f, &shift(s)).unwrap();
        assert_coeffs(&d, want);
    }
}

#[test]
fn identity_shift_is_structure_inverse() {
    let f = family("jacobi").unwrap();
    let a = param_shift_relation(&f, &shift(&[("a", 0)])).unwrap();
    let b = structure_inverse(&f).unwrap();
    assert_eq!(a.coeffs, b.coeffs);
}

#[test]
fn meixner_connection() {
    let m = family("meixner").unwrap();
    let src = m.renamed(&[("b", "gamma"), ("c", "mu")]).unwrap();
    let dst = m.renamed(&[("b", "delta"), ("c", "nu"), ("n", "m")]).unwrap();
    let r = connection_recurrence(&src, &dst).unwrap();
    let op: Vec<RationalFunction> = r.operator.iter().map(|p| RationalFunction::from_poly(p.clone())).collect();
    let want = [
        expr("x*mu+mu*gamma+x-n+n*mu"),
        expr("-mu*(gamma+x)"),
        expr("-x"),
    ];
    let scale = &op[0] / &want[0];
    for (got, w) in op.iter().zip(&want) {
        assert_eq!(*got, &scale * w);
    }
    let scale = RationalFunction::one().checked_div(&scale).unwrap();
    assert_eq!(&r.a * &scale, expr("(mu-1)*(n-m)/(m+1)"));
    assert_eq!(
        &r.b * &scale,
        expr("(-nu*mu*m-m*mu+2*m*nu+nu*mu*gamma-nu*n+nu*delta-nu+mu-nu*mu*delta-mu*gamma+nu*n*mu)/(1-nu)")
    );
    assert_eq!(&r.c * &scale, expr("(nu-mu)*(delta+m-1)*m*nu/(1-nu)^2"));
}

#[test]
fn self_connection_is_diagonal() {
    let m = family("meixner").unwrap();
    let src = m.renamed(&[("b", "delta"), ("c", "nu")]).unwrap();
    let dst = m.renamed(&[("b", "delta"), ("c", "nu"), ("n", "m")]).unwrap();
    let r = connection_recurrence(&src, &dst).unwrap();
    let at_n: std::collections::HashMap<Var, RationalFunction> =
        [(Var::new("m"), RationalFunction::var(Var::new("n")))].into();
    assert!(r.b.subst(&at_n).unwrap().is_zero());
}

mod oracle {
    use super::*;
    use hyperscope::catalog::{PolynomialFamily, NAMES};
    use hyperscope::verify::{verify_certificate, verify_relation_numeric, Trials};

    fn check(fam: &PolynomialFamily, d: &Derivation, top: i64) {
        let cert = verify_certificate(&d.problem, &d.relation.certificate);
        assert!(cert.passed(20), "{}: {cert:?}", fam.name);
        let trials = Trials { count: 3, seed: 11 };
        let r = verify_relation_numeric(fam, d, 1..=top, trials).unwrap();
        assert_eq!(r.numeric_trials, 3 * top as usize, "{}", fam.name);
        assert!(r.numeric_ok(), "{}: {:?}", fam.name, r.numeric_failures);
    }

    #[test]
    fn three_term_relations_hold() {
        for name in NAMES {
            let fam = family(name).unwrap();
            let d = three_term(&fam).unwrap();
            check(&fam, &d, if fam.parameters.len() >= 4 { 4 } else { 6 });
        }
    }

    #[test]
    fn structure_relations_hold() {
        let f = family("jacobi").unwrap();
        check(&f, &derivative_three_term(&f).unwrap(), 6);
        check(&f, &structure_sigma(&f, &default_sigma(&f).unwrap()).unwrap(), 6);
        check(&f, &structure_inverse(&f).unwrap(), 6);
        check(&f, &param_shift_relation(&f, &shift(&[("a", 1), ("b", -1)])).unwrap(), 6);
        let h = family("hermite").unwrap();
        check(&h, &structure_inverse(&h).unwrap(), 6);
        let q = family("qhermite1").unwrap();
        check(&q, &derivative_three_term(&q).unwrap(), 5);
        check(&q, &structure_inverse(&q).unwrap(), 5);
    }
}
