use std::collections::HashMap;

use proptest::prelude::*;

use hyperscope::field::gcd::{divides, gcd};
use hyperscope::field::linalg::nullspace_reduced;
use hyperscope::field::{nullspace, Matrix, SolutionSpace};
use hyperscope::gosper::gosper_sum;
use hyperscope::syntax::{parse_ratfn, parse_term};
use hyperscope::telescope::TelescopeProblem;
use hyperscope::terms::{quotient, ratio};
use hyperscope::verify::certificate_holds;
use hyperscope::{Kind, Polynomial, Rational, RationalFunction, Var};

fn var(name: &str) -> Polynomial {
    Polynomial::var(Var::new(name))
}

/// Sparse polynomials in `a, b, k` with small integer coefficients.
fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..=9, 0u32..=2, 0u32..=2, 0u32..=2), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Polynomial::zero(), |acc, (c, i, j, l)| {
            let m = &(&var("a").pow(i) * &var("b").pow(j)) * &var("k").pow(l);
            &acc + &m.scale(&Rational::from_integer(c.into()))
        })
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = HashMap<Var, Rational>> {
    (-20i64..=20, -20i64..=20, -20i64..=20).prop_map(|(a, b, k)| {
        [("a", a), ("b", b), ("k", k)]
            .into_iter()
            .map(|(n, v)| (Var::new(n), Rational::new(v.into(), 7.into())))
            .collect()
    })
}

fn at(p: &Polynomial, pt: &HashMap<Var, Rational>) -> Rational {
    p.eval::<Rational>(&mut |v| pt.get(&v).cloned()).unwrap()
}

/// Matrices with entries of degree at most one in `a`.
fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=3, 2usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-3i64..=3, -3i64..=3), c), r).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|(x, y)| &var("a").scale(&Rational::from_integer(x.into())) + &Polynomial::integer(y))
                        .collect()
                })
                .collect();
            Matrix::from_rows(rows, c)
        })
    })
}

fn basis(space: &SolutionSpace) -> Vec<Vec<RationalFunction>> {
    space
        .free
        .iter()
        .map(|&f| space.instantiate(&[(f, RationalFunction::one())].into()))
        .collect()
}

fn annihilates(m: &Matrix, v: &[RationalFunction]) -> bool {
    m.rows.iter().all(|row| {
        row.iter()
            .zip(v)
            .fold(RationalFunction::zero(), |acc, (e, x)| &acc + &x.mul_poly(e))
            .is_zero()
    })
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in nonzero_poly()) {
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in point()) {
        prop_assert_eq!(at(&(&p * &q), &pt), at(&p, &pt) * at(&q, &pt));
        prop_assert_eq!(at(&(&p + &q), &pt), at(&p, &pt) + at(&q, &pt));
    }

    #[test]
    fn shifts_compose(p in poly(), c in -5i64..=5) {
        let k = Var::new("k");
        let c = Rational::from_integer(c.into());
        prop_assert_eq!(p.shift(k, &c).shift(k, &-c.clone()), p);
    }

    #[test]
    fn gcd_is_a_common_divisor(p in nonzero_poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let (pr, qr) = (&p * &r, &q * &r);
        let g = gcd(&pr, &qr);
        prop_assert!(divides(&g, &pr));
        prop_assert!(divides(&g, &qr));
        prop_assert!(divides(&r, &g));
    }

    #[test]
    fn printing_round_trips(p in poly(), q in nonzero_poly()) {
        let r = RationalFunction::new(p, q).unwrap();
        prop_assert_eq!(parse_ratfn(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn nullspace_basis_is_annihilated(m in matrix()) {
        let order: Vec<usize> = (0..m.cols).collect();
        let plain = nullspace(&m, &order);
        let reduced = nullspace_reduced(&m, &order);
        prop_assert_eq!(plain.dimension(), reduced.dimension());
        for v in basis(&plain).iter().chain(&basis(&reduced)) {
            prop_assert!(annihilates(&m, v));
        }
    }
}

/// A nonconstant term built from Pochhammer symbols with safe arguments.
fn summable_source() -> impl Strategy<Value = (bool, String)> {
    let arg = prop_oneof![
        Just("a".to_string()),
        (1i64..=3).prop_map(|c| format!("(a+{c})")),
        (1i64..=9, 1i64..=4).prop_map(|(p, d)| format!("({p}/{d})")),
    ];
    (any::<bool>(), prop::collection::vec((arg, any::<bool>()), 1..=3), 2i64..=5).prop_map(|(q, factors, z)| {
        let name = if q { "qpoch" } else { "poch" };
        let mut parts: Vec<String> = factors
            .into_iter()
            .map(|(a, up)| if up { format!("{name}({a},k)") } else { format!("1/{name}({a},k)") })
            .collect();
        parts.push(format!("(1/{z})^k"));
        (q, parts.join("*"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn differences_are_gosper_summable((q, src) in summable_source()) {
        let kind = if q { Kind::Q } else { Kind::Ordinary };
        let t = parse_term(&src, kind).unwrap();
        let r = ratio(&t).unwrap();
        let diff = t.mul_rational(&(&r - &RationalFunction::one()));
        let cert = gosper_sum(&diff).unwrap();
        let problem = TelescopeProblem::new(vec![diff]).unwrap();
        prop_assert!(certificate_holds(&problem, &cert));
    }

    #[test]
    fn terms_print_and_parse_back((q, src) in summable_source()) {
        let kind = if q { Kind::Q } else { Kind::Ordinary };
        let t = parse_term(&src, kind).unwrap();
        let back = parse_term(&t.to_string(), kind).unwrap();
        prop_assert!(quotient(&back, &t).unwrap().is_one());
    }
}
