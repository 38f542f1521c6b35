//! Human-readable and LaTeX rendering.
//!
//! Terms print in graded order with variables compared alphabetically, so
//! `2*n+a+1` prints as `a+2*n+1`. Rational functions print partially
//! factored: contents are pulled out variable by variable until nothing
//! more splits off.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use super::gcd::{content_in, gcd};
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::symbol::Var;
use super::unipoly::UniPoly;
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

fn display_key(m: &Monomial) -> Vec<(String, u32)> {
    let mut key: Vec<(String, u32)> = m.iter().map(|(v, e)| (v.name(), e)).collect();
    key.sort();
    key
}

fn display_cmp(a: &[(String, u32)], b: &[(String, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|t| t.1).sum();
    let db: u32 = b.iter().map(|t| t.1).sum();
    if da != db {
        return db.cmp(&da);
    }
    let names: BTreeSet<&String> = a.iter().chain(b).map(|t| &t.0).collect();
    for name in names {
        let ea = a.iter().find(|t| &t.0 == name).map_or(0, |t| t.1);
        let eb = b.iter().find(|t| &t.0 == name).map_or(0, |t| t.1);
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

fn var_power(name: &str, e: u32, style: Style) -> String {
    match style {
        Style::Plain => {
            if let Some(rest) = name.strip_prefix("q^") {
                if e == 1 {
                    name.to_string()
                } else {
                    format!("q^({e}*{rest})")
                }
            } else if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        }
        Style::Latex => {
            if let Some(rest) = name.strip_prefix("q^") {
                if e == 1 {
                    format!("q^{{{rest}}}")
                } else {
                    format!("q^{{{e}{rest}}}")
                }
            } else {
                let base = latex_name(name);
                if e == 1 {
                    base
                } else {
                    format!("{base}^{{{e}}}")
                }
            }
        }
    }
}

fn latex_name(name: &str) -> String {
    match name {
        "eta" => "\\eta".into(),
        "alpha" | "beta" | "gamma" | "delta" | "lambda" | "mu" | "xi" | "sigma" => {
            format!("\\{name}")
        }
        _ => name.to_string(),
    }
}

fn monomial_string(key: &[(String, u32)], style: Style) -> String {
    let sep = if style == Style::Plain { "*" } else { " " };
    key.iter()
        .map(|(n, e)| var_power(n, *e, style))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Renders one term with a positive coefficient `c`.
fn term_string(c: &Rational, key: &[(String, u32)], style: Style) -> String {
    let mono = monomial_string(key, style);
    let num = c.numer().to_string();
    let den = c.denom();
    match style {
        Style::Plain => {
            let mut s = if mono.is_empty() {
                num
            } else if c.numer().is_one() {
                mono
            } else {
                format!("{num}*{mono}")
            };
            if !den.is_one() {
                s = format!("{s}/{den}");
            }
            s
        }
        Style::Latex => {
            let top = if mono.is_empty() {
                num
            } else if c.numer().is_one() {
                mono
            } else {
                format!("{num} {mono}")
            };
            if den.is_one() {
                top
            } else {
                format!("\\frac{{{top}}}{{{den}}}")
            }
        }
    }
}

fn render(p: &Polynomial, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(Vec<(String, u32)>, &Rational)> =
        p.terms().iter().map(|(m, c)| (display_key(m), c)).collect();
    terms.sort_by(|a, b| display_cmp(&a.0, &b.0));
    let mut out = String::new();
    for (i, (key, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(&term_string(&c.abs(), key, style));
    }
    out
}

pub fn poly_to_string(p: &Polynomial) -> String {
    render(p, Style::Plain)
}

pub fn poly_to_latex(p: &Polynomial) -> String {
    render(p, Style::Latex)
}

fn leading_in_display(p: &Polynomial) -> Rational {
    p.terms()
        .iter()
        .map(|(m, c)| (display_key(m), c))
        .min_by(|a, b| display_cmp(&a.0, &b.0))
        .map(|t| t.1.clone())
        .unwrap_or_else(Rational::zero)
}

/// Splits `p` into a rational constant and a list of nonconstant factors
/// with multiplicities. Each factor is integer-primitive with a positive
/// display-leading coefficient. The split is not a full factorization.
pub fn partial_factors(p: &Polynomial) -> (Rational, Vec<(Polynomial, u32)>) {
    if p.is_zero() {
        return (Rational::zero(), Vec::new());
    }
    let (mut constant, pp) = p.primitive();
    let mut done: Vec<Polynomial> = Vec::new();
    let mut work = vec![pp];
    while let Some(f) = work.pop() {
        if f.is_constant() {
            constant *= f.as_constant().unwrap();
            continue;
        }
        if f.is_monomial() {
            let (m, c) = f.leading().unwrap().clone();
            constant *= c;
            for (v, e) in m.iter() {
                for _ in 0..e {
                    done.push(Polynomial::var(v));
                }
            }
            continue;
        }
        let split = f
            .vars()
            .into_iter()
            .find_map(|v| {
                let c = content_in(&f, v);
                (!c.is_constant()).then_some(c)
            })
            .or_else(|| {
                f.vars().into_iter().find_map(|v| {
                    let g = gcd(&f, &f.derivative(v));
                    (!g.is_constant()).then_some(g)
                })
            });
        match split {
            Some(c) => {
                let rest = f.div_exact(&c).expect("content divides");
                work.push(c);
                work.push(rest);
            }
            None => match linear_factor(&f) {
                Some(l) => {
                    let rest = f.div_exact(&l).expect("checked factor");
                    work.push(l);
                    work.push(rest);
                }
                None => done.push(f),
            },
        }
    }
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    for f in done {
        let (c, mut f) = f.primitive();
        constant *= c;
        if leading_in_display(&f).is_negative() {
            f = -f;
            constant = -constant;
        }
        match factors.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 += 1,
            None => factors.push((f, 1)),
        }
    }
    factors.sort_by_cached_key(|(f, _)| {
        (f.total_degree(), f.len(), poly_to_string(f))
    });
    (constant, factors)
}

/// A factor `v - L(others)` with `L` affine, read off from rational roots
/// in `v` at a base point and at points moved along each other symbol, and
/// confirmed by exact division.
fn linear_factor(f: &Polynomial) -> Option<Polynomial> {
    const MAX_COMBINATIONS: usize = 64;
    if f.len() > 200 || f.total_degree() > 12 {
        return None;
    }
    let vars = f.vars();
    for &v in &vars {
        if f.degree(v) < 2 || !f.lc_in(v).is_constant() {
            continue;
        }
        let others: Vec<Var> = vars.iter().copied().filter(|&w| w != v).collect();
        let base: HashMap<Var, Rational> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, Rational::from_integer((5 + 6 * i as i64).into())))
            .collect();
        let roots_at = |step: Option<(Var, i64)>| -> Vec<Rational> {
            let mut pt = base.clone();
            if let Some((w, h)) = step {
                *pt.get_mut(&w).unwrap() += Rational::from_integer(h.into());
            }
            UniPoly::from_poly(&f.partial_eval(&pt), v).map_or_else(Vec::new, |u| u.rational_roots())
        };
        let moved: Vec<(Vec<Rational>, Vec<Rational>)> =
            others.iter().map(|&w| (roots_at(Some((w, 1))), roots_at(Some((w, 2))))).collect();
        for r0 in roots_at(None) {
            let slopes: Vec<Vec<Rational>> = moved
                .iter()
                .map(|(r1, r2)| {
                    r1.iter()
                        .map(|r| r - &r0)
                        .filter(|c| r2.contains(&(&r0 + c * Rational::from_integer(2.into()))))
                        .collect()
                })
                .collect();
            if slopes.iter().map(Vec::len).product::<usize>() > MAX_COMBINATIONS {
                continue;
            }
            let mut pick = vec![0usize; slopes.len()];
            'combos: loop {
                if slopes.iter().any(Vec::is_empty) {
                    break;
                }
                let mut candidate = &Polynomial::var(v) - &Polynomial::constant(r0.clone());
                for ((w, cs), &i) in others.iter().zip(&slopes).zip(&pick) {
                    let moved_w = &Polynomial::var(*w) - &Polynomial::constant(base[w].clone());
                    candidate = &candidate - &moved_w.scale(&cs[i]);
                }
                if f.div_exact(&candidate).is_some() {
                    return Some(candidate);
                }
                for (i, cs) in pick.iter_mut().zip(&slopes) {
                    *i += 1;
                    if *i < cs.len() {
                        continue 'combos;
                    }
                    *i = 0;
                }
                break;
            }
        }
    }
    None
}

fn product_string(factors: &[(Polynomial, u32)], style: Style) -> String {
    let sep = if style == Style::Plain { "*" } else { " " };
    factors
        .iter()
        .map(|(f, e)| {
            let body = render(f, style);
            let wrapped = if f.len() > 1 {
                match style {
                    Style::Plain => format!("({body})"),
                    Style::Latex => format!("\\left({body}\\right)"),
                }
            } else {
                body
            };
            match (e, style) {
                (1, _) => wrapped,
                (e, Style::Plain) => format!("{wrapped}^{e}"),
                (e, Style::Latex) => format!("{wrapped}^{{{e}}}"),
            }
        })
        .collect::<Vec<_>>()
        .join(sep)
}

fn ratfn_render(num: &Polynomial, den: &Polynomial, style: Style) -> String {
    if num.is_zero() {
        return "0".into();
    }
    let (cn, fnum) = partial_factors(num);
    let (cd, fden) = partial_factors(den);
    let c = cn / cd;
    let neg = c.is_negative();
    let c = c.abs();
    let sign = if neg { "-" } else { "" };
    let top_const = Rational::from_integer(c.numer().clone());
    let bottom_const = Rational::from_integer(c.denom().clone());

    let sep = if style == Style::Plain { "*" } else { " " };
    let top = {
        let body = if style == Style::Latex && top_const.is_one() && fnum.len() == 1 && fnum[0].1 == 1 {
            render(&fnum[0].0, style)
        } else {
            product_string(&fnum, style)
        };
        match (top_const.is_one(), body.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => body,
            (false, true) => top_const.to_string(),
            (false, false) => format!("{top_const}{sep}{body}"),
        }
    };
    let bottom = {
        let body = if style == Style::Latex && bottom_const.is_one() && fden.len() == 1 && fden[0].1 == 1 {
            render(&fden[0].0, style)
        } else {
            product_string(&fden, style)
        };
        match (bottom_const.is_one(), body.is_empty()) {
            (true, true) => String::new(),
            (true, false) => body,
            (false, true) => bottom_const.to_string(),
            (false, false) => format!("{bottom_const}{sep}{body}"),
        }
    };
    if bottom.is_empty() {
        let bare = fnum.len() == 1 && fnum[0].1 == 1 && fnum[0].0.len() > 1 && top_const.is_one();
        return if bare && neg {
            render(&-&fnum[0].0, style)
        } else if bare {
            render(&fnum[0].0, style)
        } else {
            format!("{sign}{top}")
        };
    }
    match style {
        Style::Plain => {
            let single = fden.is_empty()
                || (bottom_const.is_one() && fden.len() == 1 && (fden[0].0.len() > 1 || fden[0].1 == 1));
            let bottom = if single { bottom } else { format!("({bottom})") };
            format!("{sign}{top}/{bottom}")
        }
        Style::Latex => format!("{sign}\\frac{{{top}}}{{{bottom}}}"),
    }
}

pub fn ratfn_to_string(num: &Polynomial, den: &Polynomial) -> String {
    ratfn_render(num, den, Style::Plain)
}

pub fn ratfn_to_latex(num: &Polynomial, den: &Polynomial) -> String {
    ratfn_render(num, den, Style::Latex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::symbol::Var;

    fn v(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    #[test]
    fn graded_alphabetical_order() {
        let p = &(&v("n").scale(&Rational::from_integer(2.into())) + &v("a")) + &Polynomial::one();
        assert_eq!(poly_to_string(&p), "a+2*n+1");
        let p = &(&v("k") * &v("k")) - &v("a");
        assert_eq!(poly_to_string(&p), "k^2-a");
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(poly_to_string(&v("n").scale(&half)), "n/2");
    }

    #[test]
    fn negated_sum_keeps_signs() {
        let p = -&(&v("n") + &Polynomial::one());
        assert_eq!(ratfn_to_string(&p, &Polynomial::one()), "-n-1");
        assert_eq!(ratfn_to_latex(&p, &Polynomial::one()), "-n-1");
        let p = &Polynomial::one() - &v("n");
        assert_eq!(ratfn_to_string(&p, &Polynomial::one()), "-n+1");
    }

    #[test]
    fn factored_rational_functions() {
        let n = v("n");
        let a = v("a");
        let num = &n * &(&a + &n);
        assert_eq!(ratfn_to_string(&num, &Polynomial::one()), "n*(a+n)");
        let den = Polynomial::integer(2);
        assert_eq!(ratfn_to_string(&(&a + &n), &den), "(a+n)/2");
        let num = -(&(&n + &Polynomial::one()) * &(&n + &Polynomial::one()));
        let den = &n * &(&a + &n);
        assert_eq!(ratfn_to_string(&num, &den), "-(n+1)^2/(n*(a+n))");
        assert_eq!(ratfn_to_latex(&(&n + &Polynomial::one()), &a), "\\frac{n+1}{a}");
    }
}
