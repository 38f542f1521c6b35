//! Documents built from library results, and their text and LaTeX forms.

use serde::Serialize;
use serde_json::{json, Map, Value};

use hyperscope::catalog::{ConnectionRecurrence, Derivation, Member, Op, PolynomialFamily};
use hyperscope::telescope::{Certificate, Relation, TelescopeProblem, TelescopeSolution};
use hyperscope::verify::VerificationReport;
use hyperscope::{Gaussian, HyperTerm, Kind, Polynomial, RationalFunction, Var};

/// The schema shared by every command.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Document {
    pub inputs: Value,
    pub solution_space: Option<Value>,
    pub certificate: Option<Value>,
    pub relation: Option<Value>,
    pub report: Option<Value>,
}

#[derive(Clone, Debug)]
pub struct Label {
    pub text: String,
    pub latex: String,
}

impl Label {
    fn new(text: impl Into<String>, latex: impl Into<String>) -> Self {
        Label {
            text: text.into(),
            latex: latex.into(),
        }
    }
}

/// `lhs = Σ coeff · label`; an absent left side reads as zero.
#[derive(Clone, Debug)]
pub struct Equation {
    pub lhs: Option<(RationalFunction, Label)>,
    pub rhs: Vec<(RationalFunction, Label)>,
}

/// A document together with what the text and LaTeX views show.
#[derive(Clone, Debug)]
pub struct Item {
    pub title: String,
    pub doc: Document,
    pub equation: Option<Equation>,
    pub extras: Vec<(Label, RationalFunction)>,
}

pub fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Ordinary => "ordinary",
        Kind::Q => "q",
    }
}

fn strings(rs: &[RationalFunction]) -> Vec<String> {
    rs.iter().map(|r| r.to_string()).collect()
}

fn var_names(vs: &[Var]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

/// `{kind, terms, freeze}`, the form `verify` reads back.
pub fn problem_value(kind: Kind, terms: &[String], freeze: &[Var]) -> Value {
    json!({
        "kind": kind_name(kind),
        "terms": terms,
        "freeze": var_names(freeze),
    })
}

fn problem_of(p: &TelescopeProblem) -> Value {
    let terms: Vec<String> = p.family.members.iter().map(HyperTerm::to_string).collect();
    problem_value(p.kind(), &terms, &p.freeze)
}

pub fn certificate_value(problem: Value, cert: &Certificate, summed: bool) -> Value {
    json!({
        "problem": problem,
        "coeffs": strings(&cert.coeffs),
        "g_multiplier": cert.g_multiplier.to_string(),
        "boundary_terms_assumed_zero": summed,
    })
}

fn gaussian(z: &Gaussian) -> String {
    use num_traits::Zero;
    if z.im.is_zero() {
        z.re.to_string()
    } else {
        format!("{}+({})*i", z.re, z.im)
    }
}

pub fn report_value(r: &VerificationReport, trials: usize) -> Value {
    let failures: Vec<Value> = r
        .numeric_failures
        .iter()
        .map(|f| {
            let assignment: Map<String, Value> = f
                .assignment
                .iter()
                .map(|(v, c)| (v.to_string(), Value::String(c.to_string())))
                .collect();
            json!({"assignment": assignment, "lhs": gaussian(&f.lhs), "rhs": gaussian(&f.rhs)})
        })
        .collect();
    json!({
        "passed": r.passed(trials),
        "symbolic_ok": r.symbolic_ok,
        "numeric_trials": r.numeric_trials,
        "numeric_failures": failures,
    })
}

fn sum_label(i: usize) -> Label {
    Label::new(format!("S{i}"), format!("S_{{{i}}}"))
}

fn shift_label(degree: Var, s: i64) -> String {
    match s {
        0 => degree.to_string(),
        s if s > 0 => format!("{degree}+{s}"),
        s => format!("{degree}{s}"),
    }
}

pub fn member_label(fam: &PolynomialFamily, m: &Member) -> Label {
    let idx = shift_label(fam.degree, m.shift);
    let (text, latex) = match (m.op, fam.kind) {
        (Op::Value, _) => (format!("P[{idx}]"), format!("P_{{{idx}}}")),
        (Op::Derivative, Kind::Ordinary) => (format!("P'[{idx}]"), format!("P'_{{{idx}}}")),
        (Op::Derivative, Kind::Q) => (format!("Dq P[{idx}]"), format!("D_q P_{{{idx}}}")),
        (Op::Difference, _) => (format!("Delta P[{idx}]"), format!("\\Delta P_{{{idx}}}")),
    };
    if m.params.is_empty() {
        return Label::new(text, latex);
    }
    let subs: Vec<(String, String)> = m
        .params
        .iter()
        .map(|(v, r)| (format!("{v}->{r}"), format!("{v}\\to {}", r.to_latex())))
        .collect();
    let t: Vec<&str> = subs.iter().map(|s| s.0.as_str()).collect();
    let l: Vec<&str> = subs.iter().map(|s| s.1.as_str()).collect();
    Label::new(
        format!("{text}{{{}}}", t.join(", ")),
        format!("\\left.{latex}\\right|_{{{}}}", l.join(",\\, ")),
    )
}

/// Document for `telescope`: the space, the summed certificate and its
/// relation.
pub fn telescope_item(
    name: &str,
    sources: &[String],
    problem: &TelescopeProblem,
    sol: &TelescopeSolution,
    symbolic: &Certificate,
    relation: &Relation,
) -> Item {
    let pv = problem_value(problem.kind(), sources, &problem.freeze);
    let mut inputs = pv.clone();
    inputs["source"] = Value::String(name.to_string());
    let free: Vec<usize> = sol.free_coefficients().iter().map(|f| f + 1).collect();
    let space = json!({
        "dimension": sol.dimension(),
        "free": free,
        "coefficients": strings(&symbolic.coeffs),
        "g_multiplier": symbolic.g_multiplier.to_string(),
    });
    let m = relation.coeffs.len();
    let equation = match relation.solved_for_first(1) {
        Some(_) => Equation {
            lhs: Some((RationalFunction::one(), sum_label(1))),
            rhs: (1..m)
                .map(|i| (relation.solved_for_first(i).unwrap(), sum_label(i + 1)))
                .collect(),
        },
        None => Equation {
            lhs: None,
            rhs: (0..m).map(|i| (relation.coeffs[i].clone(), sum_label(i + 1))).collect(),
        },
    };
    let mut extras: Vec<(Label, RationalFunction)> = symbolic
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (Label::new(format!("a{}", i + 1), format!("a_{{{}}}", i + 1)), c.clone()))
        .collect();
    extras.push((
        Label::new("g(k)/f1(k)", "g(k)/f_{1}(k)"),
        symbolic.g_multiplier.clone(),
    ));
    Item {
        title: name.to_string(),
        doc: Document {
            inputs,
            solution_space: Some(space),
            certificate: Some(certificate_value(pv, &relation.certificate, true)),
            relation: Some(json!({ "coeffs": strings(&relation.coeffs) })),
            report: None,
        },
        equation: Some(equation),
        extras,
    }
}

fn family_inputs(command: &str, fam: &PolynomialFamily) -> Value {
    json!({
        "command": command,
        "family": fam.name,
        "kind": kind_name(fam.kind),
        "parameters": var_names(&fam.parameters),
        "argument": fam.argument.to_string(),
        "degree": fam.degree.to_string(),
        "convention": fam.convention,
        "monic": fam.monic,
    })
}

/// Document for a derived three-term relation; `names` label the three
/// coefficients in the JSON output.
pub fn derivation_item(command: &str, fam: &PolynomialFamily, d: &Derivation, names: [&str; 3]) -> Item {
    let mut inputs = family_inputs(command, fam);
    inputs["lhs_factor"] = Value::String(d.factor.to_string());
    if !d.lhs.params.is_empty() {
        let shifted: Map<String, Value> = d
            .lhs
            .params
            .iter()
            .map(|(v, r)| (v.to_string(), Value::String(r.to_string())))
            .collect();
        inputs["parameters_of_lhs"] = Value::Object(shifted);
    }
    let mut relation = Map::new();
    for (n, c) in names.iter().zip(&d.coeffs) {
        relation.insert(n.to_string(), Value::String(c.to_string()));
    }
    let equation = Equation {
        lhs: Some((d.factor.clone(), member_label(fam, &d.lhs))),
        rhs: d
            .coeffs
            .iter()
            .zip(&d.rhs)
            .map(|(c, m)| (c.clone(), member_label(fam, m)))
            .collect(),
    };
    Item {
        title: format!("{command} {}", fam.name),
        doc: Document {
            inputs,
            solution_space: None,
            certificate: Some(certificate_value(
                problem_of(&d.problem),
                &d.relation.certificate,
                d.relation.boundary_terms_assumed_zero,
            )),
            relation: Some(Value::Object(relation)),
            report: None,
        },
        equation: Some(equation),
        extras: Vec::new(),
    }
}

pub fn connection_item(src: &PolynomialFamily, dst: &PolynomialFamily, r: &ConnectionRecurrence) -> Item {
    let operator: Vec<String> = r.operator.iter().map(Polynomial::to_string).collect();
    let inputs = json!({
        "command": "connection",
        "from": family_inputs("connection", src),
        "to": family_inputs("connection", dst),
    });
    let m = dst.degree;
    let labels = |s: i64| {
        let idx = shift_label(m, s);
        Label::new(format!("C[{idx}]"), format!("C_{{{idx}}}"))
    };
    let equation = Equation {
        lhs: None,
        rhs: vec![
            (r.a.shift(m, &hyperscope::Rational::from_integer((-1).into())), labels(-1)),
            (r.b.clone(), labels(0)),
            (r.c.shift(m, &hyperscope::Rational::from_integer(1.into())), labels(1)),
        ],
    };
    let x = src.argument;
    let extras = r
        .operator
        .iter()
        .zip([0i64, 1, -1])
        .map(|(p, s)| {
            let at = shift_label(x, s);
            (
                Label::new(format!("op[{at}]"), format!("\\text{{op}}_{{{at}}}")),
                RationalFunction::from_poly(p.clone()),
            )
        })
        .collect();
    Item {
        title: format!("connection {} -> {}", src.name, dst.name),
        doc: Document {
            inputs,
            solution_space: None,
            certificate: None,
            relation: Some(json!({
                "operator": operator,
                "a": r.a.to_string(),
                "b": r.b.to_string(),
                "c": r.c.to_string(),
            })),
            report: None,
        },
        equation: Some(equation),
        extras,
    }
}

pub fn gosper_item(source: &str, kind: Kind, cert: &Certificate) -> Item {
    let problem = problem_value(kind, &[source.to_string()], &[]);
    Item {
        title: format!("gosper {source}"),
        doc: Document {
            inputs: problem.clone(),
            solution_space: None,
            certificate: Some(certificate_value(problem, cert, false)),
            relation: None,
            report: None,
        },
        equation: None,
        extras: vec![(Label::new("g(k)/t(k)", "g(k)/t(k)"), cert.g_multiplier.clone())],
    }
}

pub fn verify_item(problem: Value, cert: &Certificate, report: &VerificationReport, trials: usize) -> Item {
    Item {
        title: "verify".to_string(),
        doc: Document {
            inputs: problem.clone(),
            solution_space: None,
            certificate: Some(certificate_value(problem, cert, false)),
            relation: None,
            report: Some(report_value(report, trials)),
        },
        equation: None,
        extras: Vec::new(),
    }
}

fn is_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

fn term(c: &RationalFunction, label: &str, latex: bool) -> Option<String> {
    if c.is_zero() {
        return None;
    }
    if c.is_one() {
        return Some(label.to_string());
    }
    let s = if latex { c.to_latex() } else { c.to_string() };
    let (open, close, sep) = if latex {
        ("\\left(", "\\right)", " ")
    } else {
        ("(", ")", "*")
    };
    if is_sum(&s) {
        Some(format!("{open}{s}{close}{sep}{label}"))
    } else {
        Some(format!("{s}{sep}{label}"))
    }
}

fn side(parts: &[(RationalFunction, Label)], latex: bool) -> String {
    let mut out = String::new();
    for (c, l) in parts {
        let label = if latex { &l.latex } else { &l.text };
        let Some(t) = term(c, label, latex) else { continue };
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {t}");
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl Equation {
    pub fn text(&self) -> String {
        let lhs = self.lhs.as_ref().map(|l| side(std::slice::from_ref(l), false));
        format!("{} = {}", lhs.unwrap_or_else(|| "0".into()), side(&self.rhs, false))
    }

    pub fn latex(&self) -> String {
        let lhs = self.lhs.as_ref().map(|l| side(std::slice::from_ref(l), true));
        format!("{} = {}", lhs.unwrap_or_else(|| "0".into()), side(&self.rhs, true))
    }
}

fn report_text(r: &Value) -> Vec<String> {
    let mut out = vec![format!(
        "report: passed={} symbolic_ok={} numeric_trials={} failures={}",
        r["passed"],
        r["symbolic_ok"],
        r["numeric_trials"],
        r["numeric_failures"].as_array().map_or(0, Vec::len)
    )];
    for f in r["numeric_failures"].as_array().into_iter().flatten() {
        out.push(format!("  at {}: lhs={} rhs={}", f["assignment"], f["lhs"], f["rhs"]));
    }
    out
}

pub fn to_text(items: &[Item]) -> String {
    let mut blocks = Vec::new();
    for it in items {
        let mut lines = vec![format!("# {}", it.title)];
        if let Some(e) = &it.equation {
            lines.push(e.text());
        }
        if let Some(space) = &it.doc.solution_space {
            lines.push(format!("dimension: {}", space["dimension"]));
        }
        for (l, r) in &it.extras {
            lines.push(format!("{} = {}", l.text, r));
        }
        if let Some(cert) = &it.doc.certificate {
            if it.doc.solution_space.is_some() {
                lines.push(format!("certificate g(k)/f1(k) = {}", cert["g_multiplier"].as_str().unwrap_or("")));
            }
        }
        if let Some(r) = &it.doc.report {
            lines.extend(report_text(r));
        }
        blocks.push(lines.join("\n"));
    }
    let mut out = blocks.join("\n\n");
    out.push('\n');
    out
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '_' | '#' | '%' | '&' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            '~' => out.push_str("\\~{}"),
            _ => out.push(ch),
        }
    }
    out
}

/// A standalone LaTeX document.
pub fn to_latex(items: &[Item]) -> String {
    let mut out = String::from("\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n");
    for it in items {
        out.push_str(&format!("\\noindent\\texttt{{{}}}\n", latex_escape(&it.title)));
        let mut rows = Vec::new();
        if let Some(e) = &it.equation {
            rows.push(e.latex());
        }
        for (l, r) in &it.extras {
            rows.push(format!("{} = {}", l.latex, r.to_latex()));
        }
        if !rows.is_empty() {
            out.push_str("\\begin{gather*}\n");
            out.push_str(&rows.join(" \\\\\n"));
            out.push_str("\n\\end{gather*}\n");
        }
        if let Some(r) = &it.doc.report {
            out.push_str(&format!(
                "\\noindent verification: {}\n\n",
                if r["passed"] == Value::Bool(true) { "passed" } else { "failed" }
            ));
        }
    }
    out.push_str("\\end{document}\n");
    out
}

/// One object for a single item, an array otherwise.
pub fn to_json(items: &[Item]) -> String {
    let v = if items.len() == 1 {
        serde_json::to_value(&items[0].doc)
    } else {
        serde_json::to_value(items.iter().map(|i| &i.doc).collect::<Vec<_>>())
    }
    .expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}
