use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde_json::Value;

use hyperscope::catalog::{
    connection_recurrence, default_sigma, derivative_three_term, family, param_shift_relation, structure_inverse,
    structure_sigma, three_term, Derivation, PolynomialFamily, NAMES,
};
use hyperscope::gosper::gosper_sum;
use hyperscope::syntax::{parse_ratfn, parse_term_at};
use hyperscope::telescope::{extended_telescope, sum_relation, Certificate, TelescopeProblem};
use hyperscope::verify::{verify_certificate_with, Trials, DEFAULT_SEED, DEFAULT_TRIALS};
use hyperscope::{Error, Kind, RationalFunction, Var};

use crate::args::{Cli, Command, Global, KindArg, Variant};
use crate::render::{self, problem_value, Item};
use crate::{exit_code, EXIT_NO_SOLUTION, EXIT_OK, EXIT_USAGE};

/// Items in input order, error messages, and the overall exit status.
pub struct Batch {
    pub items: Vec<Item>,
    pub errors: Vec<String>,
    pub code: i32,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn lib(context: &str, e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: format!("{context}: {e}"),
        }
    }
}

type Job<'a> = Box<dyn Fn() -> Result<Item, Failure> + Send + Sync + 'a>;

pub fn dispatch(cli: &Cli) -> Batch {
    let g = &cli.global;
    let jobs: Vec<Job> = match build_jobs(&cli.command, g) {
        Ok(j) => j,
        Err(f) => {
            return Batch {
                items: Vec::new(),
                errors: vec![f.message],
                code: f.code,
            }
        }
    };
    let results: Vec<Result<Item, Failure>> = jobs.par_iter().map(|j| j()).collect();
    let mut batch = Batch {
        items: Vec::new(),
        errors: Vec::new(),
        code: EXIT_OK,
    };
    for r in results {
        match r {
            Ok(item) => {
                if item.doc.report.as_ref().is_some_and(|r| r["passed"] != Value::Bool(true)) {
                    batch.code = batch.code.max(EXIT_NO_SOLUTION);
                }
                batch.items.push(item);
            }
            Err(f) => {
                batch.code = batch.code.max(f.code);
                batch.errors.push(f.message);
            }
        }
    }
    batch
}

fn kind(g: &Global) -> Kind {
    match g.kind {
        KindArg::Ordinary => Kind::Ordinary,
        KindArg::Q => Kind::Q,
    }
}

fn vars(names: &[String]) -> Vec<Var> {
    names
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(Var::new)
        .collect()
}

fn trials(g: &Global) -> Trials {
    Trials {
        count: DEFAULT_TRIALS,
        seed: g.seed.unwrap_or(DEFAULT_SEED),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn families(names: &[String]) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    for n in names {
        let n = n.trim();
        if n == "all" {
            out.extend(NAMES.iter().map(|s| s.to_string()));
        } else if NAMES.contains(&n) {
            out.push(n.to_string());
        } else {
            return Err(Failure::lib("family", Error::UnknownFamily(n.to_string())));
        }
    }
    Ok(out)
}

/// `name=value` pairs.
fn pairs(items: &[String]) -> Result<Vec<(String, String)>, Failure> {
    items
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.split_once('=')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| Failure::usage(format!("expected name=value, got {s}")))
        })
        .collect()
}

fn checked(mut item: Item, g: &Global, problem: &TelescopeProblem, cert: &Certificate) -> Item {
    if g.check {
        let t = trials(g);
        let report = verify_certificate_with(problem, cert, t);
        item.doc.report = Some(render::report_value(&report, t.count));
    }
    item
}

fn derivation_job<'a>(
    g: &'a Global,
    name: String,
    command: &'a str,
    names: [&'a str; 3],
    derive: impl Fn(&PolynomialFamily) -> hyperscope::Result<Derivation> + Send + Sync + 'a,
) -> Job<'a> {
    Box::new(move || {
        let fam = family(&name).map_err(|e| Failure::lib(&name, e))?;
        let d = derive(&fam).map_err(|e| Failure::lib(&name, e))?;
        let item = render::derivation_item(command, &fam, &d, names);
        Ok(checked(item, g, &d.problem, &d.relation.certificate))
    })
}

/// Non-empty lines of a terms file with comments removed.
fn term_lines(src: &str) -> Vec<String> {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

fn build_jobs<'a>(cmd: &'a Command, g: &'a Global) -> Result<Vec<Job<'a>>, Failure> {
    let mut jobs: Vec<Job> = Vec::new();
    match cmd {
        Command::Telescope { terms_file } => {
            for path in terms_file {
                jobs.push(Box::new(move || {
                    let name = path.display().to_string();
                    let src = read(path)?;
                    let terms = hyperscope::syntax::parse_terms_file(&src, kind(g))
                        .map_err(|e| Failure::lib(&name, e))?;
                    let problem = TelescopeProblem::new(terms)
                        .map_err(|e| Failure::lib(&name, e))?
                        .with_freeze(&vars(&g.freeze));
                    let run = || -> hyperscope::Result<Item> {
                        let sol = extended_telescope(&problem)?;
                        let symbolic = sol.symbolic_certificate()?;
                        let relation = sum_relation(&sol.first_certificate()?)?;
                        let item =
                            render::telescope_item(&name, &term_lines(&src), &problem, &sol, &symbolic, &relation);
                        Ok(checked(item, g, &problem, &relation.certificate))
                    };
                    run().map_err(|e| Failure::lib(&name, e))
                }));
            }
        }
        Command::Recurrence(f) => {
            for name in families(&f.family)? {
                jobs.push(derivation_job(g, name, "recurrence", ["alpha", "beta", "gamma"], three_term));
            }
        }
        Command::Structure {
            families: f,
            sigma,
            variant,
        } => {
            let sigma = match sigma {
                Some(s) => Some(parse_ratfn(s).map_err(|e| Failure::lib("sigma", e))?),
                None => None,
            };
            for name in families(&f.family)? {
                let sigma = sigma.clone();
                let variant = *variant;
                jobs.push(derivation_job(g, name, "structure", ["a", "b", "c"], move |fam| match variant {
                    Variant::Sigma => {
                        let s = sigma.clone().or_else(|| default_sigma(fam)).ok_or_else(|| {
                            Error::Invalid(format!("{} has no default sigma; pass --sigma", fam.name))
                        })?;
                        structure_sigma(fam, &s)
                    }
                    Variant::Inverse => structure_inverse(fam),
                    Variant::Derivative => derivative_three_term(fam),
                }));
            }
        }
        Command::ParamShift { families: f, shift } => {
            let shifts: Vec<(Var, RationalFunction)> = pairs(shift)?
                .into_iter()
                .map(|(v, s)| Ok((Var::new(&v), parse_ratfn(&s).map_err(|e| Failure::lib("shift", e))?)))
                .collect::<Result<_, Failure>>()?;
            for name in families(&f.family)? {
                let shifts = shifts.clone();
                jobs.push(derivation_job(g, name, "param-shift", ["a", "b", "c"], move |fam| {
                    param_shift_relation(fam, &shifts)
                }));
            }
        }
        Command::Connection {
            from,
            to,
            from_rename,
            to_rename,
        } => {
            let from_map = pairs(from_rename)?;
            let mut to_map = pairs(to_rename)?;
            if !to_map.iter().any(|(a, _)| a == "n") {
                to_map.push(("n".into(), "m".into()));
            }
            jobs.push(Box::new(move || {
                let rename = |name: &str, map: &[(String, String)]| {
                    let refs: Vec<(&str, &str)> = map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                    family(name).and_then(|f| f.renamed(&refs)).map_err(|e| Failure::lib(name, e))
                };
                let src = rename(from, &from_map)?;
                let dst = rename(to, &to_map)?;
                let r = connection_recurrence(&src, &dst).map_err(|e| Failure::lib("connection", e))?;
                Ok(render::connection_item(&src, &dst, &r))
            }));
        }
        Command::Gosper { term, terms_file } => {
            let mut sources: Vec<(String, usize)> = term.iter().map(|t| (t.clone(), 1)).collect();
            for path in terms_file {
                let src = read(path)?;
                for (i, line) in src.lines().enumerate() {
                    let body = line.split('#').next().unwrap_or("").trim();
                    if !body.is_empty() {
                        sources.push((body.to_string(), i + 1));
                    }
                }
            }
            if sources.is_empty() {
                return Err(Failure::usage("gosper needs --term or --terms-file"));
            }
            for (src, line) in sources {
                jobs.push(Box::new(move || {
                    let t = parse_term_at(&src, kind(g), line).map_err(|e| Failure::lib(&src, e))?;
                    let problem = TelescopeProblem::new(vec![t.clone()]).map_err(|e| Failure::lib(&src, e))?;
                    let cert = gosper_sum(&t).map_err(|e| Failure::lib(&src, e))?;
                    Ok(checked(render::gosper_item(&src, kind(g), &cert), g, &problem, &cert))
                }));
            }
        }
        Command::Verify {
            problem,
            certificate,
            trials: count,
        } => {
            jobs.push(Box::new(move || {
                let pdoc = read_json(problem)?;
                let cdoc = read_json(certificate)?;
                let (pv, p) = load_problem(&pdoc)?;
                let cert = load_certificate(&cdoc, p.kind())?;
                let t = Trials {
                    count: *count,
                    seed: g.seed.unwrap_or(DEFAULT_SEED),
                };
                let report = verify_certificate_with(&p, &cert, t);
                Ok(render::verify_item(pv, &cert, &report, t.count))
            }));
        }
    }
    Ok(jobs)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let src = read(path)?;
    serde_json::from_str(&src).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn strings_at<'v>(v: &'v Value, key: &str) -> Result<Vec<&'v str>, Failure> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| x.as_str().ok_or_else(|| Failure::usage(format!("{key} must hold strings"))))
            .collect(),
        Some(_) => Err(Failure::usage(format!("{key} must be an array"))),
    }
}

/// Accepts a bare problem, a document's inputs, or a certificate's problem.
fn load_problem(doc: &Value) -> Result<(Value, TelescopeProblem), Failure> {
    let v = [&doc["terms"], &doc["inputs"]["terms"], &doc["certificate"]["problem"]["terms"]]
        .iter()
        .position(|t| t.is_array())
        .map(|i| match i {
            0 => doc,
            1 => &doc["inputs"],
            _ => &doc["certificate"]["problem"],
        })
        .ok_or_else(|| Failure::usage("problem: no terms found"))?;
    let kind = match v["kind"].as_str().unwrap_or("ordinary") {
        "ordinary" => Kind::Ordinary,
        "q" => Kind::Q,
        other => return Err(Failure::usage(format!("problem: unknown kind {other}"))),
    };
    let sources: Vec<String> = strings_at(v, "terms")?.into_iter().map(String::from).collect();
    let freeze: Vec<Var> = strings_at(v, "freeze")?.into_iter().map(Var::new).collect();
    let terms = sources
        .iter()
        .enumerate()
        .map(|(i, s)| parse_term_at(s, kind, i + 1))
        .collect::<hyperscope::Result<Vec<_>>>()
        .map_err(|e| Failure::lib("problem", e))?;
    let p = TelescopeProblem::new(terms)
        .map_err(|e| Failure::lib("problem", e))?
        .with_freeze(&freeze);
    Ok((problem_value(kind, &sources, &freeze), p))
}

fn load_certificate(doc: &Value, kind: Kind) -> Result<Certificate, Failure> {
    let v = if doc["coeffs"].is_array() { doc } else { &doc["certificate"] };
    let coeffs = strings_at(v, "coeffs")?
        .into_iter()
        .map(parse_ratfn)
        .collect::<hyperscope::Result<Vec<_>>>()
        .map_err(|e| Failure::lib("certificate", e))?;
    if coeffs.is_empty() {
        return Err(Failure::usage("certificate: no coefficients found"));
    }
    let g = v["g_multiplier"]
        .as_str()
        .ok_or_else(|| Failure::usage("certificate: missing g_multiplier"))?;
    let g_multiplier = parse_ratfn(g).map_err(|e| Failure::lib("certificate", e))?;
    Ok(Certificate {
        kind,
        coeffs,
        g_multiplier,
    })
}
