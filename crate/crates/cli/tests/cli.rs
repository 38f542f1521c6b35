use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

use hyperscope::catalog::{connection_recurrence, family, param_shift_relation, three_term};
use hyperscope::gosper::gosper_sum;
use hyperscope::syntax::{parse_ratfn, parse_term_at, parse_terms_file};
use hyperscope::telescope::{extended_telescope, sum_relation, TelescopeProblem};
use hyperscope::{Kind, RationalFunction, Var};
use hyperscope_cli::{render, run, Output};

fn cli(args: &[&str]) -> Output {
    run(std::iter::once("hyperscope").chain(args.iter().copied()))
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares with a stored file; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, want, "golden file {name} differs");
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn expr(s: &str) -> RationalFunction {
    parse_ratfn(s).unwrap()
}

const HERMITE: &str = "tests/data/hermite.terms";
const QHERMITE: &str = "tests/data/qhermite.terms";
const SUMS: &str = "tests/data/sums.terms";

#[test]
fn laguerre_recurrence_json() {
    let out = ok(&["recurrence", "--family", "laguerre", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["relation"], json!({"alpha": "1", "beta": "a+2*n+1", "gamma": "n*(a+n)"}));
    for key in ["inputs", "solution_space", "certificate", "relation", "report"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc.as_object().unwrap().len(), 5);
    golden("recurrence_laguerre.json", &out);
}

#[test]
fn hermite_space_json() {
    let out = ok(&["telescope", "--terms-file", HERMITE, "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let space = &doc["solution_space"];
    assert_eq!(space["dimension"], 2);
    let want = ["v1", "v2", "-x*(v1+2*v2)", "2*n*v2"];
    for (got, w) in space["coefficients"].as_array().unwrap().iter().zip(want) {
        assert_eq!(expr(got.as_str().unwrap()), expr(w));
    }
    let g = expr(space["g_multiplier"].as_str().unwrap());
    assert_eq!(g, expr("-4*k*v2/(n+1-2*k)"));
    golden("telescope_hermite.json", &out);
}

#[test]
fn hermite_frozen_latex() {
    let out = ok(&["telescope", "--terms-file", HERMITE, "--freeze", "x", "--format", "latex"]);
    assert!(out.contains("S_{1} = \\frac{1}{2} S_{2} + n S_{4}"), "{out}");
    assert_latex_shape(&out);
    golden("telescope_hermite_frozen.tex", &out);
}

#[test]
fn q_hermite_text() {
    let out = ok(&["telescope", "--kind", "q", "--freeze", "x", "--terms-file", QHERMITE, "--check"]);
    assert!(out.contains("passed=true"));
    golden("telescope_qhermite.txt", &out);
}

#[test]
fn structure_and_shift_outputs() {
    golden("structure_jacobi.txt", &ok(&["structure", "--family", "jacobi"]));
    golden(
        "param_shift_jacobi.json",
        &ok(&["param-shift", "--family", "jacobi", "--shift", "a=1,b=-1", "--format", "json"]),
    );
    let out = ok(&["structure", "--family", "qhermite1", "--sigma", "1", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(expr(doc["relation"]["c"].as_str().unwrap()), expr("(1-q^n)/(1-q)"));
}

#[test]
fn connection_text() {
    let out = ok(&[
        "connection",
        "--from",
        "meixner",
        "--to",
        "meixner",
        "--from-rename",
        "b=gamma,c=mu",
        "--to-rename",
        "b=delta,c=nu",
    ]);
    golden("connection_meixner.txt", &out);
}

#[test]
fn gosper_json() {
    let out = ok(&["gosper", "--terms-file", SUMS, "--format", "json", "--check"]);
    let docs: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 3);
    assert!(docs.iter().all(|d| d["report"]["passed"] == json!(true)));
    assert_eq!(expr(docs[2]["certificate"]["g_multiplier"].as_str().unwrap()), expr("(k-1)^2/(4*k)"));
    golden("gosper_sums.json", &out);
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let doc = ok(&["telescope", "--terms-file", HERMITE, "--freeze", "x", "--format", "json"]);
    let path = dir.path().join("hermite.json");
    fs::write(&path, &doc).unwrap();
    let p = path.to_str().unwrap();
    let out = cli(&["verify", "--problem", p, "--certificate", p, "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["report"]["symbolic_ok"], json!(true));
    assert_eq!(report["report"]["numeric_trials"], json!(20));

    let mut bad: Value = serde_json::from_str(&doc).unwrap();
    bad["certificate"]["coeffs"][3] = json!("-n+1");
    let bad_path = dir.path().join("bad.json");
    fs::write(&bad_path, bad.to_string()).unwrap();
    let out = cli(&["verify", "--problem", p, "--certificate", bad_path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, 1);
    let report: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["report"]["symbolic_ok"], json!(false));
    assert!(!report["report"]["numeric_failures"].as_array().unwrap().is_empty());
}

#[test]
fn catalog_certificates_verify_from_json() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["hermite", "jacobi", "krawtchouk", "pollaczek", "qhermite1"] {
        let doc = ok(&["recurrence", "--family", name, "--format", "json"]);
        let path = dir.path().join(format!("{name}.json"));
        fs::write(&path, doc).unwrap();
        let p = path.to_str().unwrap();
        let out = cli(&["verify", "--problem", p, "--certificate", p]);
        assert_eq!(out.code, 0, "{name}: {}{}", out.stdout, out.stderr);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["gosper", "--term", "fact(k)"]).code, 1);
    assert_eq!(cli(&["gosper", "--term", "poch(a,k"]).code, 2);
    assert_eq!(cli(&["gosper", "--term", "poch(k,k)"]).code, 2);
    assert_eq!(cli(&["recurrence", "--family", "legendre"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["telescope", "--terms-file", "tests/data/missing.terms"]).code, 2);
    assert_eq!(cli(&["structure", "--family", "hermite"]).code, 2);
    let syntax = cli(&["gosper", "--term", "poch(a,k"]);
    assert!(syntax.stderr.contains("1:9"), "{}", syntax.stderr);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn only_trivial_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.terms");
    fs::write(&path, "fact(k)\n").unwrap();
    let out = cli(&["telescope", "--terms-file", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("trivial"));
}

#[test]
fn output_is_deterministic() {
    let args = ["recurrence", "--family", "hermite,laguerre,charlier,meixner", "--format", "json", "--check"];
    let a = ok(&args);
    let b = ok(&args);
    assert_eq!(a, b);
    let mut par = args.to_vec();
    par.extend(["--jobs", "4"]);
    assert_eq!(ok(&par), a);
    let docs: Vec<Value> = serde_json::from_str(&a).unwrap();
    let names: Vec<&str> = docs.iter().map(|d| d["inputs"]["family"].as_str().unwrap()).collect();
    assert_eq!(names, ["hermite", "laguerre", "charlier", "meixner"]);
}

#[test]
fn seed_changes_only_the_trials() {
    let a = ok(&["gosper", "--term", "k*fact(k)", "--check", "--seed", "1", "--format", "json"]);
    let b = ok(&["gosper", "--term", "k*fact(k)", "--check", "--seed", "2", "--format", "json"]);
    assert_eq!(a, b);
}

const MACROS: &[&str] = &[
    "documentclass",
    "usepackage",
    "begin",
    "end",
    "noindent",
    "texttt",
    "frac",
    "left",
    "right",
    "Delta",
    "to",
    "text",
    "eta",
    "alpha",
    "beta",
    "gamma",
    "delta",
    "lambda",
    "mu",
    "nu",
    "xi",
    "sigma",
];

fn assert_latex_shape(doc: &str) {
    assert!(doc.starts_with("\\documentclass{article}"));
    assert!(doc.trim_end().ends_with("\\end{document}"));
    let mut depth = 0i64;
    let mut chars = doc.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\\' => {
                let mut name = String::new();
                while let Some(&n) = chars.peek() {
                    if n.is_ascii_alphabetic() {
                        name.push(n);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if name.is_empty() {
                    chars.next();
                } else {
                    assert!(MACROS.contains(&name.as_str()), "unknown macro \\{name}");
                }
            }
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                assert!(depth >= 0, "unbalanced braces");
            }
            _ => {}
        }
    }
    assert_eq!(depth, 0, "unbalanced braces");
    assert_eq!(doc.matches("\\left").count(), doc.matches("\\right").count());
}

#[test]
fn latex_is_well_formed() {
    let runs: [&[&str]; 6] = [
        &["recurrence", "--family", "all"],
        &["structure", "--family", "jacobi", "--variant", "inverse"],
        &["param-shift", "--family", "jacobi", "--shift", "a=-1,b=1"],
        &["connection", "--from", "meixner", "--to", "meixner", "--from-rename", "b=gamma,c=mu", "--to-rename", "b=delta,c=nu"],
        &["gosper", "--terms-file", SUMS, "--check"],
        &["telescope", "--kind", "q", "--terms-file", QHERMITE],
    ];
    for args in runs {
        let mut a = args.to_vec();
        a.extend(["--format", "latex", "--jobs", "4"]);
        assert_latex_shape(&ok(&a));
    }
}

/// The documents come from library calls alone; the command line only
/// parses arguments and picks the renderer.
#[test]
fn goldens_reproduce_from_the_library() {
    let fam = family("laguerre").unwrap();
    let d = three_term(&fam).unwrap();
    let item = render::derivation_item("recurrence", &fam, &d, ["alpha", "beta", "gamma"]);
    assert_eq!(render::to_json(&[item]), fs::read_to_string(golden_path("recurrence_laguerre.json")).unwrap());

    let src = fs::read_to_string(HERMITE).unwrap();
    let lines: Vec<String> = src
        .lines()
        .map(|l| l.split('#').next().unwrap().trim().to_string())
        .filter(|l| !l.is_empty())
        .collect();
    let problem = TelescopeProblem::new(parse_terms_file(&src, Kind::Ordinary).unwrap())
        .unwrap()
        .with_freeze(&[Var::new("x")]);
    let sol = extended_telescope(&problem).unwrap();
    let symbolic = sol.symbolic_certificate().unwrap();
    let rel = sum_relation(&sol.first_certificate().unwrap()).unwrap();
    let item = render::telescope_item(HERMITE, &lines, &problem, &sol, &symbolic, &rel);
    assert_eq!(
        render::to_latex(&[item]),
        fs::read_to_string(golden_path("telescope_hermite_frozen.tex")).unwrap()
    );

    let m = family("meixner").unwrap();
    let src_fam = m.renamed(&[("b", "gamma"), ("c", "mu")]).unwrap();
    let dst_fam = m.renamed(&[("b", "delta"), ("c", "nu"), ("n", "m")]).unwrap();
    let r = connection_recurrence(&src_fam, &dst_fam).unwrap();
    assert_eq!(
        render::to_text(&[render::connection_item(&src_fam, &dst_fam, &r)]),
        fs::read_to_string(golden_path("connection_meixner.txt")).unwrap()
    );

    let j = family("jacobi").unwrap();
    let shift = [
        (Var::new("a"), RationalFunction::integer(1)),
        (Var::new("b"), RationalFunction::integer(-1)),
    ];
    let d = param_shift_relation(&j, &shift).unwrap();
    let item = render::derivation_item("param-shift", &j, &d, ["a", "b", "c"]);
    assert_eq!(render::to_json(&[item]), fs::read_to_string(golden_path("param_shift_jacobi.json")).unwrap());

    let t = parse_term_at("k^3", Kind::Ordinary, 3).unwrap();
    let cert = gosper_sum(&t).unwrap();
    let json = render::to_json(&[render::gosper_item("k^3", Kind::Ordinary, &cert)]);
    let stored: Vec<Value> = serde_json::from_str(&fs::read_to_string(golden_path("gosper_sums.json")).unwrap()).unwrap();
    let mut last = stored[2].clone();
    last["report"] = Value::Null;
    assert_eq!(serde_json::from_str::<Value>(&json).unwrap(), last);
}

#[test]
fn degree_cap_from_environment() {
    let bin = env!("CARGO_BIN_EXE_hyperscope");
    let run = |cap: &str| {
        Command::new(bin)
            .args(["gosper", "--term", "k^3"])
            .env("HYPERSCOPE_MAX_DEGREE", cap)
            .output()
            .unwrap()
    };
    let capped = run("2");
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("exceeds the limit 2"));
    let open = run("64");
    assert_eq!(open.status.code(), Some(0));
}
