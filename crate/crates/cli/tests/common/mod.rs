#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

pub fn catalog_file(id: &str) -> String {
    root().join("data/catalog").join(format!("{id}.halg")).display().to_string()
}

pub fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn homalg(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homalg").chain(args.iter().copied());
    let code = homalg_cli::run(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

/// Drops timings and replaces machine paths so records can be diffed.
pub fn normalize(text: &str, tmp: &Path) -> String {
    let paths = |s: &str| s.replace(&tmp.display().to_string(), "$TMP").replace(&root().display().to_string(), "$ROOT");
    text.lines()
        .map(|line| match serde_json::from_str::<Value>(line) {
            Ok(Value::Object(mut m)) => {
                m.remove("elapsed_us");
                paths(&Value::Object(m).to_string())
            }
            _ => paths(line),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// A CLI invocation with its expected exit code; `{tmp}` in an argument is the scratch directory.
pub struct Scenario {
    pub name: &'static str,
    pub steps: Vec<(Vec<String>, i32)>,
    /// Scratch files whose contents are part of the golden output.
    pub files: Vec<&'static str>,
}

fn step(args: &[&str], code: i32) -> (Vec<String>, i32) {
    (args.iter().map(|s| s.to_string()).collect(), code)
}

pub fn scenarios() -> Vec<Scenario> {
    let cat = catalog_file;
    let fx = fixture;
    let s = |name, steps, files| Scenario { name, steps, files };
    vec![
        s("check-twisted-trialgebra", vec![step(&["check", &cat("tri-example-2-3"), "--variety", "hom-associative-trialgebra"], 0)], vec![]),
        s(
            "check-tensor-square-rel-avg",
            vec![step(&["check", &cat("kx2.tensor-square.mult"), "--operator", "kx2.tensor-square.mult", "--kind", "rel-avg"], 0)],
            vec![],
        ),
        s(
            "check-projection-o-operator",
            vec![step(&["check", &cat("ut2.sum2.proj1"), "--operator", "ut2.sum2.proj1", "--kind", "o-operator", "--weight", "-1"], 0)],
            vec![],
        ),
        s("check-rep", vec![step(&["check", &cat("kx3.regular-action"), "--rep", "kx3.regular-action"], 0)], vec![]),
        s("check-perturbed", vec![step(&["check", &fx("perturbed.halg"), "--variety", "hom-associative"], 1)], vec![]),
        s(
            "check-perturbed-sampled",
            vec![step(&["check", &fx("perturbed.halg"), "--variety", "hom-associative", "--samples", "50", "--seed", "3"], 1)],
            vec![],
        ),
        s(
            "check-crossed-module",
            vec![step(&["check", &cat("kx2.sum2.proj1"), "--crossed-module", "d=kx2.sum2.proj1"], 1)],
            vec![],
        ),
        s("parse-dimension", vec![step(&["check", &fx("bad-index.halg"), "--variety", "hom-associative"], 2)], vec![]),
        s("parse-syntax", vec![step(&["check", &fx("syntax.halg"), "--variety", "hom-associative"], 2)], vec![]),
        s("parse-lexical", vec![step(&["report", &fx("lexical.halg")], 2)], vec![]),
        s("parse-duplicate", vec![step(&["report", &fx("duplicate.halg")], 2)], vec![]),
        s("parse-dangling", vec![step(&["report", &fx("dangling.halg")], 2)], vec![]),
        s("usage-error", vec![step(&["check", &cat("kx2")], 2)], vec![]),
        s("semantic-unknown-variety", vec![step(&["check", &cat("kx2"), "--variety", "hom-nothing"], 3)], vec![]),
        s("semantic-missing-product", vec![step(&["check", &cat("kx2"), "--variety", "hom-lie"], 3)], vec![]),
        s("semantic-unknown-target", vec![step(&["check", &cat("kx2"), "--rep", "kx2.nowhere"], 3)], vec![]),
        s("report-empty", vec![step(&["report", &fx("empty.halg")], 0)], vec![]),
        s("report-one-bad", vec![step(&["report", &fx("one-bad.halg")], 1)], vec![]),
        s("report-catalog", vec![step(&["report", &root().join("data/catalog").display().to_string()], 0)], vec![]),
        s(
            "construct-minus",
            vec![
                step(&["construct", &cat("kx2"), "--id", "minus", "--out", "{tmp}/minus.halg"], 0),
                step(&["check", "{tmp}/minus.halg", "--variety", "hom-lie"], 0),
            ],
            vec!["minus.halg"],
        ),
        s(
            "construct-hemisemi-diass",
            vec![
                step(&["construct", &cat("kx2.regular"), "--id", "hemisemi-diass", "--rep", "kx2.regular", "--out", "{tmp}/h.halg"], 0),
                step(&["check", "{tmp}/h.halg", "--variety", "hom-associative-dialgebra"], 0),
            ],
            vec!["h.halg"],
        ),
        s(
            "construct-induced-trialgebra",
            vec![
                step(&["construct", &cat("kx2.sum2.proj1"), "--id", "induced-trialgebra", "--operator", "kx2.sum2.proj1", "--out", "{tmp}/t.halg"], 0),
                step(&["report", "{tmp}/t.halg"], 0),
            ],
            vec!["t.halg"],
        ),
        s(
            "construct-yau-twist-checked",
            vec![step(&["construct", &cat("tri-example"), "--id", "yau-twist", "--map", "phi23", "--out", "{tmp}/y.halg"], 3)],
            vec![],
        ),
        s(
            "construct-yau-twist-unchecked",
            vec![
                step(
                    &[
                        "construct", &cat("tri-example"), "--id", "yau-twist", "--map", "phi23", "--name", "tri-example-2-3",
                        "--unchecked", "--out", "{tmp}/y.halg",
                    ],
                    0,
                ),
                step(&["check", "{tmp}/y.halg", "--variety", "hom-associative-trialgebra"], 0),
            ],
            vec!["y.halg"],
        ),
        s(
            "construct-precondition",
            vec![step(&["construct", &fx("perturbed.halg"), "--id", "plus", "--out", "{tmp}/p.halg"], 3)],
            vec![],
        ),
        s("battery-lie-di", vec![step(&["battery", "--setting", "lie-di"], 0)], vec![]),
        s("battery-associative-tri", vec![step(&["battery", "--setting", "associative-tri"], 1)], vec![]),
        s("endomorphisms-kx2", vec![step(&["endomorphisms", &cat("kx2"), "--grid", "0,1"], 0)], vec![]),
    ]
}

/// Runs a scenario in a fresh scratch directory and renders its golden text.
pub fn render(s: &Scenario) -> (String, Vec<String>) {
    let tmp = tempfile::tempdir().unwrap();
    let mut text = String::new();
    let mut problems = Vec::new();
    for (args, want) in &s.steps {
        let args: Vec<String> = args.iter().map(|a| a.replace("{tmp}", &tmp.path().display().to_string())).collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let r = homalg(&refs);
        if r.code != *want {
            problems.push(format!("{}: `{}` exited {} (want {want})", s.name, args.join(" "), r.code));
        }
        text.push_str(&format!("$ {}\n", normalize(&args.join(" "), tmp.path())));
        text.push_str(&format!("exit {}\n", r.code));
        for (label, body) in [("stdout", &r.stdout), ("stderr", &r.stderr)] {
            // Only the first stderr line is stable across clap versions.
            let body = if label == "stderr" { body.lines().next().unwrap_or("") } else { body.as_str() };
            let body = normalize(body, tmp.path());
            if !body.is_empty() {
                text.push_str(&format!("--- {label}\n{body}\n"));
            }
        }
    }
    for f in &s.files {
        let body = fs::read_to_string(tmp.path().join(f)).unwrap_or_default();
        text.push_str(&format!("--- file {f}\n{}\n", normalize(&body, tmp.path())));
    }
    (text, problems)
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// Compares every scenario against its golden file; `HOMALG_BLESS=1` rewrites them.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("HOMALG_BLESS").is_some();
    let mut problems = Vec::new();
    for s in scenarios() {
        let (text, mut p) = render(&s);
        problems.append(&mut p);
        let path = golden_path(s.name);
        if bless {
            fs::write(&path, &text).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == text => {}
            Ok(want) => problems.push(format!("{}: golden mismatch\n--- want\n{want}\n--- got\n{text}", s.name)),
            Err(_) => problems.push(format!("{}: missing golden file {}", s.name, path.display())),
        }
    }
    problems
}
