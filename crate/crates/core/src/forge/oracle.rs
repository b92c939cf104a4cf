use crate::error::{Error, Result};
use crate::exact::{LinearMap, StructureTensor, Vector};
use crate::identity::Interpretation;
use crate::report::{CheckReport, Witness};

/// Identities the oracle implements directly.
pub const ORACLE_SCHEMAS: [&str; 15] = [
    "hom-associativity",
    "antisymmetry",
    "hom-jacobi",
    "hom-leibniz",
    "left-bar",
    "right-bar",
    "assoc-dashv",
    "assoc-vdash",
    "assoc-inner",
    "assoc-perp",
    "axiom6",
    "axiom7",
    "axiom8",
    "axiom9",
    "axiom10",
];

struct Env<'a> {
    n: usize,
    alpha: &'a LinearMap,
    i: &'a Interpretation,
}

impl Env<'_> {
    fn p(&self, name: &str) -> Result<&StructureTensor> {
        Ok(&self.i.get_op(name)?.tensor)
    }
}

fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

fn finish(name: &str, tuples: u64, bad: Option<(Vec<usize>, Vector, Vector)>, vars: &[&str]) -> CheckReport {
    let mut r = match bad {
        None => CheckReport::pass(name),
        Some((tuple, lhs, rhs)) => CheckReport::fail(
            name,
            Witness {
                identity: name.to_string(),
                variables: vars.iter().map(|s| s.to_string()).collect(),
                tuple,
                sample: None,
                lhs,
                rhs,
            },
        ),
    };
    r.tuples = tuples;
    r
}

fn pairs(name: &str, env: &Env, f: impl Fn(&Vector, &Vector) -> Result<(Vector, Vector)>) -> Result<CheckReport> {
    let mut count = 0;
    for a in 0..env.n {
        for b in 0..env.n {
            count += 1;
            let (l, r) = f(&e(env.n, a), &e(env.n, b))?;
            if l != r {
                return Ok(finish(name, count, Some((vec![a, b], l, r)), &["x", "y"]));
            }
        }
    }
    Ok(finish(name, count, None, &[]))
}

fn triples(
    name: &str,
    env: &Env,
    f: impl Fn(&Vector, &Vector, &Vector) -> Result<(Vector, Vector)>,
) -> Result<CheckReport> {
    let mut count = 0;
    for a in 0..env.n {
        for b in 0..env.n {
            for c in 0..env.n {
                count += 1;
                let (l, r) = f(&e(env.n, a), &e(env.n, b), &e(env.n, c))?;
                if l != r {
                    return Ok(finish(name, count, Some((vec![a, b, c], l, r)), &["x", "y", "z"]));
                }
            }
        }
    }
    Ok(finish(name, count, None, &[]))
}

/// `(x p y) q α(z) = α(x) s (y t z)`
fn shape(name: &str, env: &Env, ops: [&str; 4]) -> Result<CheckReport> {
    let [p, q, s, t] = [env.p(ops[0])?, env.p(ops[1])?, env.p(ops[2])?, env.p(ops[3])?];
    triples(name, env, |x, y, z| {
        let l = q.apply(&p.apply(x, y)?, &env.alpha.apply(z)?)?;
        let r = s.apply(&env.alpha.apply(x)?, &t.apply(y, z)?)?;
        Ok((l, r))
    })
}

/// `(x p y) q α(z) = (x s y) q α(z)` and its mirror, for the bar identities.
fn bar(name: &str, env: &Env, left: bool) -> Result<CheckReport> {
    let (dashv, vdash) = (env.p("dashv")?, env.p("vdash")?);
    triples(name, env, |x, y, z| {
        if left {
            let az = env.alpha.apply(z)?;
            Ok((vdash.apply(&dashv.apply(x, y)?, &az)?, vdash.apply(&vdash.apply(x, y)?, &az)?))
        } else {
            let ax = env.alpha.apply(x)?;
            Ok((dashv.apply(&ax, &dashv.apply(y, z)?)?, dashv.apply(&ax, &vdash.apply(y, z)?)?))
        }
    })
}

/// Checks a named identity by explicit loops over basis tuples, without the expression engine.
pub fn brute_oracle(schema_name: &str, i: &Interpretation) -> Result<CheckReport> {
    let alpha = &i.get_map("alpha")?.map;
    let env = Env { n: alpha.src_dim(), alpha, i };
    match schema_name {
        "hom-associativity" => shape(schema_name, &env, ["mul"; 4]),
        "antisymmetry" => {
            let b = env.p("bracket")?;
            pairs(schema_name, &env, |x, y| Ok((b.apply(x, y)?.add(&b.apply(y, x)?)?, Vector::zeros(env.n))))
        }
        "hom-jacobi" => {
            let b = env.p("bracket")?;
            triples(schema_name, &env, |x, y, z| {
                let t = |p: &Vector, q: &Vector, r: &Vector| b.apply(&alpha.apply(p)?, &b.apply(q, r)?);
                let s = t(x, y, z)?.add(&t(y, z, x)?)?.add(&t(z, x, y)?)?;
                Ok((s, Vector::zeros(env.n)))
            })
        }
        "hom-leibniz" => {
            let b = env.p("leib")?;
            triples(schema_name, &env, |x, y, z| {
                let l = b.apply(&alpha.apply(x)?, &b.apply(y, z)?)?;
                let r1 = b.apply(&b.apply(x, y)?, &alpha.apply(z)?)?;
                let r2 = b.apply(&alpha.apply(y)?, &b.apply(x, z)?)?;
                Ok((l, r1.add(&r2)?))
            })
        }
        "left-bar" => bar(schema_name, &env, true),
        "right-bar" => bar(schema_name, &env, false),
        "assoc-dashv" => shape(schema_name, &env, ["dashv"; 4]),
        "assoc-vdash" => shape(schema_name, &env, ["vdash"; 4]),
        "assoc-inner" => shape(schema_name, &env, ["vdash", "dashv", "vdash", "dashv"]),
        "assoc-perp" => shape(schema_name, &env, ["perp"; 4]),
        "axiom6" => shape(schema_name, &env, ["dashv", "dashv", "dashv", "perp"]),
        "axiom7" => shape(schema_name, &env, ["perp", "dashv", "perp", "dashv"]),
        "axiom8" => shape(schema_name, &env, ["dashv", "perp", "perp", "vdash"]),
        "axiom9" => shape(schema_name, &env, ["vdash", "perp", "vdash", "perp"]),
        "axiom10" => shape(schema_name, &env, ["perp", "vdash", "vdash", "vdash"]),
        other => Err(Error::semantic(format!("the oracle does not implement `{other}`"))),
    }
}
