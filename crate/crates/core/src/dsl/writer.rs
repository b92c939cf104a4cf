use std::fmt::Write;

use super::{Declaration, OperatorDecl, SourceFile};
use crate::exact::{LinearMap, StructureTensor, Vector};
use crate::instance::{AlgebraInstance, RepInstance, BETA};
use crate::operators::{OperatorDomain, OperatorKind};

fn terms(v: &Vector, prefix: char) -> String {
    let parts: Vec<String> = v
        .support()
        .map(|(k, c)| if c.is_one() { format!("{prefix}{}", k + 1) } else { format!("{c}*{prefix}{}", k + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn tensor_lines(out: &mut String, head: &str, t: &StructureTensor, lhs: impl Fn(usize, usize) -> String, p: char) {
    let (l, r, _) = t.dims();
    let mut any = false;
    for i in 0..l {
        for j in 0..r {
            if !t.nonzero(i, j).is_empty() {
                any = true;
                let _ = writeln!(out, "  {head}: {} = {}", lhs(i, j), terms(&t.product(i, j), p));
            }
        }
    }
    if !any && l > 0 && r > 0 {
        let _ = writeln!(out, "  {head}: {} = 0", lhs(0, 0));
    }
}

fn map_lines(out: &mut String, head: &str, m: &LinearMap, src: char, dst: char) {
    let mut any = false;
    for j in 0..m.src_dim() {
        let col = m.column(j);
        if !col.is_zero() {
            any = true;
            let _ = writeln!(out, "{head}{src}{} = {}", j + 1, terms(&col, dst));
        }
    }
    if !any && m.src_dim() > 0 {
        let _ = writeln!(out, "{head}{src}1 = 0");
    }
}

/// One `algebra` block.
pub fn write_algebra(a: &AlgebraInstance) -> String {
    let mut out = format!("algebra {} dim {}\n", a.name, a.dim);
    if let Some(v) = a.variety {
        let _ = writeln!(out, "  variety {v}");
    }
    for (name, t) in &a.products {
        tensor_lines(&mut out, &format!("op {name}"), t, |i, j| format!("e{} * e{}", i + 1, j + 1), 'e');
    }
    for (name, m) in &a.maps {
        map_lines(&mut out, &format!("  map {name}: "), m, 'e', 'e');
    }
    out.push_str("end\n");
    out
}

fn write_rep(r: &RepInstance) -> String {
    let mut out = format!("rep {} over {} dim {} kind {}\n", r.name, r.base.name, r.v_dim, r.kind);
    for (name, t) in &r.actions {
        let (head, lhs): (String, Box<dyn Fn(usize, usize) -> String>) = match name.as_str() {
            "l" => ("lmap l".into(), Box::new(|i, j| format!("e{} * u{}", i + 1, j + 1))),
            "r" => ("rmap r".into(), Box::new(|i, j| format!("u{} * e{}", j + 1, i + 1))),
            other => (format!("act {other}"), Box::new(|i, j| format!("e{} * u{}", i + 1, j + 1))),
        };
        tensor_lines(&mut out, &head, t, lhs, 'u');
    }
    map_lines(&mut out, &format!("  map {BETA}: "), &r.beta, 'u', 'u');
    if let Some(t) = &r.v_product {
        if !t.is_zero() || !r.kind.is_action() {
            let head = format!("op {}", r.family().v_product());
            tensor_lines(&mut out, &head, t, |i, j| format!("u{} * u{}", i + 1, j + 1), 'u');
        }
    }
    out.push_str("end\n");
    out
}

fn write_kind(k: &OperatorKind) -> String {
    match k {
        OperatorKind::OOperator(w) => format!("o-operator {w}"),
        other => other.as_str(),
    }
}

fn write_operator(o: &OperatorDecl) -> String {
    let c = &o.candidate;
    let (src, dst, p) = match &c.domain {
        OperatorDomain::OnRep(r) => (&r.name, &r.base.name, 'u'),
        OperatorDomain::OnAlgebra(a) => (&a.name, &a.name, 'e'),
    };
    let mut out = format!("operator {}: {src} -> {dst}\n", c.name);
    for k in &o.kinds {
        let _ = writeln!(out, "  kind {}", write_kind(k));
    }
    map_lines(&mut out, "  ", &c.map, p, 'e');
    out.push_str("end\n");
    out
}

/// Serializes a file; `header` lines are emitted first as `#` comments.
pub fn write_source(f: &SourceFile, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    for (n, d) in f.declarations.iter().enumerate() {
        if n > 0 || !header.is_empty() {
            out.push('\n');
        }
        out.push_str(&match d {
            Declaration::Algebra(a) => write_algebra(a),
            Declaration::Rep(r) => write_rep(r),
            Declaration::Operator(o) => write_operator(o),
        });
    }
    out
}
