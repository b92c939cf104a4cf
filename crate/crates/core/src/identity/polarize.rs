use crate::exact::Scalar;
use crate::identity::schema::Variable;
use crate::identity::{Expr, IdentitySchema};

/// Full polarization of every repeated variable by inclusion–exclusion.
///
/// A variable x of multiplicity m becomes slots x.1 … x.m in place of x.
/// Multilinear schemas are returned unchanged.
pub fn polarize(s: &IdentitySchema) -> IdentitySchema {
    let mut cur = s.clone();
    for v in s.variables() {
        if v.multiplicity > 1 {
            cur = polarize_one(&cur, &v.name, v.multiplicity);
        }
    }
    cur
}

fn polarize_one(s: &IdentitySchema, name: &str, m: usize) -> IdentitySchema {
    let fresh: Vec<String> = (1..=m).map(|i| format!("{name}.{i}")).collect();
    let side = |e: &Expr| -> Expr {
        let mut terms = Vec::new();
        for mask in 1u32..(1 << m) {
            let members: Vec<(Scalar, Expr)> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| (Scalar::one(), Expr::Var(fresh[i].clone())))
                .collect();
            let k = members.len();
            let with = if k == 1 { members[0].1.clone() } else { Expr::Sum(members) };
            let sign = if (m - k).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
            terms.push((sign, e.substitute(name, &with)));
        }
        Expr::Sum(terms)
    };
    let mut vars = Vec::new();
    for v in s.variables() {
        if v.name == name {
            for f in &fresh {
                vars.push(Variable { name: f.clone(), sort: v.sort.clone(), multiplicity: 1 });
            }
        } else {
            vars.push(v.clone());
        }
    }
    IdentitySchema::from_parts(s.name().to_string(), vars, side(s.lhs()), side(s.rhs()))
}
