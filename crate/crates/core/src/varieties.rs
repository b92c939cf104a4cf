//! Identity catalogs per variety and the certifiers built on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::LinearMap;
use crate::identity::{check_all, Expr, IdentitySchema, Interpretation};
use crate::instance::AlgebraInstance;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyTag {
    HomAssociative,
    HomLie,
    HomLeibniz,
    HomJordan,
    HomZeroDialgebra,
    HomAssociativeDialgebra,
    HomJordanDialgebra,
    HomAssociativeTrialgebra,
    HomLeibnizTrialgebra,
    HomJordanTrialgebra,
    HomTridendriform,
}

impl VarietyTag {
    pub const ALL: [VarietyTag; 11] = [
        VarietyTag::HomAssociative,
        VarietyTag::HomLie,
        VarietyTag::HomLeibniz,
        VarietyTag::HomJordan,
        VarietyTag::HomZeroDialgebra,
        VarietyTag::HomAssociativeDialgebra,
        VarietyTag::HomJordanDialgebra,
        VarietyTag::HomAssociativeTrialgebra,
        VarietyTag::HomLeibnizTrialgebra,
        VarietyTag::HomJordanTrialgebra,
        VarietyTag::HomTridendriform,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            VarietyTag::HomAssociative => "hom-associative",
            VarietyTag::HomLie => "hom-lie",
            VarietyTag::HomLeibniz => "hom-leibniz",
            VarietyTag::HomJordan => "hom-jordan",
            VarietyTag::HomZeroDialgebra => "hom-zero-dialgebra",
            VarietyTag::HomAssociativeDialgebra => "hom-associative-dialgebra",
            VarietyTag::HomJordanDialgebra => "hom-jordan-dialgebra",
            VarietyTag::HomAssociativeTrialgebra => "hom-associative-trialgebra",
            VarietyTag::HomLeibnizTrialgebra => "hom-leibniz-trialgebra",
            VarietyTag::HomJordanTrialgebra => "hom-jordan-trialgebra",
            VarietyTag::HomTridendriform => "hom-tridendriform",
        }
    }

    pub fn parse(s: &str) -> Option<VarietyTag> {
        VarietyTag::ALL.iter().copied().find(|t| t.as_str() == s)
    }

    /// Product symbols the tag's identities use.
    pub fn products(&self) -> &'static [&'static str] {
        match self {
            VarietyTag::HomAssociative => &["mul"],
            VarietyTag::HomLie => &["bracket"],
            VarietyTag::HomLeibniz => &["leib"],
            VarietyTag::HomJordan => &["circ"],
            VarietyTag::HomZeroDialgebra | VarietyTag::HomAssociativeDialgebra => &["dashv", "vdash"],
            VarietyTag::HomJordanDialgebra => &["bullet"],
            VarietyTag::HomAssociativeTrialgebra => &["dashv", "vdash", "perp"],
            VarietyTag::HomLeibnizTrialgebra => &["leib", "bracket"],
            VarietyTag::HomJordanTrialgebra => &["circ", "bullet"],
            VarietyTag::HomTridendriform => &["prec", "succ", "dot"],
        }
    }

    /// The defining identities, in checking order.
    pub fn schemas(&self) -> Vec<IdentitySchema> {
        match self {
            VarietyTag::HomAssociative => hom_associative("mul"),
            VarietyTag::HomLie => hom_lie("bracket"),
            VarietyTag::HomLeibniz => hom_leibniz("leib"),
            VarietyTag::HomJordan => hom_jordan("circ"),
            VarietyTag::HomZeroDialgebra => bar_identities(),
            VarietyTag::HomAssociativeDialgebra => dialgebra(),
            VarietyTag::HomJordanDialgebra => hom_jordan_dialgebra("bullet"),
            VarietyTag::HomAssociativeTrialgebra => trialgebra(),
            VarietyTag::HomLeibnizTrialgebra => leibniz_trialgebra(),
            VarietyTag::HomJordanTrialgebra => jordan_trialgebra(),
            VarietyTag::HomTridendriform => tridendriform(),
        }
    }

    /// Untwisted identity list used for instances with alpha = id.
    pub fn classical_schemas(&self) -> Vec<IdentitySchema> {
        let mut out: Vec<IdentitySchema> = self
            .schemas()
            .iter()
            .map(|s| {
                IdentitySchema::new(
                    &format!("classical-{}", s.name()),
                    s.variables().iter().map(|v| (v.name.clone(), v.sort.clone())).collect(),
                    strip_twists(s.lhs()),
                    strip_twists(s.rhs()),
                )
                .expect("stripping twists keeps variables")
            })
            .collect();
        if matches!(self, VarietyTag::HomJordanDialgebra | VarietyTag::HomJordanTrialgebra) {
            out.extend(classical_jordan_dialgebra("bullet"));
        }
        out
    }
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn strip_twists(e: &Expr) -> Expr {
    match e {
        Expr::Var(_) => e.clone(),
        Expr::Twist { child, .. } => strip_twists(child),
        Expr::Op { op, left, right } => Expr::op(op, strip_twists(left), strip_twists(right)),
        Expr::Sum(c) => Expr::Sum(c.iter().map(|(s, x)| (s.clone(), strip_twists(x))).collect()),
    }
}

/// Builds a catalog schema; the texts below are fixed, so failure is a bug.
pub(crate) fn schema(name: &str, vars: &str, eq: &str) -> IdentitySchema {
    IdentitySchema::parse(name, vars, eq).unwrap_or_else(|e| panic!("schema `{name}`: {e}"))
}

/// Substitutes the product symbol `P` in a template.
fn sub(template: &str, p: &str) -> String {
    template.replace("P(", &format!("{p}("))
}

const XYZ: &str = "x:A y:A z:A";
const X4: &str = "x1:A x2:A x3:A x4:A";

pub fn hom_associative(p: &str) -> Vec<IdentitySchema> {
    vec![schema("hom-associativity", XYZ, &sub("P(P(x, y), alpha(z)) = P(alpha(x), P(y, z))", p))]
}

pub fn hom_lie(p: &str) -> Vec<IdentitySchema> {
    vec![
        schema("antisymmetry", "x:A y:A", &sub("P(x, y) + P(y, x) = 0", p)),
        schema(
            "hom-jacobi",
            XYZ,
            &sub("P(alpha(x), P(y, z)) + P(alpha(y), P(z, x)) + P(alpha(z), P(x, y)) = 0", p),
        ),
    ]
}

pub fn hom_leibniz(p: &str) -> Vec<IdentitySchema> {
    vec![schema(
        "hom-leibniz",
        XYZ,
        &sub("P(alpha(x), P(y, z)) = P(P(x, y), alpha(z)) + P(alpha(y), P(x, z))", p),
    )]
}

pub fn hom_jordan(p: &str) -> Vec<IdentitySchema> {
    vec![
        schema("commutativity", "x:A y:A", &sub("P(x, y) = P(y, x)", p)),
        schema(
            "hom-jordan",
            "x:A y:A",
            &sub("P(alpha(P(x, x)), P(alpha(y), alpha(x))) = P(P(P(x, x), alpha(y)), alpha^2(x))", p),
        ),
    ]
}

pub fn bar_identities() -> Vec<IdentitySchema> {
    vec![
        schema("left-bar", XYZ, "vdash(dashv(x, y), alpha(z)) = vdash(vdash(x, y), alpha(z))"),
        schema("right-bar", XYZ, "dashv(alpha(x), dashv(y, z)) = dashv(alpha(x), vdash(y, z))"),
    ]
}

pub fn dialgebra() -> Vec<IdentitySchema> {
    let mut v = bar_identities();
    v.extend([
        schema("assoc-dashv", XYZ, "dashv(dashv(x, y), alpha(z)) = dashv(alpha(x), dashv(y, z))"),
        schema("assoc-vdash", XYZ, "vdash(vdash(x, y), alpha(z)) = vdash(alpha(x), vdash(y, z))"),
        schema("assoc-inner", XYZ, "dashv(vdash(x, y), alpha(z)) = vdash(alpha(x), dashv(y, z))"),
    ]);
    v
}

pub fn hom_jordan_dialgebra(p: &str) -> Vec<IdentitySchema> {
    vec![
        schema("HJL0", "x1:A x2:A x3:A", &sub("P(P(x1, x2), x3) = P(P(x2, x1), x3)", p)),
        schema(
            "HJL1",
            X4,
            &sub(
                "P(P(P(x4, x3), alpha(x2)), alpha^2(x1)) + P(alpha^2(x4), P(alpha(x2), P(x3, x1))) \
                 + P(alpha^2(x3), P(alpha(x2), P(x4, x1))) \
                 = P(alpha(P(x4, x3)), P(alpha(x2), alpha(x1))) + P(P(alpha(x4), alpha(x2)), alpha(P(x3, x1))) \
                 + P(P(alpha(x3), alpha(x2)), alpha(P(x4, x1)))",
                p,
            ),
        ),
        schema(
            "HJL2",
            X4,
            &sub(
                "P(alpha^2(x1), P(P(x4, x3), x2)) + P(alpha^2(x4), P(P(x3, x1), x2)) \
                 + P(alpha^2(x3), P(P(x4, x1), x2)) \
                 = P(alpha(P(x4, x3)), P(alpha(x1), x2)) + P(alpha(P(x1, x3)), P(alpha(x4), x2)) \
                 + P(alpha(P(x4, x1)), P(alpha(x3), x2))",
                p,
            ),
        ),
    ]
}

/// The associator forms stated as equivalent to HJL1 and HJL2.
pub fn hom_jordan_dialgebra_remark(p: &str) -> Vec<IdentitySchema> {
    vec![
        schema(
            "HJL1-remark",
            XYZ,
            &sub(
                "P(P(P(x, x), alpha(y)), alpha^2(z)) - P(alpha(P(x, x)), P(alpha(y), alpha(z))) \
                 = 2*P(P(alpha(x), alpha(y)), alpha(P(x, z))) - 2*P(alpha^2(x), P(alpha(y), P(x, z)))",
                p,
            ),
        ),
        schema(
            "HJL2-remark",
            "x:A y:A",
            &sub("P(alpha^2(x), P(P(x, x), y)) = P(alpha(P(x, x)), P(alpha(x), y))", p),
        ),
    ]
}

pub fn classical_jordan_dialgebra(p: &str) -> Vec<IdentitySchema> {
    vec![
        schema("JD0", XYZ, &sub("P(P(x, y), z) = P(P(y, x), z)", p)),
        schema(
            "JD1",
            XYZ,
            &sub(
                "P(P(P(x, x), y), z) - P(P(x, x), P(y, z)) = 2*P(P(x, y), P(x, z)) - 2*P(x, P(y, P(x, z)))",
                p,
            ),
        ),
        schema("JD2", "x:A y:A", &sub("P(x, P(P(x, x), y)) = P(P(x, x), P(x, y))", p)),
    ]
}

pub fn trialgebra() -> Vec<IdentitySchema> {
    let mut v = dialgebra();
    v.push(schema("assoc-perp", XYZ, "perp(perp(x, y), alpha(z)) = perp(alpha(x), perp(y, z))"));
    v.extend([
        schema("axiom6", XYZ, "dashv(dashv(x, y), alpha(z)) = dashv(alpha(x), perp(y, z))"),
        schema("axiom7", XYZ, "dashv(perp(x, y), alpha(z)) = perp(alpha(x), dashv(y, z))"),
        schema("axiom8", XYZ, "perp(dashv(x, y), alpha(z)) = perp(alpha(x), vdash(y, z))"),
        schema("axiom9", XYZ, "perp(vdash(x, y), alpha(z)) = vdash(alpha(x), perp(y, z))"),
        schema("axiom10", XYZ, "vdash(perp(x, y), alpha(z)) = vdash(alpha(x), vdash(y, z))"),
    ]);
    v
}

pub fn leibniz_trialgebra() -> Vec<IdentitySchema> {
    let mut v = hom_lie("bracket");
    v.extend(hom_leibniz("leib"));
    v.extend([
        schema(
            "trileib1",
            XYZ,
            "leib(alpha(x), bracket(y, z)) = bracket(leib(x, y), alpha(z)) + bracket(alpha(y), leib(x, z))",
        ),
        schema("trileib2", XYZ, "leib(bracket(x, y), alpha(z)) = leib(leib(x, y), alpha(z))"),
    ]);
    v
}

pub fn jordan_trialgebra() -> Vec<IdentitySchema> {
    let mut v = hom_jordan("circ");
    v.extend(hom_jordan_dialgebra("bullet"));
    v.extend([
        schema(
            "HJTL0",
            "x1:A x2:A",
            "circ(circ(alpha(x1), alpha(x1)), bullet(alpha(x2), alpha(x1))) \
             = circ(bullet(alpha(x2), circ(x1, x1)), alpha^2(x1))",
        ),
        schema(
            "HJTL1",
            X4,
            "circ(circ(bullet(x4, x1), alpha(x3)), alpha^2(x2)) + circ(circ(bullet(x4, x2), alpha(x3)), alpha^2(x1)) \
             + bullet(alpha^2(x4), circ(circ(x1, x2), alpha(x3))) \
             = circ(bullet(alpha(x4), circ(x1, x2)), alpha^2(x3)) + circ(bullet(alpha(x4), circ(x1, x3)), alpha^2(x2)) \
             + circ(bullet(alpha(x4), circ(x2, x3)), alpha^2(x1))",
        ),
        schema(
            "HJTL2",
            X4,
            "circ(bullet(alpha(x3), bullet(x4, x1)), alpha^2(x2)) + circ(bullet(alpha(x3), bullet(x4, x2)), alpha^2(x1)) \
             + bullet(alpha^2(x4), bullet(alpha(x3), circ(x1, x2))) \
             = circ(bullet(bullet(x4, x3), alpha(x2)), alpha^2(x1)) + bullet(alpha^2(x4), circ(bullet(x3, x1), alpha(x2))) \
             + bullet(alpha^2(x3), circ(bullet(x4, x1), alpha(x2)))",
        ),
        schema(
            "HJTL3",
            X4,
            "circ(bullet(alpha(x3), alpha(x1)), bullet(alpha(x4), alpha(x2))) \
             + circ(bullet(alpha(x4), alpha(x1)), bullet(alpha(x3), alpha(x2))) \
             + bullet(bullet(alpha(x4), alpha(x3)), circ(alpha(x1), alpha(x2))) \
             = circ(bullet(bullet(x4, x3), alpha(x2)), alpha^2(x1)) + bullet(alpha^2(x4), circ(bullet(x3, x1), alpha(x2))) \
             + bullet(alpha^2(x3), circ(bullet(x4, x1), alpha(x2)))",
        ),
    ]);
    v
}

/// Six-axiom Hom-tridendriform list (externally sourced) plus associativity of `dot`.
pub fn tridendriform() -> Vec<IdentitySchema> {
    vec![
        schema(
            "tridend1",
            XYZ,
            "prec(prec(x, y), alpha(z)) = prec(alpha(x), prec(y, z) + succ(y, z) + dot(y, z))",
        ),
        schema("tridend2", XYZ, "prec(succ(x, y), alpha(z)) = succ(alpha(x), prec(y, z))"),
        schema(
            "tridend3",
            XYZ,
            "succ(alpha(x), succ(y, z)) = succ(prec(x, y) + succ(x, y) + dot(x, y), alpha(z))",
        ),
        schema("tridend4", XYZ, "dot(prec(x, y), alpha(z)) = dot(alpha(x), succ(y, z))"),
        schema("tridend5", XYZ, "dot(succ(x, y), alpha(z)) = succ(alpha(x), dot(y, z))"),
        schema("tridend6", XYZ, "prec(dot(x, y), alpha(z)) = dot(alpha(x), prec(y, z))"),
        schema("assoc-dot", XYZ, "dot(dot(x, y), alpha(z)) = dot(alpha(x), dot(y, z))"),
    ]
}

fn require_products(a: &AlgebraInstance, names: &[&str]) -> Result<()> {
    for p in names {
        a.product(p)?;
    }
    a.alpha()?;
    Ok(())
}

/// Checks every identity of `v` on `a`.
pub fn certify(a: &AlgebraInstance, v: VarietyTag) -> Result<CheckReport> {
    require_products(a, v.products())?;
    check_all(v.as_str(), &v.schemas(), &a.interpretation()?)
}

/// Checks the tag's untwisted identity list.
pub fn certify_classical(a: &AlgebraInstance, v: VarietyTag) -> Result<CheckReport> {
    require_products(a, v.products())?;
    check_all(&format!("classical-{}", v.as_str()), &v.classical_schemas(), &a.interpretation()?)
}

/// alpha(x∗y) = alpha(x)∗alpha(y) for every product.
pub fn certify_multiplicative(a: &AlgebraInstance) -> Result<CheckReport> {
    a.alpha()?;
    let schemas: Vec<IdentitySchema> = a
        .products
        .keys()
        .map(|p| schema(&format!("multiplicative:{p}"), "x:A y:A", &sub("alpha(P(x, y)) = P(alpha(x), alpha(y))", p)))
        .collect();
    check_all("multiplicative", &schemas, &a.interpretation()?)
}

/// f intertwines the twists and every product.
pub fn is_morphism(f: &LinearMap, src: &AlgebraInstance, dst: &AlgebraInstance) -> Result<CheckReport> {
    let sp: Vec<&String> = src.products.keys().collect();
    let dp: Vec<&String> = dst.products.keys().collect();
    if sp != dp {
        return Err(Error::semantic(format!(
            "`{}` and `{}` expose different product symbols",
            src.name, dst.name
        )));
    }
    if f.src_dim() != src.dim || f.dst_dim() != dst.dim {
        return Err(Error::shape(format!("map is {}→{}, expected {}→{}", f.src_dim(), f.dst_dim(), src.dim, dst.dim)));
    }
    src.validate()?;
    dst.validate()?;
    let mut i = Interpretation::new()
        .sort("S", src.dim)
        .sort("T", dst.dim)
        .endo("alpha.s", "S", src.alpha()?.clone())
        .endo("alpha.t", "T", dst.alpha()?.clone())
        .map("f", ("S", "T"), f.clone());
    let mut schemas = vec![schema("morphism-twist", "x:S", "f(alpha.s(x)) = alpha.t(f(x))")];
    for p in sp {
        i = i
            .product(&format!("s.{p}"), "S", src.products[p].clone())
            .product(&format!("t.{p}"), "T", dst.products[p].clone());
        schemas.push(schema(&format!("morphism:{p}"), "x:S y:S", &format!("f(s.{p}(x, y)) = t.{p}(f(x), f(y))")));
    }
    check_all("morphism", &schemas, &i)
}
