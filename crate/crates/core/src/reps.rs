//! Certifiers and builders for representations and actions.

use crate::constructions::{minus, plus};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, StructureTensor, Vector};
use crate::identity::{check_all, IdentitySchema};
use crate::instance::{AlgebraInstance, Family, RepInstance, RepKind, ALPHA, BETA};
use crate::report::CheckReport;
use crate::varieties::{certify, schema, VarietyTag};

const XU: &str = "x:A u:V";
const XYU: &str = "x:A y:A u:V";

fn bimodule_schemas() -> Vec<IdentitySchema> {
    vec![
        schema("rAs1-left", XU, "beta(l(x, u)) = l(alpha(x), beta(u))"),
        schema("rAs1-right", XU, "beta(r(x, u)) = r(alpha(x), beta(u))"),
        schema("rAs2", XYU, "l(mul(x, y), beta(u)) = l(alpha(x), l(y, u))"),
        schema("rAs3", XYU, "r(mul(x, y), beta(u)) = r(alpha(y), r(x, u))"),
        schema("rAs4", XYU, "l(alpha(x), r(y, u)) = r(alpha(y), l(x, u))"),
    ]
}

fn assoc_action_schemas() -> Vec<IdentitySchema> {
    let v = "x:A u:V v:V";
    vec![
        schema("actass-left", v, "l(alpha(x), vmul(u, v)) = vmul(l(x, u), beta(v))"),
        schema("actass-right", v, "r(alpha(x), vmul(u, v)) = vmul(beta(u), r(x, v))"),
        schema("actass-middle", v, "vmul(beta(u), l(x, v)) = vmul(r(x, u), beta(v))"),
    ]
}

fn lie_module_schemas() -> Vec<IdentitySchema> {
    vec![
        schema("rep-lie-twist", XU, "beta(rho(x, u)) = rho(alpha(x), beta(u))"),
        schema(
            "rep-lie",
            XYU,
            "rho(bracket(x, y), beta(u)) = rho(alpha(x), rho(y, u)) - rho(alpha(y), rho(x, u))",
        ),
    ]
}

fn lie_action_schemas() -> Vec<IdentitySchema> {
    vec![schema(
        "actLie",
        "x:A u:V v:V",
        "rho(alpha(x), vbracket(u, v)) = vbracket(rho(x, u), beta(v)) + vbracket(beta(u), rho(x, v))",
    )]
}

fn jordan_module_schemas() -> Vec<IdentitySchema> {
    let v = "x:A y:A z:A u:V";
    vec![
        schema("representation", XU, "beta(pi(x, u)) = pi(alpha(x), beta(u))"),
        schema(
            "RepHomJor1",
            v,
            "pi(alpha^2(x), pi(circ(y, z), beta(u))) + pi(alpha^2(y), pi(circ(z, x), beta(u))) \
             + pi(alpha^2(z), pi(circ(x, y), beta(u))) \
             = pi(circ(alpha(x), alpha(y)), pi(alpha(z), beta(u))) + pi(circ(alpha(y), alpha(z)), pi(alpha(x), beta(u))) \
             + pi(circ(alpha(z), alpha(x)), pi(alpha(y), beta(u)))",
        ),
        schema(
            "RepHomJor2",
            v,
            "pi(circ(circ(x, y), alpha(z)), beta^2(u)) + pi(alpha^2(x), pi(alpha(z), pi(y, u))) \
             + pi(alpha^2(y), pi(alpha(z), pi(x, u))) \
             = pi(circ(alpha(x), alpha(y)), pi(alpha(z), beta(u))) + pi(circ(alpha(y), alpha(z)), pi(alpha(x), beta(u))) \
             + pi(circ(alpha(x), alpha(z)), pi(alpha(y), beta(u)))",
        ),
    ]
}

const ACT_HJ_RHS: &str = "vstar(pi(circ(x, y), beta(v)), beta^2(u)) + pi(alpha^2(x), vstar(pi(y, u), beta(v))) \
                          + pi(alpha^2(y), vstar(pi(x, u), beta(v)))";

/// The four displayed action conditions, as printed.
pub fn jordan_action_schemas() -> Vec<IdentitySchema> {
    vec![
        schema(
            "ActHJ1",
            "x:A v:V",
            "vstar(pi(alpha(x), beta(v)), vstar(beta(v), beta(v))) = vstar(pi(alpha(x), vstar(v, v)), beta^2(v))",
        ),
        schema(
            "ActHJ2",
            "x:A u:V v:V w:V",
            "vstar(vstar(pi(x, u), beta(w)), beta^2(v)) + vstar(vstar(pi(x, v), beta(w)), beta^2(u)) \
             + pi(alpha^2(x), vstar(vstar(u, v), beta(w))) \
             = vstar(pi(alpha(x), vstar(u, v)), beta^2(w)) + vstar(pi(alpha(x), vstar(u, w)), beta^2(v)) \
             + vstar(pi(alpha(x), vstar(v, w)), beta^2(u))",
        ),
        schema(
            "ActHJ3",
            "x:A y:A u:V v:V",
            &format!(
                "vstar(pi(alpha(y), pi(x, u)), beta^2(v)) + vstar(pi(alpha(y), pi(x, v)), beta^2(u)) \
                 + pi(alpha^2(x), pi(alpha(y), vstar(u, v))) = {ACT_HJ_RHS}"
            ),
        ),
        schema(
            "ActHJ4",
            "x:A y:A u:V v:V",
            &format!(
                "vstar(pi(alpha(y), u), pi(alpha(x), v)) + vstar(pi(alpha(x), u), pi(alpha(y), v)) \
                 + pi(circ(alpha(x), alpha(y)), vstar(beta(u), beta(v))) = {ACT_HJ_RHS}"
            ),
        ),
    ]
}

/// A variety's identities restated on V with product `p` and twist beta.
fn on_v(tag: VarietyTag, p: &str) -> Vec<IdentitySchema> {
    let from = tag.products()[0].to_string();
    let to = p.to_string();
    tag.schemas()
        .iter()
        .map(|s| {
            s.rename_symbols(&|sym: &str| {
                if sym == ALPHA {
                    BETA.to_string()
                } else if sym == from {
                    to.clone()
                } else {
                    sym.to_string()
                }
            })
            .rename_sorts(&|_| "V".to_string())
            .with_name(&format!("V:{}", s.name()))
        })
        .collect()
}

fn beta_multiplicative(p: &str) -> IdentitySchema {
    schema(&format!("beta-multiplicative:{p}"), "u:V v:V", &format!("beta({p}(u, v)) = {p}(beta(u), beta(v))"))
}

/// Every identity the rep's kind requires, in checking order.
pub fn rep_schemas(kind: RepKind) -> Vec<IdentitySchema> {
    let family = kind.family();
    let base = family.base_variety();
    let mut out = base.schemas();
    out.extend(match family {
        Family::Assoc => bimodule_schemas(),
        Family::Lie => lie_module_schemas(),
        Family::Jordan => jordan_module_schemas(),
    });
    if kind.is_action() {
        let p = family.v_product();
        out.extend(on_v(base, p));
        out.push(beta_multiplicative(p));
        out.extend(match family {
            Family::Assoc => assoc_action_schemas(),
            Family::Lie => lie_action_schemas(),
            Family::Jordan => jordan_action_schemas(),
        });
    }
    out
}

pub fn certify_rep(r: &RepInstance) -> Result<CheckReport> {
    check_all(&format!("rep:{}", r.kind), &rep_schemas(r.kind), &r.interpretation()?)
}

fn gate(r: RepInstance) -> Result<RepInstance> {
    let rep = certify_rep(&r)?;
    if rep.is_pass() {
        Ok(r)
    } else {
        Err(Error::Rejected(format!("`{}` does not certify: {rep}", r.name)))
    }
}

fn require(a: &AlgebraInstance, v: VarietyTag) -> Result<()> {
    let rep = certify(a, v)?;
    if rep.is_pass() {
        Ok(())
    } else {
        Err(Error::Rejected(format!("`{}` is not {v}: {rep}", a.name)))
    }
}

/// V = A with the multiplications as actions and beta = alpha.
pub fn regular_bimodule(a: &AlgebraInstance) -> Result<RepInstance> {
    require(a, VarietyTag::HomAssociative)?;
    let mul = a.product("mul")?;
    let r = RepInstance::zero(&format!("{}.reg", a.name), a.clone(), RepKind::Bimodule, a.dim)
        .with_action("l", mul.clone())
        .with_action("r", mul.opposite())
        .with_beta(a.alpha()?.clone());
    gate(r)
}

/// The regular bimodule with the algebra product on V.
pub fn regular_action(a: &AlgebraInstance) -> Result<RepInstance> {
    let r = regular_bimodule(a)?;
    let mul = a.product("mul")?.clone();
    gate(r.with_kind(RepKind::Action).with_v_product(Some(mul)))
}

/// Adjoint module of a Hom-Lie or Hom-Jordan algebra; `action` adds the product on V.
pub fn regular_module(a: &AlgebraInstance, family: Family, action: bool) -> Result<RepInstance> {
    if family == Family::Assoc {
        return if action { regular_action(a) } else { regular_bimodule(a) };
    }
    require(a, family.base_variety())?;
    let p = a.product(family.base_product())?.clone();
    let kind = match (family, action) {
        (Family::Lie, false) => RepKind::LieModule,
        (Family::Lie, true) => RepKind::LieAction,
        (_, false) => RepKind::JordanModule,
        (_, true) => RepKind::JordanAction,
    };
    let r = RepInstance::zero(&format!("{}.reg", a.name), a.clone(), kind, a.dim)
        .with_action(family.action_maps()[0], p.clone())
        .with_beta(a.alpha()?.clone())
        .with_v_product(action.then_some(p));
    gate(r)
}

/// V = A⊗A, l(x)(a⊗b) = (x·a)⊗b, r(x)(a⊗b) = a⊗(b·x), beta = alpha⊗alpha.
pub fn tensor_square_bimodule(a: &AlgebraInstance) -> Result<RepInstance> {
    require(a, VarietyTag::HomAssociative)?;
    let n = a.dim;
    let mul = a.product("mul")?;
    let mut l = StructureTensor::zeros(n, n * n, n * n);
    let mut r = StructureTensor::zeros(n, n * n, n * n);
    for x in 0..n {
        for i in 0..n {
            for j in 0..n {
                for (k, c) in mul.nonzero(x, i) {
                    l.set(x, i * n + j, k * n + j, c.clone());
                }
                for (k, c) in mul.nonzero(j, x) {
                    r.set(x, i * n + j, i * n + k, c.clone());
                }
            }
        }
    }
    let alpha = a.alpha()?;
    let rep = RepInstance::zero(&format!("{}.tensor-square", a.name), a.clone(), RepKind::Bimodule, n * n)
        .with_action("l", l)
        .with_action("r", r)
        .with_beta(alpha.kron(alpha));
    gate(rep)
}

/// V = Aⁿ with componentwise actions, product and twist.
pub fn direct_sum_bimodule(a: &AlgebraInstance, copies: usize) -> Result<RepInstance> {
    require(a, VarietyTag::HomAssociative)?;
    if copies == 0 {
        return Err(Error::semantic("direct sum needs at least one copy"));
    }
    let n = a.dim;
    let m = n * copies;
    let mul = a.product("mul")?;
    let mut l = StructureTensor::zeros(n, m, m);
    let mut r = StructureTensor::zeros(n, m, m);
    let mut vm = StructureTensor::square(m);
    for b in 0..copies {
        for i in 0..n {
            for j in 0..n {
                for (k, c) in mul.nonzero(i, j) {
                    l.set(i, b * n + j, b * n + k, c.clone());
                    r.set(j, b * n + i, b * n + k, c.clone());
                    vm.set(b * n + i, b * n + j, b * n + k, c.clone());
                }
            }
        }
    }
    let alpha = a.alpha()?;
    let mut beta = alpha.clone();
    for _ in 1..copies {
        beta = beta.direct_sum(alpha);
    }
    let rep = RepInstance::zero(&format!("{}^{copies}", a.name), a.clone(), RepKind::Action, m)
        .with_action("l", l)
        .with_action("r", r)
        .with_beta(beta)
        .with_v_product(Some(vm));
    gate(rep)
}

/// A bilinear product on A⊕V from its values on split components.
pub(crate) fn sum_product(
    n: usize,
    m: usize,
    f: impl Fn(&Vector, &Vector, &Vector, &Vector) -> Result<(Vector, Vector)>,
) -> Result<StructureTensor> {
    let d = n + m;
    let mut t = StructureTensor::square(d);
    for i in 0..d {
        let (xa, xv) = Vector::basis(d, i).split(n);
        for j in 0..d {
            let (ya, yv) = Vector::basis(d, j).split(n);
            let (a, v) = f(&xa, &xv, &ya, &yv)?;
            t.set_product(i, j, &a.concat(&v));
        }
    }
    Ok(t)
}

/// α⊕β on A⊕V.
pub(crate) fn sum_twist(r: &RepInstance) -> Result<LinearMap> {
    Ok(r.base.alpha()?.direct_sum(&r.beta))
}

fn add_all(vs: &[Vector]) -> Result<Vector> {
    let mut acc = vs[0].clone();
    for v in &vs[1..] {
        acc = acc.add(v)?;
    }
    Ok(acc)
}

/// Semi-direct product A⋉V of a certified action; outputs the base variety.
pub fn semidirect_product(act: &RepInstance) -> Result<AlgebraInstance> {
    if !act.kind.is_action() {
        return Err(Error::semantic(format!("`{}` is a {}, not an action", act.name, act.kind)));
    }
    let act = gate(act.clone())?;
    let family = act.family();
    let (n, m) = (act.base.dim, act.v_dim);
    let p = act.base.product(family.base_product())?;
    let vp = act.v_product.as_ref().expect("validated action has a V-product");
    let t = match family {
        Family::Assoc => {
            let (l, r) = (act.action("l")?, act.action("r")?);
            sum_product(n, m, |x, u, y, v| {
                Ok((p.apply(x, y)?, add_all(&[l.apply(x, v)?, r.apply(y, u)?, vp.apply(u, v)?])?))
            })?
        }
        Family::Lie => {
            let rho = act.action("rho")?;
            sum_product(n, m, |x, u, y, v| {
                Ok((p.apply(x, y)?, add_all(&[rho.apply(x, v)?, rho.apply(y, u)?.neg(), vp.apply(u, v)?])?))
            })?
        }
        Family::Jordan => {
            let pi = act.action("pi")?;
            sum_product(n, m, |x, u, y, v| {
                Ok((p.apply(x, y)?, add_all(&[pi.apply(x, v)?, pi.apply(y, u)?, vp.apply(u, v)?])?))
            })?
        }
    };
    Ok(AlgebraInstance::new(&format!("{}⋉{}", act.base.name, act.name), n + m)
        .with_product(family.base_product(), t)
        .with_alpha(sum_twist(&act)?)
        .with_variety(family.base_variety()))
}

/// Jordan module over Plus(A) with π = l + r; for actions ∗ = ·_V + ·_Vᵒᵖ.
pub fn plus_rep(r: &RepInstance) -> Result<RepInstance> {
    if r.family() != Family::Assoc {
        return Err(Error::semantic(format!("`{}` is not an associative rep", r.name)));
    }
    let pi = r.action("l")?.add(r.action("r")?)?;
    let kind = if r.kind.is_action() { RepKind::JordanAction } else { RepKind::JordanModule };
    let star = match &r.v_product {
        Some(t) if r.kind.is_action() => Some(t.add(&t.opposite())?),
        _ => None,
    };
    let mut out = RepInstance::zero(&format!("{}+", r.name), plus(&r.base)?, kind, r.v_dim)
        .with_beta(r.beta.clone())
        .with_v_product(star);
    out.actions.clear();
    Ok(out.with_action("pi", pi))
}

/// Lie module over Minus(A) with ρ = l − r; for actions [u,v] = u·v − v·u.
pub fn minus_rep(r: &RepInstance) -> Result<RepInstance> {
    if r.family() != Family::Assoc {
        return Err(Error::semantic(format!("`{}` is not an associative rep", r.name)));
    }
    let rho = r.action("l")?.sub(r.action("r")?)?;
    let kind = if r.kind.is_action() { RepKind::LieAction } else { RepKind::LieModule };
    let br = match &r.v_product {
        Some(t) if r.kind.is_action() => Some(t.sub(&t.opposite())?),
        _ => None,
    };
    let mut out = RepInstance::zero(&format!("{}-", r.name), minus(&r.base)?, kind, r.v_dim)
        .with_beta(r.beta.clone())
        .with_v_product(br);
    out.actions.clear();
    Ok(out.with_action("rho", rho))
}
