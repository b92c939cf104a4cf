//! Operator certifiers: averaging, relative averaging, Nijenhuis and O-operators.

use std::fmt;

use crate::constructions::{hemisemi, ConstructionId};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar};
use crate::identity::{check_all, check_schema, IdentitySchema, Interpretation};
use crate::instance::{AlgebraInstance, Family, RepInstance, RepKind};
use crate::report::{CheckReport, Status};
use crate::varieties::schema;

/// Map symbol the operator is bound to in checks.
pub const OPERATOR: &str = "K";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorDomain {
    /// K: V → A over a representation.
    OnRep(RepInstance),
    /// T: A → A, checked against every product of A.
    OnAlgebra(AlgebraInstance),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorCandidate {
    pub name: String,
    pub domain: OperatorDomain,
    pub map: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Averaging,
    RelAvgLeft,
    RelAvgRight,
    RelAvg,
    HomomorphicRelAvg,
    Nijenhuis,
    OOperator(Scalar),
}

impl OperatorKind {
    pub fn as_str(&self) -> String {
        match self {
            OperatorKind::Averaging => "averaging".into(),
            OperatorKind::RelAvgLeft => "rel-avg-left".into(),
            OperatorKind::RelAvgRight => "rel-avg-right".into(),
            OperatorKind::RelAvg => "rel-avg".into(),
            OperatorKind::HomomorphicRelAvg => "homomorphic-rel-avg".into(),
            OperatorKind::Nijenhuis => "nijenhuis".into(),
            OperatorKind::OOperator(w) => format!("o-operator({w})"),
        }
    }

    /// Parses a kebab-case kind; `weight` is used by `o-operator`.
    pub fn parse(s: &str, weight: Option<Scalar>) -> Option<OperatorKind> {
        Some(match s {
            "averaging" => OperatorKind::Averaging,
            "rel-avg-left" => OperatorKind::RelAvgLeft,
            "rel-avg-right" => OperatorKind::RelAvgRight,
            "rel-avg" => OperatorKind::RelAvg,
            "homomorphic-rel-avg" => OperatorKind::HomomorphicRelAvg,
            "nijenhuis" => OperatorKind::Nijenhuis,
            "o-operator" => OperatorKind::OOperator(weight?),
            _ => return None,
        })
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str())
    }
}

impl OperatorCandidate {
    pub fn on_rep(name: &str, rep: RepInstance, map: LinearMap) -> Self {
        OperatorCandidate { name: name.to_string(), domain: OperatorDomain::OnRep(rep), map }
    }

    pub fn on_algebra(name: &str, a: AlgebraInstance, map: LinearMap) -> Self {
        OperatorCandidate { name: name.to_string(), domain: OperatorDomain::OnAlgebra(a), map }
    }

    pub fn rep(&self) -> Result<&RepInstance> {
        match &self.domain {
            OperatorDomain::OnRep(r) => Ok(r),
            OperatorDomain::OnAlgebra(_) => Err(Error::semantic(format!("`{}` is not over a representation", self.name))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (src, dst) = match &self.domain {
            OperatorDomain::OnRep(r) => {
                r.validate()?;
                (r.v_dim, r.base.dim)
            }
            OperatorDomain::OnAlgebra(a) => {
                a.validate()?;
                (a.dim, a.dim)
            }
        };
        if self.map.src_dim() != src || self.map.dst_dim() != dst {
            return Err(Error::shape(format!(
                "operator `{}` is {}→{}, expected {src}→{dst}",
                self.name,
                self.map.src_dim(),
                self.map.dst_dim()
            )));
        }
        Ok(())
    }

    fn interpretation(&self) -> Result<Interpretation> {
        self.validate()?;
        Ok(match &self.domain {
            OperatorDomain::OnRep(r) => r.interpretation()?.map(OPERATOR, ("V", "A"), self.map.clone()),
            OperatorDomain::OnAlgebra(a) => a.interpretation()?.endo(OPERATOR, "A", self.map.clone()),
        })
    }

    /// The same candidate with map scaled by `s`.
    pub fn scaled(&self, s: &Scalar) -> Self {
        OperatorCandidate { name: self.name.clone(), domain: self.domain.clone(), map: self.map.scale(s) }
    }
}

fn intertwine(c: &OperatorCandidate) -> IdentitySchema {
    match c.domain {
        OperatorDomain::OnRep(_) => schema("intertwine", "u:V", "K(beta(u)) = alpha(K(u))"),
        OperatorDomain::OnAlgebra(_) => schema("intertwine", "x:A", "K(alpha(x)) = alpha(K(x))"),
    }
}

fn weighted(w: &Scalar, term: &str) -> String {
    if w.is_zero() {
        String::new()
    } else if w.is_negative() {
        format!(" - {}*{term}", w.abs())
    } else {
        format!(" + {w}*{term}")
    }
}

fn rep_clauses(r: &RepInstance, kind: &OperatorKind) -> Result<Vec<IdentitySchema>> {
    let uv = "u:V v:V";
    let family = r.family();
    let left = || match family {
        Family::Assoc => schema("left", uv, "mul(K(u), K(v)) = K(l(K(u), v))"),
        Family::Lie => schema("left", uv, "bracket(K(u), K(v)) = K(rho(K(u), v))"),
        Family::Jordan => schema("left", uv, "circ(K(u), K(v)) = K(pi(K(u), v))"),
    };
    let right = || schema("right", uv, "mul(K(u), K(v)) = K(r(K(v), u))");
    let two_sided = || if family == Family::Assoc { vec![left(), right()] } else { vec![left()] };
    let need_action = || {
        if r.kind.is_action() {
            Ok(())
        } else {
            Err(Error::semantic(format!("kind {kind} needs an action, `{}` is a {}", r.name, r.kind)))
        }
    };
    Ok(match kind {
        OperatorKind::RelAvgLeft | OperatorKind::RelAvgRight if family != Family::Assoc => {
            return Err(Error::semantic(format!("one-sided operators need an associative rep, not {}", r.kind)))
        }
        OperatorKind::RelAvgLeft => vec![left()],
        OperatorKind::RelAvgRight => vec![right()],
        OperatorKind::RelAvg => two_sided(),
        OperatorKind::HomomorphicRelAvg => {
            need_action()?;
            let (p, vp) = (family.base_product(), family.v_product());
            let mut v = two_sided();
            v.push(schema("homomorphic", uv, &format!("K({vp}(u, v)) = {p}(K(u), K(v))")));
            v
        }
        OperatorKind::OOperator(w) => {
            need_action()?;
            if r.kind != RepKind::Action {
                return Err(Error::semantic("O-operators need an associative action"));
            }
            vec![schema(
                "o-operator",
                uv,
                &format!("mul(K(u), K(v)) = K(l(K(u), v) + r(K(v), u){})", weighted(w, "vmul(u, v)")),
            )]
        }
        OperatorKind::Averaging | OperatorKind::Nijenhuis => {
            return Err(Error::semantic(format!("kind {kind} is defined on an algebra, not on a rep")))
        }
    })
}

fn algebra_clauses(a: &AlgebraInstance, kind: &OperatorKind) -> Result<Vec<IdentitySchema>> {
    let xy = "x:A y:A";
    let left = |p: &str| schema(&format!("left:{p}"), xy, &format!("{p}(K(x), K(y)) = K({p}(K(x), y))"));
    let right = |p: &str| schema(&format!("right:{p}"), xy, &format!("{p}(K(x), K(y)) = K({p}(x, K(y)))"));
    if a.products.is_empty() {
        return Err(Error::semantic(format!("algebra `{}` has no products", a.name)));
    }
    let mut out = Vec::new();
    match kind {
        OperatorKind::Averaging => {
            for p in a.products.keys() {
                out.push(left(p));
                out.push(right(p));
            }
        }
        OperatorKind::RelAvgLeft | OperatorKind::RelAvgRight | OperatorKind::RelAvg => {
            a.product("mul")?;
            if *kind != OperatorKind::RelAvgRight {
                out.push(left("mul"));
            }
            if *kind != OperatorKind::RelAvgLeft {
                out.push(right("mul"));
            }
        }
        OperatorKind::Nijenhuis => {
            for p in a.products.keys() {
                out.push(schema(
                    &format!("nijenhuis:{p}"),
                    xy,
                    &format!("{p}(K(x), K(y)) = K({p}(K(x), y) + {p}(x, K(y)) - K({p}(x, y)))"),
                ));
            }
        }
        _ => return Err(Error::semantic(format!("kind {kind} needs a representation"))),
    }
    Ok(out)
}

/// Certifies `c` as an operator of `kind`; a failed intertwining check is reported as not admissible.
pub fn certify_operator(c: &OperatorCandidate, kind: &OperatorKind) -> Result<CheckReport> {
    let clauses = match &c.domain {
        OperatorDomain::OnRep(r) => rep_clauses(r, kind)?,
        OperatorDomain::OnAlgebra(a) => algebra_clauses(a, kind)?,
    };
    let interp = c.interpretation()?;
    let check = kind.as_str();
    let tw = check_schema(&intertwine(c), &interp)?;
    if !tw.is_pass() {
        let mut rep = tw.renamed(&check);
        rep.status = Status::NotAdmissible;
        return Ok(rep);
    }
    let mut rep = check_all(&check, &clauses, &interp)?;
    rep.tuples += tw.tuples;
    Ok(rep)
}

/// Kβ = αK (Tα = αT on algebras).
pub fn is_admissible(c: &OperatorCandidate) -> Result<bool> {
    Ok(check_schema(&intertwine(c), &c.interpretation()?)?.is_pass())
}

/// The hemisemi construction whose Nijenhuis operators correspond to operators on `kind`.
pub fn ambient_for(kind: RepKind) -> ConstructionId {
    match kind {
        RepKind::Bimodule => ConstructionId::HemisemiDiass,
        RepKind::LieModule => ConstructionId::HemisemiLeib,
        RepKind::JordanModule => ConstructionId::HemisemiDiJor,
        RepKind::Action => ConstructionId::HemisemiTriass,
        RepKind::LieAction => ConstructionId::HemisemiTriLeib,
        RepKind::JordanAction => ConstructionId::HemisemiTriJor,
    }
}

/// N(x+u) = K(u) on the hemisemi-direct product `ambient`.
pub fn nijenhuis_of(c: &OperatorCandidate, ambient: &ConstructionId) -> Result<OperatorCandidate> {
    let h = hemisemi(c.rep()?, ambient)?;
    nijenhuis_in(c, h)
}

/// N(x+u) = K(u) on an already built hemisemi-direct product `h`.
pub fn nijenhuis_in(c: &OperatorCandidate, h: AlgebraInstance) -> Result<OperatorCandidate> {
    let r = c.rep()?;
    c.validate()?;
    let (n, m) = (r.base.dim, r.v_dim);
    if h.dim != n + m {
        return Err(Error::shape(format!("`{}` is not A⊕V for `{}`", h.name, r.name)));
    }
    let map = LinearMap::from_fn(n + m, n + m, |row, col| {
        if row < n && col >= n {
            c.map.get(row, col - n).clone()
        } else {
            Scalar::zero()
        }
    });
    Ok(OperatorCandidate::on_algebra(&format!("N_{}", c.name), h, map))
}

/// K̄(x+u) = K(u) + u over (A⊕V, ⊣) and over (A⊕V, ⊢), in that order.
///
/// The first certifies `RelAvgRight`, the second `RelAvgLeft`.
pub fn lift_to_averaging(c: &OperatorCandidate) -> Result<(OperatorCandidate, OperatorCandidate)> {
    let r = c.rep()?;
    if r.family() != Family::Assoc {
        return Err(Error::semantic("lifting is defined for associative reps"));
    }
    let rep = certify_operator(c, &OperatorKind::RelAvg)?;
    if !rep.is_pass() {
        return Err(Error::Rejected(format!("`{}` is not a relative averaging operator: {rep}", c.name)));
    }
    let h = hemisemi(r, &ConstructionId::HemisemiDiass)?;
    let (n, m) = (r.base.dim, r.v_dim);
    let map = LinearMap::from_fn(n + m, n + m, |row, col| {
        if col < n {
            Scalar::zero()
        } else if row < n {
            c.map.get(row, col - n).clone()
        } else if row == col {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let single = |p: &str| -> Result<AlgebraInstance> {
        Ok(AlgebraInstance::new(&format!("{}[{p}]", h.name), n + m)
            .with_product("mul", h.product(p)?.clone())
            .with_alpha(h.alpha()?.clone()))
    };
    Ok((
        OperatorCandidate::on_algebra(&format!("{}-bar", c.name), single("dashv")?, map.clone()),
        OperatorCandidate::on_algebra(&format!("{}-bar", c.name), single("vdash")?, map),
    ))
}
