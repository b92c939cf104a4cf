//! Hemisemi-direct products, graphs, induced structures, functors and twists.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, StructureTensor, Vector};
use crate::identity::check_all;
use crate::instance::{AlgebraInstance, Family, RepInstance, RepKind, ALPHA};
use crate::operators::{certify_operator, OperatorCandidate, OperatorKind, OPERATOR};
use crate::report::{CheckReport, Witness};
use crate::reps::{certify_rep, sum_product, sum_twist};
use crate::varieties::{certify, is_morphism, schema, VarietyTag};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    HemisemiDiass,
    HemisemiLeib,
    HemisemiDiJor,
    HemisemiTriass,
    HemisemiTriLeib,
    HemisemiTriJor,
    GraphClosure,
    InducedDialgebra,
    InducedLeibniz,
    InducedJordanDialgebra,
    InducedTrialgebra,
    InducedTriLeibniz,
    InducedJordanTrialgebra,
    Minus,
    Plus,
    Dicommutator,
    AntiDicommutator,
    TriToLeibnizTrialgebra,
    TriToJordanTrialgebra,
    DiToTriZeroMiddle,
    OppositeDialgebra,
    YauTwist(String),
    TridendriformFromTrialgebra,
    DifferentialDialgebra(String),
    BimoduleMapDialgebra(String),
    CrossedModuleCheck,
}

const PLAIN: [(&str, ConstructionId); 23] = [
    ("hemisemi-diass", ConstructionId::HemisemiDiass),
    ("hemisemi-leib", ConstructionId::HemisemiLeib),
    ("hemisemi-dijor", ConstructionId::HemisemiDiJor),
    ("hemisemi-triass", ConstructionId::HemisemiTriass),
    ("hemisemi-trileib", ConstructionId::HemisemiTriLeib),
    ("hemisemi-trijor", ConstructionId::HemisemiTriJor),
    ("graph-closure", ConstructionId::GraphClosure),
    ("induced-dialgebra", ConstructionId::InducedDialgebra),
    ("induced-leibniz", ConstructionId::InducedLeibniz),
    ("induced-jordan-dialgebra", ConstructionId::InducedJordanDialgebra),
    ("induced-trialgebra", ConstructionId::InducedTrialgebra),
    ("induced-tri-leibniz", ConstructionId::InducedTriLeibniz),
    ("induced-jordan-trialgebra", ConstructionId::InducedJordanTrialgebra),
    ("minus", ConstructionId::Minus),
    ("plus", ConstructionId::Plus),
    ("dicommutator", ConstructionId::Dicommutator),
    ("anti-dicommutator", ConstructionId::AntiDicommutator),
    ("tri-to-leibniz-trialgebra", ConstructionId::TriToLeibnizTrialgebra),
    ("tri-to-jordan-trialgebra", ConstructionId::TriToJordanTrialgebra),
    ("di-to-tri-zero-middle", ConstructionId::DiToTriZeroMiddle),
    ("opposite-dialgebra", ConstructionId::OppositeDialgebra),
    ("tridendriform-from-trialgebra", ConstructionId::TridendriformFromTrialgebra),
    ("crossed-module-check", ConstructionId::CrossedModuleCheck),
];

impl ConstructionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionId::YauTwist(_) => "yau-twist",
            ConstructionId::DifferentialDialgebra(_) => "differential-dialgebra",
            ConstructionId::BimoduleMapDialgebra(_) => "bimodule-map-dialgebra",
            other => PLAIN.iter().find(|(_, c)| c == other).map(|(s, _)| *s).expect("listed"),
        }
    }

    /// Parses an id; the map-carrying ids take their map name from `map`.
    pub fn parse(s: &str, map: Option<&str>) -> Option<ConstructionId> {
        let m = || map.map(str::to_string);
        match s {
            "yau-twist" => Some(ConstructionId::YauTwist(m()?)),
            "differential-dialgebra" => Some(ConstructionId::DifferentialDialgebra(m()?)),
            "bimodule-map-dialgebra" => Some(ConstructionId::BimoduleMapDialgebra(m()?)),
            _ => PLAIN.iter().find(|(n, _)| *n == s).map(|(_, c)| c.clone()),
        }
    }

    pub fn is_hemisemi(&self) -> bool {
        matches!(
            self,
            ConstructionId::HemisemiDiass
                | ConstructionId::HemisemiLeib
                | ConstructionId::HemisemiDiJor
                | ConstructionId::HemisemiTriass
                | ConstructionId::HemisemiTriLeib
                | ConstructionId::HemisemiTriJor
        )
    }

    pub fn is_induced(&self) -> bool {
        matches!(
            self,
            ConstructionId::InducedDialgebra
                | ConstructionId::InducedLeibniz
                | ConstructionId::InducedJordanDialgebra
                | ConstructionId::InducedTrialgebra
                | ConstructionId::InducedTriLeibniz
                | ConstructionId::InducedJordanTrialgebra
        )
    }

    /// Variety the construction's output is asserted to satisfy.
    pub fn output_variety(&self) -> Option<VarietyTag> {
        use ConstructionId::*;
        Some(match self {
            HemisemiDiass | InducedDialgebra | OppositeDialgebra | DifferentialDialgebra(_)
            | BimoduleMapDialgebra(_) => VarietyTag::HomAssociativeDialgebra,
            HemisemiLeib | InducedLeibniz | Dicommutator => VarietyTag::HomLeibniz,
            HemisemiDiJor | InducedJordanDialgebra | AntiDicommutator => VarietyTag::HomJordanDialgebra,
            HemisemiTriass | InducedTrialgebra | DiToTriZeroMiddle => VarietyTag::HomAssociativeTrialgebra,
            HemisemiTriLeib | InducedTriLeibniz | TriToLeibnizTrialgebra => VarietyTag::HomLeibnizTrialgebra,
            HemisemiTriJor | InducedJordanTrialgebra | TriToJordanTrialgebra => VarietyTag::HomJordanTrialgebra,
            Minus => VarietyTag::HomLie,
            Plus => VarietyTag::HomJordan,
            TridendriformFromTrialgebra => VarietyTag::HomTridendriform,
            GraphClosure | YauTwist(_) | CrossedModuleCheck => return None,
        })
    }

    /// Source variety of a functor.
    pub fn source_variety(&self) -> Option<VarietyTag> {
        use ConstructionId::*;
        Some(match self {
            Minus | Plus | DifferentialDialgebra(_) => VarietyTag::HomAssociative,
            Dicommutator | AntiDicommutator | DiToTriZeroMiddle | OppositeDialgebra => {
                VarietyTag::HomAssociativeDialgebra
            }
            TriToLeibnizTrialgebra | TriToJordanTrialgebra | TridendriformFromTrialgebra => {
                VarietyTag::HomAssociativeTrialgebra
            }
            _ => return None,
        })
    }

    /// Hemisemi and induced constructions that need an action.
    pub fn is_tri(&self) -> bool {
        use ConstructionId::*;
        matches!(
            self,
            HemisemiTriass | HemisemiTriLeib | HemisemiTriJor | InducedTrialgebra | InducedTriLeibniz | InducedJordanTrialgebra
        )
    }

    /// Rep kinds accepted by a hemisemi or induced construction.
    fn accepts(&self, kind: RepKind) -> bool {
        use ConstructionId::*;
        match self {
            HemisemiDiass | InducedDialgebra => kind.family() == Family::Assoc,
            HemisemiLeib | InducedLeibniz => kind.family() == Family::Lie,
            HemisemiDiJor | InducedJordanDialgebra => kind.family() == Family::Jordan,
            HemisemiTriass | InducedTrialgebra => kind == RepKind::Action,
            HemisemiTriLeib | InducedTriLeibniz => kind == RepKind::LieAction,
            HemisemiTriJor | InducedJordanTrialgebra => kind == RepKind::JordanAction,
            _ => false,
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionId::YauTwist(m) | ConstructionId::DifferentialDialgebra(m) | ConstructionId::BimoduleMapDialgebra(m) => {
                write!(f, "{}({m})", self.as_str())
            }
            _ => f.write_str(self.as_str()),
        }
    }
}

/// Product carrying the V-product in tri constructions.
fn middle_product(f: Family) -> &'static str {
    match f {
        Family::Assoc => "perp",
        Family::Lie => "bracket",
        Family::Jordan => "circ",
    }
}

fn check_accepts(r: &RepInstance, what: &ConstructionId) -> Result<()> {
    if what.accepts(r.kind) {
        Ok(())
    } else {
        Err(Error::semantic(format!("{what} does not accept `{}` of kind {}", r.name, r.kind)))
    }
}

/// The hemisemi-direct product without certifying the rep first.
pub fn hemisemi_unchecked(r: &RepInstance, what: &ConstructionId) -> Result<AlgebraInstance> {
    if !what.is_hemisemi() {
        return Err(Error::semantic(format!("{what} is not a hemisemi-direct product")));
    }
    check_accepts(r, what)?;
    r.validate()?;
    let family = r.family();
    let (n, m) = (r.base.dim, r.v_dim);
    let p = r.base.product(family.base_product())?;
    let left = |act: &StructureTensor| {
        sum_product(n, m, |x, _u, y, v| Ok((p.apply(x, y)?, act.apply(x, v)?)))
    };
    let mut out = AlgebraInstance::new(&format!("{}⊕{}", r.base.name, r.name), n + m).with_alpha(sum_twist(r)?);
    match family {
        Family::Assoc => {
            let rr = r.action("r")?;
            out = out
                .with_product("dashv", sum_product(n, m, |x, u, y, _v| Ok((p.apply(x, y)?, rr.apply(y, u)?)))?)
                .with_product("vdash", left(r.action("l")?)?);
        }
        Family::Lie => out = out.with_product("leib", left(r.action("rho")?)?),
        Family::Jordan => out = out.with_product("bullet", left(r.action("pi")?)?),
    }
    if what.is_tri() {
        let vp = r.v_product.as_ref().expect("validated action has a V-product");
        let mid = sum_product(n, m, |x, u, y, v| Ok((p.apply(x, y)?, vp.apply(u, v)?)))?;
        out = out.with_product(middle_product(family), mid);
    }
    Ok(out.with_variety(what.output_variety().expect("hemisemi has an output variety")))
}

/// A⊕V with the hemisemi-direct product structure `what`; the rep must certify.
pub fn hemisemi(r: &RepInstance, what: &ConstructionId) -> Result<AlgebraInstance> {
    check_accepts(r, what)?;
    let rep = certify_rep(r)?;
    if !rep.is_pass() {
        return Err(Error::Rejected(format!("`{}` does not certify: {rep}", r.name)));
    }
    hemisemi_unchecked(r, what)
}

/// Tests whether Gr(K) = {Ku + u} is closed under the ambient products and twist.
pub fn graph_closure(c: &OperatorCandidate, ambient: &ConstructionId) -> Result<CheckReport> {
    let r = c.rep()?;
    c.validate()?;
    let h = hemisemi_unchecked(r, ambient)?;
    let (n, m) = (r.base.dim, r.v_dim);
    let gen = |i: usize| c.map.column(i).concat(&Vector::basis(m, i));
    let check = format!("graph-closure:{ambient}");
    let mut tuples = 0;
    let member = |z: &Vector| -> Result<Option<(Vector, Vector)>> {
        let (a, w) = z.split(n);
        let kw = c.map.apply(&w)?;
        Ok((a != kw).then_some((a, kw)))
    };
    let fail = |identity: String, vars: Vec<&str>, tuple: Vec<usize>, (lhs, rhs): (Vector, Vector), tuples: u64| {
        let mut rep = CheckReport::fail(
            &check,
            Witness {
                identity,
                variables: vars.into_iter().map(String::from).collect(),
                tuple,
                sample: None,
                lhs,
                rhs,
            },
        );
        rep.tuples = tuples;
        rep
    };
    let tw = h.alpha()?;
    for i in 0..m {
        tuples += 1;
        if let Some(bad) = member(&tw.apply(&gen(i))?)? {
            return Ok(fail("graph-twist".into(), vec!["u"], vec![i], bad, tuples));
        }
    }
    for (p, t) in &h.products {
        for i in 0..m {
            for j in 0..m {
                tuples += 1;
                if let Some(bad) = member(&t.apply(&gen(i), &gen(j))?)? {
                    return Ok(fail(format!("graph:{p}"), vec!["u", "v"], vec![i, j], bad, tuples));
                }
            }
        }
    }
    let mut rep = CheckReport::pass(&check);
    rep.tuples = tuples;
    Ok(rep)
}

/// The structure induced on V by a (homomorphic) relative averaging operator.
pub fn induce(c: &OperatorCandidate, what: &ConstructionId) -> Result<AlgebraInstance> {
    if !what.is_induced() {
        return Err(Error::semantic(format!("{what} is not an induced structure")));
    }
    let r = c.rep()?;
    check_accepts(r, what)?;
    let kind = if what.is_tri() { OperatorKind::HomomorphicRelAvg } else { OperatorKind::RelAvg };
    let rep = certify_operator(c, &kind)?;
    if !rep.is_pass() {
        return Err(Error::Rejected(format!("`{}` is not {kind}: {rep}", c.name)));
    }
    induce_unchecked(c, what)
}

/// As `induce`, skipping the operator certification.
pub fn induce_unchecked(c: &OperatorCandidate, what: &ConstructionId) -> Result<AlgebraInstance> {
    let r = c.rep()?;
    check_accepts(r, what)?;
    c.validate()?;
    let m = r.v_dim;
    let by_first = |act: &StructureTensor| -> Result<StructureTensor> {
        act.precompose(&c.map, &LinearMap::identity(m))
    };
    let mut out = AlgebraInstance::new(&format!("{}({})", what.as_str(), c.name), m).with_alpha(r.beta.clone());
    match r.family() {
        Family::Assoc => {
            let rr = by_first(r.action("r")?)?.opposite();
            out = out.with_product("vdash", by_first(r.action("l")?)?).with_product("dashv", rr);
        }
        Family::Lie => out = out.with_product("leib", by_first(r.action("rho")?)?),
        Family::Jordan => out = out.with_product("bullet", by_first(r.action("pi")?)?),
    }
    if what.is_tri() {
        out = out.with_product(middle_product(r.family()), r.v_product.clone().expect("validated action has a V-product"));
    }
    Ok(out.with_variety(what.output_variety().expect("induced has an output variety")))
}

/// [x,y] = x·y − y·x.
pub fn minus(a: &AlgebraInstance) -> Result<AlgebraInstance> {
    let m = a.product("mul")?;
    Ok(retitled(a, "minus", vec![("bracket", m.sub(&m.opposite())?)], VarietyTag::HomLie))
}

/// x∘y = x·y + y·x.
pub fn plus(a: &AlgebraInstance) -> Result<AlgebraInstance> {
    let m = a.product("mul")?;
    Ok(retitled(a, "plus", vec![("circ", m.add(&m.opposite())?)], VarietyTag::HomJordan))
}

fn retitled(a: &AlgebraInstance, tag: &str, products: Vec<(&str, StructureTensor)>, v: VarietyTag) -> AlgebraInstance {
    let mut out = AlgebraInstance::new(&format!("{tag}({})", a.name), a.dim);
    out.maps = a.maps.clone();
    for (n, t) in products {
        out = out.with_product(n, t);
    }
    out.with_variety(v)
}

/// Applies a functor without checking the source variety.
pub fn functor_unchecked(a: &AlgebraInstance, what: &ConstructionId) -> Result<AlgebraInstance> {
    use ConstructionId::*;
    let p = |n: &str| a.product(n).cloned();
    let out_v = what
        .output_variety()
        .ok_or_else(|| Error::semantic(format!("{what} is not a functor")))?;
    let products: Vec<(&str, StructureTensor)> = match what {
        Minus => return minus(a),
        Plus => return plus(a),
        Dicommutator => vec![("leib", p("vdash")?.sub(&p("dashv")?.opposite())?)],
        AntiDicommutator => vec![("bullet", p("vdash")?.add(&p("dashv")?.opposite())?)],
        TriToLeibnizTrialgebra => vec![
            ("leib", p("vdash")?.sub(&p("dashv")?.opposite())?),
            ("bracket", p("perp")?.sub(&p("perp")?.opposite())?),
        ],
        TriToJordanTrialgebra => vec![
            ("bullet", p("vdash")?.add(&p("dashv")?.opposite())?),
            ("circ", p("perp")?.add(&p("perp")?.opposite())?),
        ],
        DiToTriZeroMiddle => {
            vec![("dashv", p("dashv")?), ("vdash", p("vdash")?), ("perp", StructureTensor::square(a.dim))]
        }
        OppositeDialgebra => vec![("dashv", p("vdash")?.opposite()), ("vdash", p("dashv")?.opposite())],
        TridendriformFromTrialgebra => {
            let neg = crate::exact::Scalar::int(-1);
            vec![("prec", p("dashv")?.scale(&neg)), ("succ", p("vdash")?.scale(&neg)), ("dot", p("perp")?)]
        }
        _ => return Err(Error::semantic(format!("{what} is not a functor"))),
    };
    Ok(retitled(a, what.as_str(), products, out_v))
}

/// Applies a functor after checking that `a` lies in its source variety.
pub fn functor(a: &AlgebraInstance, what: &ConstructionId) -> Result<AlgebraInstance> {
    let src = what
        .source_variety()
        .ok_or_else(|| Error::semantic(format!("{what} is not a functor")))?;
    let rep = certify(a, src)?;
    if !rep.is_pass() {
        return Err(Error::semantic(format!("`{}` is not {src}: {rep}", a.name)));
    }
    functor_unchecked(a, what)
}

/// Every product composed with φ, twist replaced by φ∘α, without the endomorphism check.
pub fn yau_twist_unchecked(a: &AlgebraInstance, phi_name: &str) -> Result<AlgebraInstance> {
    a.validate()?;
    let phi = a.map(phi_name)?.clone();
    let mut out = a.clone();
    for t in out.products.values_mut() {
        *t = t.compose_out(&phi)?;
    }
    out.maps.insert(ALPHA.to_string(), phi.compose(a.alpha()?)?);
    out.name = format!("{}^{phi_name}", a.name);
    Ok(out)
}

/// Yau twist by an endomorphism named `phi_name`; non-endomorphisms are rejected.
pub fn yau_twist(a: &AlgebraInstance, phi_name: &str) -> Result<AlgebraInstance> {
    let rep = is_morphism(a.map(phi_name)?, a, a)?;
    if !rep.is_pass() {
        return Err(Error::Rejected(format!("`{phi_name}` is not an endomorphism of `{}`: {rep}", a.name)));
    }
    yau_twist_unchecked(a, phi_name)
}

fn gate(check: CheckReport, what: &str) -> Result<()> {
    if check.is_pass() {
        Ok(())
    } else {
        Err(Error::Rejected(format!("{what}: {check}")))
    }
}

/// x⊣y = x·d(y), x⊢y = d(x)·y for a square-zero derivation d commuting with alpha.
pub fn differential_dialgebra(a: &AlgebraInstance, d_name: &str) -> Result<AlgebraInstance> {
    let d = a.map(d_name)?.clone();
    let mul = a.product("mul")?.clone();
    let i = a.interpretation()?.endo("d", "A", d.clone());
    let xy = "x:A y:A";
    let pre = vec![
        schema("differential-square", "x:A", "d(d(x)) = 0"),
        schema("differential-leibniz", xy, "d(mul(x, y)) = mul(d(x), y) + mul(x, d(y))"),
        schema("differential-twist", "x:A", "d(alpha(x)) = alpha(d(x))"),
    ];
    gate(certify(a, VarietyTag::HomAssociative)?, "not hom-associative")?;
    gate(check_all("differential", &pre, &i)?, "differential preconditions")?;
    let id = LinearMap::identity(a.dim);
    let mut out = AlgebraInstance::new(&format!("{}.d", a.name), a.dim)
        .with_product("dashv", mul.precompose(&id, &d)?)
        .with_product("vdash", mul.precompose(&d, &id)?)
        .with_variety(VarietyTag::HomAssociativeDialgebra);
    out.maps = a.maps.clone();
    Ok(out)
}

/// u⊣u′ = r(f(u′))u, u⊢u′ = l(f(u))u′ on V for a bimodule map f: V → A.
pub fn bimodule_map_dialgebra(f: &OperatorCandidate) -> Result<AlgebraInstance> {
    let r = f.rep()?;
    if r.family() != Family::Assoc {
        return Err(Error::semantic("bimodule maps need an associative rep"));
    }
    let pre = vec![
        schema("bimodule-map-left", "x:A u:V", "K(l(x, u)) = mul(x, K(u))"),
        schema("bimodule-map-right", "x:A u:V", "K(r(x, u)) = mul(K(u), x)"),
        schema("bimodule-map-twist", "u:V", "K(beta(u)) = alpha(K(u))"),
    ];
    gate(certify_rep(r)?, "rep does not certify")?;
    let i = r.interpretation()?.map(OPERATOR, ("V", "A"), f.map.clone());
    gate(check_all("bimodule-map", &pre, &i)?, "bimodule map preconditions")?;
    let id = LinearMap::identity(r.v_dim);
    Ok(AlgebraInstance::new(&format!("{}.{}", r.name, f.name), r.v_dim)
        .with_alpha(r.beta.clone())
        .with_product("dashv", r.action("r")?.precompose(&f.map, &id)?.opposite())
        .with_product("vdash", r.action("l")?.precompose(&f.map, &id)?)
        .with_variety(VarietyTag::HomAssociativeDialgebra))
}

/// Crossed-module clauses for d: V → A over an associative action.
pub fn crossed_module_check(act: &RepInstance, d: &LinearMap) -> Result<CheckReport> {
    if act.kind != RepKind::Action {
        return Err(Error::semantic(format!("`{}` is not an associative action", act.name)));
    }
    let c = OperatorCandidate::on_rep("d", act.clone(), d.clone());
    c.validate()?;
    let i = act.interpretation()?.map(OPERATOR, ("V", "A"), d.clone());
    let uv = "u:V v:V";
    let clauses = vec![
        schema("crossed-twist", "u:V", "K(beta(u)) = alpha(K(u))"),
        schema("crossed-morphism", uv, "K(vmul(u, v)) = mul(K(u), K(v))"),
        schema("crossed-left", "x:A u:V", "K(l(x, u)) = mul(x, K(u))"),
        schema("crossed-right", "x:A u:V", "K(r(x, u)) = mul(K(u), x)"),
        schema("crossed-peiffer-left", uv, "l(K(u), v) = vmul(u, v)"),
        schema("crossed-peiffer-right", uv, "r(K(v), u) = vmul(u, v)"),
    ];
    let rep = check_all("crossed-module", &clauses, &i)?;
    if !rep.is_pass() {
        return Ok(rep);
    }
    let op = certify_operator(&c, &OperatorKind::HomomorphicRelAvg)?;
    if op.is_pass() {
        Ok(rep.with_note("homomorphic-rel-avg: pass"))
    } else {
        Ok(op.renamed("crossed-module").with_note("crossed module clauses hold but d is not homomorphic"))
    }
}
