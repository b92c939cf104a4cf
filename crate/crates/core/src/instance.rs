//! Algebra and representation instances given by structure constants.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, StructureTensor};
use crate::identity::Interpretation;
use crate::varieties::VarietyTag;

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";

/// A based carrier with named products and named linear maps; `alpha` is the twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInstance {
    pub name: String,
    pub dim: usize,
    pub products: BTreeMap<String, StructureTensor>,
    pub maps: BTreeMap<String, LinearMap>,
    pub variety: Option<VarietyTag>,
}

impl AlgebraInstance {
    /// An instance with no products and alpha = id.
    pub fn new(name: &str, dim: usize) -> Self {
        let mut maps = BTreeMap::new();
        maps.insert(ALPHA.to_string(), LinearMap::identity(dim));
        AlgebraInstance { name: name.to_string(), dim, products: BTreeMap::new(), maps, variety: None }
    }

    pub fn with_product(mut self, name: &str, t: StructureTensor) -> Self {
        self.products.insert(name.to_string(), t);
        self
    }

    pub fn with_map(mut self, name: &str, m: LinearMap) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_alpha(self, m: LinearMap) -> Self {
        self.with_map(ALPHA, m)
    }

    pub fn with_variety(mut self, v: VarietyTag) -> Self {
        self.variety = Some(v);
        self
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn product(&self, name: &str) -> Result<&StructureTensor> {
        self.products
            .get(name)
            .ok_or_else(|| Error::semantic(format!("algebra `{}` has no product `{name}`", self.name)))
    }

    pub fn map(&self, name: &str) -> Result<&LinearMap> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::semantic(format!("algebra `{}` has no map `{name}`", self.name)))
    }

    pub fn alpha(&self) -> Result<&LinearMap> {
        self.map(ALPHA)
    }

    pub fn validate(&self) -> Result<()> {
        for (n, t) in &self.products {
            if t.dims() != (self.dim, self.dim, self.dim) {
                return Err(Error::shape(format!("product `{n}` of `{}` has dims {:?}", self.name, t.dims())));
            }
        }
        for (n, m) in &self.maps {
            if m.src_dim() != self.dim || m.dst_dim() != self.dim {
                return Err(Error::shape(format!("map `{n}` of `{}` is not an endomorphism", self.name)));
            }
        }
        Ok(())
    }

    /// Interpretation on the single sort `A`.
    pub fn interpretation(&self) -> Result<Interpretation> {
        self.validate()?;
        let mut i = Interpretation::new().sort("A", self.dim);
        for (n, t) in &self.products {
            i = i.product(n, "A", t.clone());
        }
        for (n, m) in &self.maps {
            i = i.endo(n, "A", m.clone());
        }
        Ok(i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepKind {
    Bimodule,
    Action,
    LieModule,
    LieAction,
    JordanModule,
    JordanAction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Assoc,
    Lie,
    Jordan,
}

impl Family {
    /// Product symbol of the base algebra.
    pub fn base_product(&self) -> &'static str {
        match self {
            Family::Assoc => "mul",
            Family::Lie => "bracket",
            Family::Jordan => "circ",
        }
    }

    /// Action map symbols, algebra argument first.
    pub fn action_maps(&self) -> &'static [&'static str] {
        match self {
            Family::Assoc => &["l", "r"],
            Family::Lie => &["rho"],
            Family::Jordan => &["pi"],
        }
    }

    /// Product symbol on the representation space of an action.
    pub fn v_product(&self) -> &'static str {
        match self {
            Family::Assoc => "vmul",
            Family::Lie => "vbracket",
            Family::Jordan => "vstar",
        }
    }

    pub fn base_variety(&self) -> VarietyTag {
        match self {
            Family::Assoc => VarietyTag::HomAssociative,
            Family::Lie => VarietyTag::HomLie,
            Family::Jordan => VarietyTag::HomJordan,
        }
    }
}

impl RepKind {
    pub const ALL: [RepKind; 6] = [
        RepKind::Bimodule,
        RepKind::Action,
        RepKind::LieModule,
        RepKind::LieAction,
        RepKind::JordanModule,
        RepKind::JordanAction,
    ];

    pub fn family(&self) -> Family {
        match self {
            RepKind::Bimodule | RepKind::Action => Family::Assoc,
            RepKind::LieModule | RepKind::LieAction => Family::Lie,
            RepKind::JordanModule | RepKind::JordanAction => Family::Jordan,
        }
    }

    pub fn is_action(&self) -> bool {
        matches!(self, RepKind::Action | RepKind::LieAction | RepKind::JordanAction)
    }

    /// The module kind underlying an action kind (identity on module kinds).
    pub fn module_kind(&self) -> RepKind {
        match self {
            RepKind::Action => RepKind::Bimodule,
            RepKind::LieAction => RepKind::LieModule,
            RepKind::JordanAction => RepKind::JordanModule,
            k => *k,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RepKind::Bimodule => "bimodule",
            RepKind::Action => "action",
            RepKind::LieModule => "lie-module",
            RepKind::LieAction => "lie-action",
            RepKind::JordanModule => "jordan-module",
            RepKind::JordanAction => "jordan-action",
        }
    }

    pub fn parse(s: &str) -> Option<RepKind> {
        RepKind::ALL.iter().copied().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A representation or action over a base algebra on a space V.
///
/// Action maps are mixed-sort tensors A×V→V with the algebra argument
/// first, so `r` holds r(x)u at (x, u).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepInstance {
    pub name: String,
    pub base: AlgebraInstance,
    pub kind: RepKind,
    pub v_dim: usize,
    pub actions: BTreeMap<String, StructureTensor>,
    pub beta: LinearMap,
    pub v_product: Option<StructureTensor>,
}

impl RepInstance {
    /// Zero actions, beta = id, and a zero V-product for action kinds.
    pub fn zero(name: &str, base: AlgebraInstance, kind: RepKind, v_dim: usize) -> Self {
        let n = base.dim;
        let actions = kind
            .family()
            .action_maps()
            .iter()
            .map(|a| (a.to_string(), StructureTensor::zeros(n, v_dim, v_dim)))
            .collect();
        RepInstance {
            name: name.to_string(),
            base,
            kind,
            v_dim,
            actions,
            beta: LinearMap::identity(v_dim),
            v_product: kind.is_action().then(|| StructureTensor::square(v_dim)),
        }
    }

    pub fn with_action(mut self, name: &str, t: StructureTensor) -> Self {
        self.actions.insert(name.to_string(), t);
        self
    }

    pub fn with_beta(mut self, m: LinearMap) -> Self {
        self.beta = m;
        self
    }

    pub fn with_v_product(mut self, t: Option<StructureTensor>) -> Self {
        self.v_product = t;
        self
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn with_kind(mut self, kind: RepKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn family(&self) -> Family {
        self.kind.family()
    }

    pub fn action(&self, name: &str) -> Result<&StructureTensor> {
        self.actions
            .get(name)
            .ok_or_else(|| Error::semantic(format!("rep `{}` has no action map `{name}`", self.name)))
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        for a in self.family().action_maps() {
            let t = self.action(a)?;
            if t.dims() != (self.base.dim, self.v_dim, self.v_dim) {
                return Err(Error::shape(format!("action `{a}` of `{}` has dims {:?}", self.name, t.dims())));
            }
        }
        if self.actions.len() != self.family().action_maps().len() {
            return Err(Error::semantic(format!("rep `{}` has unexpected action maps", self.name)));
        }
        if self.beta.src_dim() != self.v_dim || self.beta.dst_dim() != self.v_dim {
            return Err(Error::shape(format!("beta of `{}` is not an endomorphism of V", self.name)));
        }
        match (&self.v_product, self.kind.is_action()) {
            (Some(t), _) if t.dims() != (self.v_dim, self.v_dim, self.v_dim) => {
                Err(Error::shape(format!("V-product of `{}` has dims {:?}", self.name, t.dims())))
            }
            (None, true) => Err(Error::semantic(format!("action `{}` lacks a product on V", self.name))),
            _ => Ok(()),
        }
    }

    /// Interpretation on sorts `A` and `V`.
    pub fn interpretation(&self) -> Result<Interpretation> {
        self.validate()?;
        let mut i = self.base.interpretation()?.sort("V", self.v_dim).endo(BETA, "V", self.beta.clone());
        for (n, t) in &self.actions {
            i = i.op(n, ("A", "V", "V"), t.clone());
        }
        if let Some(t) = &self.v_product {
            i = i.product(self.family().v_product(), "V", t.clone());
        }
        Ok(i)
    }
}
