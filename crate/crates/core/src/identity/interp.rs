use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, StructureTensor};

#[derive(Clone, Debug)]
pub struct OpBinding {
    pub sig: (String, String, String),
    pub tensor: StructureTensor,
}

#[derive(Clone, Debug)]
pub struct MapBinding {
    pub sig: (String, String),
    pub map: LinearMap,
}

/// Binds sorts to dimensions, op symbols to tensors and map symbols to linear maps.
#[derive(Clone, Debug, Default)]
pub struct Interpretation {
    sorts: BTreeMap<String, usize>,
    ops: BTreeMap<String, OpBinding>,
    maps: BTreeMap<String, MapBinding>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sort(mut self, name: &str, dim: usize) -> Self {
        self.sorts.insert(name.to_string(), dim);
        self
    }

    /// Binds a square product on one sort.
    pub fn product(self, name: &str, sort: &str, t: StructureTensor) -> Self {
        self.op(name, (sort, sort, sort), t)
    }

    pub fn op(mut self, name: &str, sig: (&str, &str, &str), t: StructureTensor) -> Self {
        self.ops.insert(
            name.to_string(),
            OpBinding { sig: (sig.0.to_string(), sig.1.to_string(), sig.2.to_string()), tensor: t },
        );
        self
    }

    pub fn endo(self, name: &str, sort: &str, m: LinearMap) -> Self {
        self.map(name, (sort, sort), m)
    }

    pub fn map(mut self, name: &str, sig: (&str, &str), m: LinearMap) -> Self {
        self.maps.insert(name.to_string(), MapBinding { sig: (sig.0.to_string(), sig.1.to_string()), map: m });
        self
    }

    pub fn sort_dim(&self, sort: &str) -> Result<usize> {
        self.sorts.get(sort).copied().ok_or_else(|| Error::semantic(format!("unbound sort `{sort}`")))
    }

    pub fn get_op(&self, name: &str) -> Result<&OpBinding> {
        self.ops.get(name).ok_or_else(|| Error::semantic(format!("unbound op symbol `{name}`")))
    }

    pub fn get_map(&self, name: &str) -> Result<&MapBinding> {
        self.maps.get(name).ok_or_else(|| Error::semantic(format!("unbound map symbol `{name}`")))
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.ops.contains_key(name)
    }

    /// Checks that every tensor and map agrees with its declared sort dims.
    pub fn validate(&self) -> Result<()> {
        for (name, b) in &self.ops {
            let d = (self.sort_dim(&b.sig.0)?, self.sort_dim(&b.sig.1)?, self.sort_dim(&b.sig.2)?);
            if b.tensor.dims() != d {
                return Err(Error::shape(format!("op `{name}` has dims {:?}, signature needs {d:?}", b.tensor.dims())));
            }
        }
        for (name, b) in &self.maps {
            let (s, t) = (self.sort_dim(&b.sig.0)?, self.sort_dim(&b.sig.1)?);
            if b.map.src_dim() != s || b.map.dst_dim() != t {
                return Err(Error::shape(format!(
                    "map `{name}` is {}→{}, signature needs {s}→{t}",
                    b.map.src_dim(),
                    b.map.dst_dim()
                )));
            }
        }
        Ok(())
    }
}
