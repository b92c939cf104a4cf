use std::fmt;

use crate::error::{Error, Result};
use crate::identity::Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub sort: String,
    pub multiplicity: usize,
}

/// A named identity `lhs = rhs` over sorted variables.
#[derive(Clone, PartialEq, Eq)]
pub struct IdentitySchema {
    name: String,
    variables: Vec<Variable>,
    lhs: Expr,
    rhs: Expr,
}

impl IdentitySchema {
    /// `vars` is a whitespace-separated list of `name:Sort`; the order fixes
    /// the basis-tuple order in witnesses.
    pub fn parse(name: &str, vars: &str, equation: &str) -> Result<Self> {
        let (l, r) = equation
            .split_once('=')
            .ok_or_else(|| Error::semantic(format!("identity `{name}` has no `=`")))?;
        let mut decl = Vec::new();
        for v in vars.split_whitespace() {
            let (n, s) = v
                .split_once(':')
                .ok_or_else(|| Error::semantic(format!("variable `{v}` lacks a sort")))?;
            decl.push((n.to_string(), s.to_string()));
        }
        Self::new(name, decl, Expr::parse(l)?, Expr::parse(r)?)
    }

    pub fn new(name: &str, vars: Vec<(String, String)>, lhs: Expr, rhs: Expr) -> Result<Self> {
        let both = Expr::Sum(vec![(1.into(), lhs.clone()), ((-1).into(), rhs.clone())]);
        let bounds = both.degree_bounds();
        for used in bounds.keys() {
            if !vars.iter().any(|(n, _)| n == used) {
                return Err(Error::semantic(format!("identity `{name}` uses undeclared variable `{used}`")));
            }
        }
        let variables = vars
            .into_iter()
            .map(|(n, sort)| {
                let multiplicity = bounds.get(&n).map(|b| b.1).unwrap_or(0);
                Variable { name: n, sort, multiplicity }
            })
            .collect();
        Ok(IdentitySchema { name: name.to_string(), variables, lhs, rhs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn lhs(&self) -> &Expr {
        &self.lhs
    }

    pub fn rhs(&self) -> &Expr {
        &self.rhs
    }

    pub fn is_multilinear(&self) -> bool {
        self.variables.iter().all(|v| v.multiplicity <= 1)
    }

    /// Every monomial of lhs − rhs has the same degree in each variable.
    pub fn is_homogeneous(&self) -> bool {
        let both = Expr::Sum(vec![(1.into(), self.lhs.clone()), ((-1).into(), self.rhs.clone())]);
        both.degree_bounds().values().all(|(lo, hi)| lo == hi)
    }

    pub fn with_name(&self, name: &str) -> Self {
        let mut s = self.clone();
        s.name = name.to_string();
        s
    }

    /// Renames op and map symbols, keeping the identity name.
    pub fn rename_symbols(&self, f: &dyn Fn(&str) -> String) -> Self {
        IdentitySchema {
            name: self.name.clone(),
            variables: self.variables.clone(),
            lhs: self.lhs.rename(f),
            rhs: self.rhs.rename(f),
        }
    }

    pub fn rename_sorts(&self, f: &dyn Fn(&str) -> String) -> Self {
        let mut s = self.clone();
        for v in &mut s.variables {
            v.sort = f(&v.sort);
        }
        s
    }

    pub(crate) fn from_parts(name: String, variables: Vec<Variable>, lhs: Expr, rhs: Expr) -> Self {
        IdentitySchema { name, variables, lhs, rhs }
    }

    pub fn ops_used(&self) -> Vec<String> {
        let (mut ops, mut maps) = (Vec::new(), Vec::new());
        self.lhs.symbols(&mut ops, &mut maps);
        self.rhs.symbols(&mut ops, &mut maps);
        ops.sort();
        ops.dedup();
        ops
    }

    pub fn maps_used(&self) -> Vec<String> {
        let (mut ops, mut maps) = (Vec::new(), Vec::new());
        self.lhs.symbols(&mut ops, &mut maps);
        self.rhs.symbols(&mut ops, &mut maps);
        maps.sort();
        maps.dedup();
        maps
    }
}

impl fmt::Display for IdentitySchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.name, self.lhs, self.rhs)
    }
}

impl fmt::Debug for IdentitySchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
