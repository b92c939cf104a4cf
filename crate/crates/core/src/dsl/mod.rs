//! Definition language for `.halg` files.
//!
//! Blocks are `algebra`, `rep` and `operator`, each closed by `end`;
//! basis vectors are written `e<k>` on algebras and `u<k>` on
//! representation spaces, 1-based.

mod lexer;
mod parser;
mod writer;

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::instance::{AlgebraInstance, RepInstance};
use crate::operators::{OperatorCandidate, OperatorDomain, OperatorKind};

pub use parser::parse;
pub use writer::{write_algebra, write_source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Duplicate,
    Dangling,
    Dimension,
}

impl ParseErrorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::Duplicate => "duplicate",
            ParseErrorKind::Dangling => "dangling-reference",
            ParseErrorKind::Dimension => "dimension",
        }
    }
}

/// A parse failure; `line` and `column` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} error: {}", self.line, self.column, self.kind.as_str(), self.message)
    }
}

impl std::error::Error for ParseError {}

/// An operator block with the kinds it declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDecl {
    pub candidate: OperatorCandidate,
    pub kinds: Vec<OperatorKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Declaration {
    Algebra(AlgebraInstance),
    Rep(RepInstance),
    Operator(OperatorDecl),
}

impl Declaration {
    pub fn name(&self) -> &str {
        match self {
            Declaration::Algebra(a) => &a.name,
            Declaration::Rep(r) => &r.name,
            Declaration::Operator(o) => &o.candidate.name,
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Declaration::Algebra(_) => "algebra",
            Declaration::Rep(_) => "rep",
            Declaration::Operator(_) => "operator",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceFile {
    pub path: Option<PathBuf>,
    pub declarations: Vec<Declaration>,
}

impl SourceFile {
    pub fn new() -> Self {
        SourceFile::default()
    }

    pub fn get(&self, name: &str) -> Option<&Declaration> {
        self.declarations.iter().find(|d| d.name() == name)
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraInstance> {
        match self.get(name) {
            Some(Declaration::Algebra(a)) => Ok(a),
            _ => Err(Error::semantic(format!("no algebra `{name}`"))),
        }
    }

    pub fn rep(&self, name: &str) -> Result<&RepInstance> {
        match self.get(name) {
            Some(Declaration::Rep(r)) => Ok(r),
            _ => Err(Error::semantic(format!("no rep `{name}`"))),
        }
    }

    pub fn operator(&self, name: &str) -> Result<&OperatorDecl> {
        match self.get(name) {
            Some(Declaration::Operator(o)) => Ok(o),
            _ => Err(Error::semantic(format!("no operator `{name}`"))),
        }
    }

    /// Appends a declaration together with any dependencies not yet present.
    ///
    /// A name already bound to different content is an error; an identical
    /// redeclaration is skipped.
    pub fn push(&mut self, d: Declaration) -> Result<()> {
        match &d {
            Declaration::Algebra(_) => {}
            Declaration::Rep(r) => self.push(Declaration::Algebra(r.base.clone()))?,
            Declaration::Operator(o) => match &o.candidate.domain {
                OperatorDomain::OnRep(r) => self.push(Declaration::Rep(r.clone()))?,
                OperatorDomain::OnAlgebra(a) => self.push(Declaration::Algebra(a.clone()))?,
            },
        }
        match self.get(d.name()) {
            Some(existing) if *existing == d => Ok(()),
            Some(_) => Err(Error::semantic(format!("name `{}` is already declared differently", d.name()))),
            None => {
                self.declarations.push(d);
                Ok(())
            }
        }
    }

    pub fn with(mut self, d: Declaration) -> Result<Self> {
        self.push(d)?;
        Ok(self)
    }
}
