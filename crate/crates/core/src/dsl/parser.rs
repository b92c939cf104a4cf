use std::collections::{BTreeMap, HashSet};

use super::lexer::{lex_line, Spanned, Tok};
use super::{Declaration, OperatorDecl, ParseError, ParseErrorKind, SourceFile};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar, StructureTensor, Vector};
use crate::instance::{AlgebraInstance, Family, RepInstance, RepKind, ALPHA, BETA};
use crate::operators::{OperatorCandidate, OperatorKind};
use crate::varieties::VarietyTag;

type PResult<T> = std::result::Result<T, ParseError>;

struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, kind: ParseErrorKind, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { kind, line: self.line, column, message: message.into() }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = self.peek().map_or("end of line".to_string(), Tok::describe);
        self.err(ParseErrorKind::Syntax, self.col(), format!("expected {wanted}, found {found}"))
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, usize)> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok((s.clone(), col))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn count(&mut self, what: &str) -> PResult<usize> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Int(s)) if !s.starts_with('-') => {
                self.pos += 1;
                match s.parse::<usize>() {
                    Ok(n) if n > 0 => Ok(n),
                    _ => Err(self.err(ParseErrorKind::Dimension, col, format!("{what} must be a positive integer"))),
                }
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn rational(&mut self) -> PResult<Scalar> {
        let col = self.col();
        let num = match self.peek() {
            Some(Tok::Int(s)) => s.clone(),
            _ => return Err(self.unexpected("a rational")),
        };
        self.pos += 1;
        let mut text = num;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(d)) if !d.starts_with('-') => {
                    text = format!("{text}/{d}");
                    self.pos += 1;
                }
                _ => return Err(self.unexpected("a positive denominator")),
            }
        }
        text.parse::<Scalar>().map_err(|_| self.err(ParseErrorKind::Syntax, col, format!("invalid rational `{text}`")))
    }

    /// A basis vector `<prefix><k>` with 1 ≤ k ≤ dim; returns k − 1.
    fn basis(&mut self, prefix: char, dim: usize) -> PResult<usize> {
        let col = self.col();
        let wanted = format!("a basis vector `{prefix}<k>`");
        let s = match self.peek() {
            Some(Tok::Ident(s)) => s,
            _ => return Err(self.unexpected(&wanted)),
        };
        let digits = s.strip_prefix(prefix).filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
        let Some(digits) = digits else {
            return Err(self.unexpected(&wanted));
        };
        self.pos += 1;
        match digits.parse::<usize>() {
            Ok(k) if (1..=dim).contains(&k) => Ok(k - 1),
            _ => Err(self.err(ParseErrorKind::Dimension, col, format!("`{s}` is out of range for dimension {dim}"))),
        }
    }

    /// `0` or `TERM {+ TERM}` up to the end of the line.
    fn terms(&mut self, prefix: char, dim: usize) -> PResult<Vector> {
        let mut v = Vector::zeros(dim);
        if matches!(self.peek(), Some(Tok::Int(s)) if s == "0") && self.pos + 1 == self.toks.len() {
            self.pos += 1;
            return Ok(v);
        }
        loop {
            let c = if matches!(self.peek(), Some(Tok::Int(_))) {
                let c = self.rational()?;
                self.expect(Tok::Star)?;
                c
            } else {
                Scalar::one()
            };
            let k = self.basis(prefix, dim)?;
            let sum = v.get(k) + &c;
            v.set(k, sum);
            match self.peek() {
                None => return Ok(v),
                Some(Tok::Plus) => self.pos += 1,
                Some(_) => return Err(self.unexpected("`+` or end of line")),
            }
        }
    }

    fn done(&self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of line")),
        }
    }
}

struct AlgBlock {
    name: String,
    dim: usize,
    ops: BTreeMap<String, StructureTensor>,
    maps: BTreeMap<String, LinearMap>,
    variety: Option<VarietyTag>,
}

struct RepBlock {
    rep: RepInstance,
    beta_seen: bool,
}

struct OpBlock {
    name: String,
    domain_rep: Option<RepInstance>,
    domain_alg: Option<AlgebraInstance>,
    src_prefix: char,
    map: LinearMap,
    kinds: Vec<OperatorKind>,
}

enum Block {
    Algebra(AlgBlock),
    Rep(RepBlock),
    Operator(OpBlock),
}

struct Parser {
    file: SourceFile,
    block: Option<(Block, usize)>,
    seen: HashSet<String>,
}

/// Parses `.halg` text.
pub fn parse(text: &str) -> Result<SourceFile> {
    parse_inner(text).map_err(Error::Parse)
}

fn parse_inner(text: &str) -> PResult<SourceFile> {
    let mut p = Parser { file: SourceFile::new(), block: None, seen: HashSet::new() };
    for (n, raw) in text.lines().enumerate() {
        let toks = lex_line(raw, n + 1)?;
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor { toks: &toks, pos: 0, line: n + 1, end_col: raw.chars().count() + 1 };
        p.line(&mut c)?;
    }
    if let Some((b, start)) = p.block {
        let name = match &b {
            Block::Algebra(a) => a.name.clone(),
            Block::Rep(r) => r.rep.name.clone(),
            Block::Operator(o) => o.name.clone(),
        };
        return Err(ParseError {
            kind: ParseErrorKind::Syntax,
            line: start,
            column: 1,
            message: format!("block `{name}` is not closed by `end`"),
        });
    }
    Ok(p.file)
}

impl Parser {
    fn line(&mut self, c: &mut Cursor) -> PResult<()> {
        let is_end = matches!(c.peek(), Some(Tok::Ident(s)) if s == "end");
        if is_end {
            c.pos += 1;
            c.done()?;
            return match self.block.take() {
                Some((b, _)) => self.close(b, c),
                None => Err(c.err(ParseErrorKind::Syntax, 1, "`end` outside a block")),
            };
        }
        match self.block.as_mut() {
            None => self.header(c),
            Some((Block::Algebra(a), _)) => algebra_line(a, c),
            Some((Block::Rep(r), _)) => rep_line(r, c),
            Some((Block::Operator(o), _)) => operator_line(o, c),
        }
    }

    fn fresh_name(&mut self, c: &mut Cursor) -> PResult<String> {
        let (name, col) = c.ident("a name")?;
        if !self.seen.insert(name.clone()) {
            return Err(c.err(ParseErrorKind::Duplicate, col, format!("`{name}` is already declared")));
        }
        Ok(name)
    }

    fn lookup(&self, c: &Cursor, name: &str, col: usize) -> PResult<&Declaration> {
        self.file
            .get(name)
            .ok_or_else(|| c.err(ParseErrorKind::Dangling, col, format!("`{name}` is not declared above")))
    }

    fn header(&mut self, c: &mut Cursor) -> PResult<()> {
        let (kw, col) = c.ident("`algebra`, `rep` or `operator`")?;
        let block = match kw.as_str() {
            "algebra" => {
                let name = self.fresh_name(c)?;
                c.keyword("dim")?;
                let dim = c.count("a dimension")?;
                c.done()?;
                Block::Algebra(AlgBlock { name, dim, ops: BTreeMap::new(), maps: BTreeMap::new(), variety: None })
            }
            "rep" => {
                let name = self.fresh_name(c)?;
                c.keyword("over")?;
                let (alg, acol) = c.ident("an algebra name")?;
                let base = match self.lookup(c, &alg, acol)? {
                    Declaration::Algebra(a) => a.clone(),
                    _ => return Err(c.err(ParseErrorKind::Dangling, acol, format!("`{alg}` is not an algebra"))),
                };
                c.keyword("dim")?;
                let dim = c.count("a dimension")?;
                c.keyword("kind")?;
                let (k, kcol) = c.ident("a rep kind")?;
                let kind = RepKind::parse(&k)
                    .ok_or_else(|| c.err(ParseErrorKind::Syntax, kcol, format!("unknown rep kind `{k}`")))?;
                c.done()?;
                Block::Rep(RepBlock { rep: RepInstance::zero(&name, base, kind, dim), beta_seen: false })
            }
            "operator" => {
                let name = self.fresh_name(c)?;
                c.expect(Tok::Colon)?;
                let (src, scol) = c.ident("a rep or algebra name")?;
                c.expect(Tok::Arrow)?;
                let (dst, dcol) = c.ident("an algebra name")?;
                c.done()?;
                match self.lookup(c, &src, scol)?.clone() {
                    Declaration::Rep(r) => {
                        if r.base.name != dst {
                            self.lookup(c, &dst, dcol)?;
                            return Err(c.err(
                                ParseErrorKind::Dangling,
                                dcol,
                                format!("`{dst}` is not the algebra under `{src}`"),
                            ));
                        }
                        let map = LinearMap::zero(r.v_dim, r.base.dim);
                        Block::Operator(OpBlock {
                            name,
                            domain_rep: Some(r),
                            domain_alg: None,
                            src_prefix: 'u',
                            map,
                            kinds: Vec::new(),
                        })
                    }
                    Declaration::Algebra(a) => {
                        if a.name != dst {
                            self.lookup(c, &dst, dcol)?;
                            return Err(c.err(
                                ParseErrorKind::Dangling,
                                dcol,
                                format!("an operator on `{src}` must map into `{src}`"),
                            ));
                        }
                        let map = LinearMap::zero(a.dim, a.dim);
                        Block::Operator(OpBlock {
                            name,
                            domain_rep: None,
                            domain_alg: Some(a),
                            src_prefix: 'e',
                            map,
                            kinds: Vec::new(),
                        })
                    }
                    Declaration::Operator(_) => {
                        return Err(c.err(ParseErrorKind::Dangling, scol, format!("`{src}` is an operator")))
                    }
                }
            }
            _ => return Err(c.err(ParseErrorKind::Syntax, col, format!("unknown declaration `{kw}`"))),
        };
        self.block = Some((block, c.line));
        Ok(())
    }

    fn close(&mut self, b: Block, c: &Cursor) -> PResult<()> {
        let d = match b {
            Block::Algebra(a) => {
                if !a.maps.contains_key(ALPHA) {
                    return Err(c.err(ParseErrorKind::Syntax, 1, format!("algebra `{}` has no `map alpha`", a.name)));
                }
                let mut inst = AlgebraInstance::new(&a.name, a.dim);
                inst.products = a.ops;
                inst.maps = a.maps;
                inst.variety = a.variety;
                Declaration::Algebra(inst)
            }
            Block::Rep(r) => {
                if !r.beta_seen {
                    return Err(c.err(ParseErrorKind::Syntax, 1, format!("rep `{}` has no `map beta`", r.rep.name)));
                }
                Declaration::Rep(r.rep)
            }
            Block::Operator(o) => {
                let candidate = match (o.domain_rep, o.domain_alg) {
                    (Some(r), _) => OperatorCandidate::on_rep(&o.name, r, o.map),
                    (None, Some(a)) => OperatorCandidate::on_algebra(&o.name, a, o.map),
                    (None, None) => unreachable!("operator blocks always have a domain"),
                };
                Declaration::Operator(OperatorDecl { candidate, kinds: o.kinds })
            }
        };
        self.file.declarations.push(d);
        Ok(())
    }
}

fn dup(c: &Cursor, what: String) -> ParseError {
    c.err(ParseErrorKind::Duplicate, 1, format!("{what} is defined twice"))
}

fn algebra_line(a: &mut AlgBlock, c: &mut Cursor) -> PResult<()> {
    let (kw, col) = c.ident("`op`, `map`, `variety` or `end`")?;
    match kw.as_str() {
        "op" => {
            let (name, _) = c.ident("a product name")?;
            c.expect(Tok::Colon)?;
            let i = c.basis('e', a.dim)?;
            c.expect(Tok::Star)?;
            let j = c.basis('e', a.dim)?;
            c.expect(Tok::Eq)?;
            let v = c.terms('e', a.dim)?;
            let t = a.ops.entry(name.clone()).or_insert_with(|| StructureTensor::square(a.dim));
            if !t.nonzero(i, j).is_empty() {
                return Err(dup(c, format!("`{name}` on e{} * e{}", i + 1, j + 1)));
            }
            t.set_product(i, j, &v);
        }
        "map" => {
            let (name, _) = c.ident("a map name")?;
            c.expect(Tok::Colon)?;
            let i = c.basis('e', a.dim)?;
            c.expect(Tok::Eq)?;
            let v = c.terms('e', a.dim)?;
            let m = a.maps.entry(name.clone()).or_insert_with(|| LinearMap::zero(a.dim, a.dim));
            set_column(m, i, &v).map_err(|_| dup(c, format!("`{name}` on e{}", i + 1)))?;
        }
        "variety" => {
            let (tag, tcol) = c.ident("a variety tag")?;
            let v = VarietyTag::parse(&tag)
                .ok_or_else(|| c.err(ParseErrorKind::Syntax, tcol, format!("unknown variety `{tag}`")))?;
            if a.variety.replace(v).is_some() {
                return Err(dup(c, "`variety`".into()));
            }
        }
        _ => return Err(c.err(ParseErrorKind::Syntax, col, format!("unexpected `{kw}` in algebra block"))),
    }
    c.done()
}

/// Fills column `i`; errors if that column was already non-zero.
fn set_column(m: &mut LinearMap, i: usize, v: &Vector) -> std::result::Result<(), ()> {
    if !m.column(i).is_zero() {
        return Err(());
    }
    for (row, s) in v.support() {
        m.set(row, i, s.clone());
    }
    Ok(())
}

fn rep_line(r: &mut RepBlock, c: &mut Cursor) -> PResult<()> {
    let (kw, col) = c.ident("`lmap`, `rmap`, `act`, `map`, `op` or `end`")?;
    let family = r.rep.family();
    let (n, m) = (r.rep.base.dim, r.rep.v_dim);
    match kw.as_str() {
        "lmap" | "rmap" | "act" => {
            let (name, ncol) = c.ident("an action name")?;
            let allowed = match (kw.as_str(), family) {
                ("lmap", Family::Assoc) => name == "l",
                ("rmap", Family::Assoc) => name == "r",
                ("act", Family::Lie) => name == "rho",
                ("act", Family::Jordan) => name == "pi",
                _ => false,
            };
            if !allowed {
                return Err(c.err(
                    ParseErrorKind::Syntax,
                    ncol,
                    format!("`{kw} {name}` does not belong to a {} rep", r.rep.kind),
                ));
            }
            c.expect(Tok::Colon)?;
            let (i, j) = if kw == "rmap" {
                let j = c.basis('u', m)?;
                c.expect(Tok::Star)?;
                (c.basis('e', n)?, j)
            } else {
                let i = c.basis('e', n)?;
                c.expect(Tok::Star)?;
                (i, c.basis('u', m)?)
            };
            c.expect(Tok::Eq)?;
            let v = c.terms('u', m)?;
            let t = r.rep.actions.get_mut(&name).expect("zero rep lists every action map");
            if !t.nonzero(i, j).is_empty() {
                return Err(dup(c, format!("`{name}` on e{}, u{}", i + 1, j + 1)));
            }
            t.set_product(i, j, &v);
        }
        "map" => {
            let (name, ncol) = c.ident("`beta`")?;
            if name != BETA {
                return Err(c.err(ParseErrorKind::Syntax, ncol, format!("a rep carries only `map beta`, found `{name}`")));
            }
            c.expect(Tok::Colon)?;
            let i = c.basis('u', m)?;
            c.expect(Tok::Eq)?;
            let v = c.terms('u', m)?;
            if !r.beta_seen {
                r.rep.beta = LinearMap::zero(m, m);
                r.beta_seen = true;
            }
            set_column(&mut r.rep.beta, i, &v).map_err(|_| dup(c, format!("`beta` on u{}", i + 1)))?;
        }
        "op" => {
            let (name, ncol) = c.ident("a V-product name")?;
            if name != family.v_product() {
                return Err(c.err(
                    ParseErrorKind::Syntax,
                    ncol,
                    format!("the product on V of a {} rep is `{}`", r.rep.kind, family.v_product()),
                ));
            }
            c.expect(Tok::Colon)?;
            let i = c.basis('u', m)?;
            c.expect(Tok::Star)?;
            let j = c.basis('u', m)?;
            c.expect(Tok::Eq)?;
            let v = c.terms('u', m)?;
            let t = r.rep.v_product.get_or_insert_with(|| StructureTensor::square(m));
            if !t.nonzero(i, j).is_empty() {
                return Err(dup(c, format!("`{name}` on u{} * u{}", i + 1, j + 1)));
            }
            t.set_product(i, j, &v);
        }
        _ => return Err(c.err(ParseErrorKind::Syntax, col, format!("unexpected `{kw}` in rep block"))),
    }
    c.done()
}

fn operator_line(o: &mut OpBlock, c: &mut Cursor) -> PResult<()> {
    if matches!(c.peek(), Some(Tok::Ident(s)) if s == "kind") {
        c.pos += 1;
        let (k, kcol) = c.ident("an operator kind")?;
        let weight = if matches!(c.peek(), Some(Tok::Int(_))) { Some(c.rational()?) } else { None };
        c.done()?;
        let kind = OperatorKind::parse(&k, weight)
            .ok_or_else(|| c.err(ParseErrorKind::Syntax, kcol, format!("unknown operator kind `{k}`")))?;
        if o.kinds.contains(&kind) {
            return Err(dup(c, format!("kind `{kind}`")));
        }
        o.kinds.push(kind);
        return Ok(());
    }
    let i = c.basis(o.src_prefix, o.map.src_dim())?;
    c.expect(Tok::Eq)?;
    let v = c.terms('e', o.map.dst_dim())?;
    c.done()?;
    set_column(&mut o.map, i, &v).map_err(|_| dup(c, format!("`{}{}`", o.src_prefix, i + 1)))
}
