use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// Expression tree of an identity side.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(String),
    Twist { map: String, power: u32, child: Box<Expr> },
    Op { op: String, left: Box<Expr>, right: Box<Expr> },
    Sum(Vec<(Scalar, Expr)>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn twist(map: &str, power: u32, child: Expr) -> Expr {
        Expr::Twist { map: map.to_string(), power, child: Box::new(child) }
    }

    pub fn op(op: &str, left: Expr, right: Expr) -> Expr {
        Expr::Op { op: op.to_string(), left: Box::new(left), right: Box::new(right) }
    }

    pub fn zero() -> Expr {
        Expr::Sum(Vec::new())
    }

    /// Parses the function-call syntax used throughout the catalogs, e.g.
    /// `mul(mul(x, y), alpha(z)) - 1/2*mul(alpha^2(x), y)`.
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.sum()?;
        if p.pos != p.tokens.len() {
            return Err(Error::semantic(format!("trailing input in expression `{text}`")));
        }
        Ok(e)
    }

    /// Degree of every variable in each monomial; returns per-variable
    /// (min, max) degrees over monomials.
    pub fn degree_bounds(&self) -> BTreeMap<String, (usize, usize)> {
        let monos = self.monomial_degrees();
        let mut names: Vec<String> = monos.iter().flat_map(|m| m.keys().cloned()).collect();
        names.sort();
        names.dedup();
        names
            .into_iter()
            .map(|n| {
                let ds: Vec<usize> = monos.iter().map(|m| m.get(&n).copied().unwrap_or(0)).collect();
                let lo = ds.iter().copied().min().unwrap_or(0);
                let hi = ds.iter().copied().max().unwrap_or(0);
                (n, (lo, hi))
            })
            .collect()
    }

    fn monomial_degrees(&self) -> Vec<BTreeMap<String, usize>> {
        match self {
            Expr::Var(v) => vec![BTreeMap::from([(v.clone(), 1)])],
            Expr::Twist { child, .. } => child.monomial_degrees(),
            Expr::Op { left, right, .. } => {
                let (ls, rs) = (left.monomial_degrees(), right.monomial_degrees());
                let mut out = Vec::new();
                for l in &ls {
                    for r in &rs {
                        let mut m = l.clone();
                        for (k, d) in r {
                            *m.entry(k.clone()).or_insert(0) += d;
                        }
                        out.push(m);
                    }
                }
                dedup_monos(out)
            }
            Expr::Sum(children) => {
                dedup_monos(children.iter().flat_map(|(_, c)| c.monomial_degrees()).collect())
            }
        }
    }

    /// Replaces every occurrence of variable `name` by `with`.
    pub fn substitute(&self, name: &str, with: &Expr) -> Expr {
        match self {
            Expr::Var(v) if v == name => with.clone(),
            Expr::Var(_) => self.clone(),
            Expr::Twist { map, power, child } => Expr::Twist {
                map: map.clone(),
                power: *power,
                child: Box::new(child.substitute(name, with)),
            },
            Expr::Op { op, left, right } => Expr::Op {
                op: op.clone(),
                left: Box::new(left.substitute(name, with)),
                right: Box::new(right.substitute(name, with)),
            },
            Expr::Sum(children) => {
                Expr::Sum(children.iter().map(|(s, c)| (s.clone(), c.substitute(name, with))).collect())
            }
        }
    }

    pub fn symbols(&self, ops: &mut Vec<String>, maps: &mut Vec<String>) {
        match self {
            Expr::Var(_) => {}
            Expr::Twist { map, child, .. } => {
                maps.push(map.clone());
                child.symbols(ops, maps);
            }
            Expr::Op { op, left, right } => {
                ops.push(op.clone());
                left.symbols(ops, maps);
                right.symbols(ops, maps);
            }
            Expr::Sum(children) => children.iter().for_each(|(_, c)| c.symbols(ops, maps)),
        }
    }

    /// Renames op and map symbols.
    pub fn rename(&self, f: &dyn Fn(&str) -> String) -> Expr {
        match self {
            Expr::Var(_) => self.clone(),
            Expr::Twist { map, power, child } => {
                Expr::Twist { map: f(map), power: *power, child: Box::new(child.rename(f)) }
            }
            Expr::Op { op, left, right } => Expr::Op {
                op: f(op),
                left: Box::new(left.rename(f)),
                right: Box::new(right.rename(f)),
            },
            Expr::Sum(children) => Expr::Sum(children.iter().map(|(s, c)| (s.clone(), c.rename(f))).collect()),
        }
    }
}

fn dedup_monos(mut v: Vec<BTreeMap<String, usize>>) -> Vec<BTreeMap<String, usize>> {
    v.sort();
    v.dedup();
    v
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Twist { map, power: 1, child } => write!(f, "{map}({child})"),
            Expr::Twist { map, power, child } => write!(f, "{map}^{power}({child})"),
            Expr::Op { op, left, right } => write!(f, "{op}({left}, {right})"),
            Expr::Sum(children) if children.is_empty() => write!(f, "0"),
            Expr::Sum(children) => {
                for (n, (s, c)) in children.iter().enumerate() {
                    let neg = s.is_negative();
                    match (n, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    let a = s.abs();
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    match c {
                        Expr::Sum(_) => write!(f, "({c})")?,
                        _ => write!(f, "{c}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_' || cs[i] == '.') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Int(cs[start..i].iter().collect()));
        } else if "(),+-*/^".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::semantic(format!("unexpected character `{c}` in expression")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::semantic(format!("expected `{c}` at token {}", self.pos)))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -Scalar::one() } else { Scalar::one() };
        loop {
            let (coef, e) = self.term()?;
            terms.push((&sign * &coef, e));
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -Scalar::one();
            } else {
                break;
            }
        }
        terms.retain(|(s, e)| !s.is_zero() && *e != Expr::zero());
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<(Scalar, Expr)> {
        if let Some(Tok::Int(n)) = self.peek().cloned() {
            self.pos += 1;
            let mut text = n;
            if self.eat('/') {
                match self.peek().cloned() {
                    Some(Tok::Int(d)) => {
                        self.pos += 1;
                        text = format!("{text}/{d}");
                    }
                    _ => return Err(Error::semantic("expected denominator")),
                }
            }
            let coef: Scalar = text.parse()?;
            if self.eat('*') {
                return Ok((coef, self.factor()?));
            }
            // a bare literal; only 0 is meaningful as a vector
            if coef.is_zero() {
                return Ok((Scalar::one(), Expr::zero()));
            }
            return Err(Error::semantic("scalar literal must multiply a factor"));
        }
        Ok((Scalar::one(), self.factor()?))
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let mut power = 1u32;
                if self.eat('^') {
                    match self.peek().cloned() {
                        Some(Tok::Int(k)) => {
                            self.pos += 1;
                            power = k.parse().map_err(|_| Error::semantic("bad power"))?;
                        }
                        _ => return Err(Error::semantic("expected power")),
                    }
                    self.expect('(')?;
                    let child = self.sum()?;
                    self.expect(')')?;
                    return Ok(Expr::twist(&name, power, child));
                }
                if !self.eat('(') {
                    return Ok(Expr::Var(name));
                }
                let first = self.sum()?;
                if self.eat(',') {
                    let second = self.sum()?;
                    self.expect(')')?;
                    Ok(Expr::op(&name, first, second))
                } else {
                    self.expect(')')?;
                    Ok(Expr::twist(&name, power, first))
                }
            }
            other => Err(Error::semantic(format!("unexpected token {other:?} in expression"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_calls() {
        let e = Expr::parse("mul(mul(x, y), alpha(z))").unwrap();
        assert_eq!(
            e,
            Expr::op("mul", Expr::op("mul", Expr::var("x"), Expr::var("y")), Expr::twist("alpha", 1, Expr::var("z")))
        );
    }

    #[test]
    fn parses_weighted_sums() {
        let e = Expr::parse("-x + 1/2*alpha^2(y) - 0").unwrap();
        assert_eq!(
            e,
            Expr::Sum(vec![
                (Scalar::int(-1), Expr::var("x")),
                (Scalar::frac(1, 2), Expr::twist("alpha", 2, Expr::var("y"))),
            ])
        );
        assert_eq!(Expr::parse("0").unwrap(), Expr::zero());
    }

    #[test]
    fn display_round_trips() {
        for s in ["mul(x, y) - 2*alpha^2(mul(y, x))", "bracket(alpha(x), bracket(y, z))", "-x"] {
            let e = Expr::parse(s).unwrap();
            assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn degrees() {
        let e = Expr::parse("circ(circ(circ(x, x), alpha(y)), alpha^2(x))").unwrap();
        let d = e.degree_bounds();
        assert_eq!(d["x"], (3, 3));
        assert_eq!(d["y"], (1, 1));
    }
}
