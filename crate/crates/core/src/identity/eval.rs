use std::collections::HashMap;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar, StructureTensor, Vector};
use crate::identity::{polarize, Expr, IdentitySchema, Interpretation};
use crate::report::{CheckReport, Witness};

// memo tables above this many entries fall back to a one-entry cache
const MEMO_LIMIT: usize = 1 << 14;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Var(usize),
    Lin(usize, usize),
    Op(usize, usize, usize),
    Sum(Vec<(Scalar, usize)>),
    Zero(usize),
}

struct Node {
    key: Key,
    free: Vec<usize>,
    dim: usize,
}

/// A schema side pair lowered to a hash-consed DAG over concrete tensors.
pub(crate) struct Compiled {
    nodes: Vec<Node>,
    maps: Vec<LinearMap>,
    ops: Vec<StructureTensor>,
    slot_dims: Vec<usize>,
    lhs: usize,
    rhs: usize,
}

struct Builder<'a> {
    interp: &'a Interpretation,
    slots: HashMap<String, (usize, String)>,
    nodes: Vec<Node>,
    index: HashMap<Key, usize>,
    maps: Vec<LinearMap>,
    map_index: HashMap<(String, u32), usize>,
    ops: Vec<StructureTensor>,
    op_index: HashMap<String, usize>,
}

impl<'a> Builder<'a> {
    fn intern(&mut self, key: Key, free: Vec<usize>, dim: usize) -> usize {
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(Node { key: key.clone(), free, dim });
        self.index.insert(key, id);
        id
    }

    fn union(&self, ids: &[usize]) -> Vec<usize> {
        let mut f: Vec<usize> = ids.iter().flat_map(|&i| self.nodes[i].free.iter().copied()).collect();
        f.sort_unstable();
        f.dedup();
        f
    }

    fn lower(&mut self, e: &Expr, expected: Option<&str>) -> Result<(usize, String)> {
        let (id, sort) = match e {
            Expr::Var(v) => {
                let (slot, sort) = self
                    .slots
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::semantic(format!("undeclared variable `{v}`")))?;
                let dim = self.interp.sort_dim(&sort)?;
                (self.intern(Key::Var(slot), vec![slot], dim), sort)
            }
            Expr::Twist { map, power, child } => {
                let b = self.interp.get_map(map)?;
                let (src, dst) = b.sig.clone();
                if *power != 1 && src != dst {
                    return Err(Error::shape(format!("power of non-endomorphism `{map}`")));
                }
                let (c, csort) = self.lower(child, Some(&src))?;
                if csort != src {
                    return Err(Error::shape(format!("`{map}` expects sort {src}, got {csort}")));
                }
                let mid = match self.map_index.get(&(map.clone(), *power)) {
                    Some(&m) => m,
                    None => {
                        let m = if *power == 1 { b.map.clone() } else { b.map.power(*power)? };
                        self.maps.push(m);
                        let idx = self.maps.len() - 1;
                        self.map_index.insert((map.clone(), *power), idx);
                        idx
                    }
                };
                let free = self.nodes[c].free.clone();
                let dim = self.interp.sort_dim(&dst)?;
                (self.intern(Key::Lin(mid, c), free, dim), dst)
            }
            Expr::Op { op, left, right } => {
                let b = self.interp.get_op(op)?;
                let (s0, s1, s2) = b.sig.clone();
                let (l, ls) = self.lower(left, Some(&s0))?;
                let (r, rs) = self.lower(right, Some(&s1))?;
                if ls != s0 || rs != s1 {
                    return Err(Error::shape(format!("`{op}` expects ({s0}, {s1}), got ({ls}, {rs})")));
                }
                let oid = match self.op_index.get(op) {
                    Some(&o) => o,
                    None => {
                        self.ops.push(b.tensor.clone());
                        self.op_index.insert(op.clone(), self.ops.len() - 1);
                        self.ops.len() - 1
                    }
                };
                let free = self.union(&[l, r]);
                let dim = self.interp.sort_dim(&s2)?;
                (self.intern(Key::Op(oid, l, r), free, dim), s2)
            }
            Expr::Sum(children) => {
                if children.is_empty() {
                    let sort = expected
                        .ok_or_else(|| Error::semantic("cannot infer the sort of 0"))?
                        .to_string();
                    let dim = self.interp.sort_dim(&sort)?;
                    return Ok((self.intern(Key::Zero(dim), Vec::new(), dim), sort));
                }
                let mut parts = Vec::new();
                let mut sort: Option<String> = expected.map(str::to_string);
                for (s, c) in children {
                    let (id, cs) = self.lower(c, sort.as_deref())?;
                    if let Some(prev) = &sort {
                        if *prev != cs {
                            return Err(Error::shape(format!("sum mixes sorts {prev} and {cs}")));
                        }
                    }
                    sort = Some(cs);
                    parts.push((s.clone(), id));
                }
                let sort = sort.unwrap();
                let ids: Vec<usize> = parts.iter().map(|p| p.1).collect();
                let free = self.union(&ids);
                let dim = self.interp.sort_dim(&sort)?;
                (self.intern(Key::Sum(parts), free, dim), sort)
            }
        };
        Ok((id, sort))
    }
}

impl Compiled {
    pub(crate) fn new(schema: &IdentitySchema, interp: &Interpretation) -> Result<Self> {
        interp.validate()?;
        let mut slots = HashMap::new();
        let mut slot_dims = Vec::new();
        for (n, v) in schema.variables().iter().enumerate() {
            slots.insert(v.name.clone(), (n, v.sort.clone()));
            slot_dims.push(interp.sort_dim(&v.sort)?);
        }
        let mut b = Builder {
            interp,
            slots,
            nodes: Vec::new(),
            index: HashMap::new(),
            maps: Vec::new(),
            map_index: HashMap::new(),
            ops: Vec::new(),
            op_index: HashMap::new(),
        };
        let lhs_is_zero = matches!(schema.lhs(), Expr::Sum(c) if c.is_empty());
        let ((lhs, ls), (rhs, rs)) = if lhs_is_zero {
            let r = b.lower(schema.rhs(), None)?;
            (b.lower(schema.lhs(), Some(&r.1))?, r)
        } else {
            let l = b.lower(schema.lhs(), None)?;
            let r = b.lower(schema.rhs(), Some(&l.1))?;
            (l, r)
        };
        if ls != rs {
            return Err(Error::shape(format!("identity `{}` compares sorts {ls} and {rs}", schema.name())));
        }
        Ok(Compiled { nodes: b.nodes, maps: b.maps, ops: b.ops, slot_dims, lhs, rhs })
    }

    pub(crate) fn tuple_count(&self) -> u64 {
        self.slot_dims.iter().map(|&d| d as u64).product()
    }

    fn compute(&self, id: usize, get: &mut dyn FnMut(usize) -> Rc<Vector>, var: &dyn Fn(usize) -> Rc<Vector>) -> Vector {
        let node = &self.nodes[id];
        match &node.key {
            Key::Var(slot) => (*var(*slot)).clone(),
            Key::Zero(d) => Vector::zeros(*d),
            Key::Lin(m, c) => {
                let x = get(*c);
                self.maps[*m].apply(&x).expect("dims checked at compile time")
            }
            Key::Op(o, l, r) => {
                let x = get(*l);
                let y = get(*r);
                self.ops[*o].apply(&x, &y).expect("dims checked at compile time")
            }
            Key::Sum(parts) => {
                let mut acc = Vector::zeros(node.dim);
                for (s, c) in parts {
                    let v = get(*c);
                    acc.axpy(s, &v).expect("dims checked at compile time");
                }
                acc
            }
        }
    }

    /// Evaluates both sides at an arbitrary assignment of slot values.
    pub(crate) fn eval_at(&self, env: &[Vector]) -> (Vector, Vector) {
        let mut memo: Vec<Option<Rc<Vector>>> = vec![None; self.nodes.len()];
        fn go(c: &Compiled, id: usize, env: &[Vector], memo: &mut Vec<Option<Rc<Vector>>>) -> Rc<Vector> {
            if let Some(v) = &memo[id] {
                return v.clone();
            }
            let var = |s: usize| Rc::new(env[s].clone());
            let v = {
                let mut get = |child: usize| go(c, child, env, memo);
                Rc::new(c.compute(id, &mut get, &var))
            };
            memo[id] = Some(v.clone());
            v
        }
        let l = go(self, self.lhs, env, &mut memo);
        let r = go(self, self.rhs, env, &mut memo);
        ((*l).clone(), (*r).clone())
    }

    /// Scans basis tuples in lexicographic order; returns the first violation.
    pub(crate) fn scan(&self) -> (u64, Option<(Vec<usize>, Vector, Vector)>) {
        let n = self.nodes.len();
        let basis: Vec<Vec<Rc<Vector>>> = self
            .slot_dims
            .iter()
            .map(|&d| (0..d).map(|i| Rc::new(Vector::basis(d, i))).collect())
            .collect();
        let mut tables: Vec<Option<Vec<Option<Rc<Vector>>>>> = Vec::with_capacity(n);
        for node in &self.nodes {
            let size: usize = node.free.iter().map(|&s| self.slot_dims[s]).product();
            tables.push(if size <= MEMO_LIMIT { Some(vec![None; size]) } else { None });
        }
        let last: Vec<Option<(Vec<usize>, Rc<Vector>)>> = vec![None; n];
        let mut state = ScanState { tables, last };

        if self.slot_dims.contains(&0) {
            return (0, None);
        }
        let mut tuple = vec![0usize; self.slot_dims.len()];
        let mut count = 0u64;
        loop {
            count += 1;
            let l = self.value(self.lhs, &tuple, &basis, &mut state);
            let r = self.value(self.rhs, &tuple, &basis, &mut state);
            if l != r {
                return (count, Some((tuple, (*l).clone(), (*r).clone())));
            }
            // advance lexicographically, last slot fastest
            let mut k = tuple.len();
            loop {
                if k == 0 {
                    return (count, None);
                }
                k -= 1;
                tuple[k] += 1;
                if tuple[k] < self.slot_dims[k] {
                    break;
                }
                tuple[k] = 0;
            }
        }
    }

    fn value(&self, id: usize, tuple: &[usize], basis: &[Vec<Rc<Vector>>], st: &mut ScanState) -> Rc<Vector> {
        let free = &self.nodes[id].free;
        let mut pos = 0usize;
        for &s in free {
            pos = pos * self.slot_dims[s] + tuple[s];
        }
        if let Some(t) = &st.tables[id] {
            if let Some(v) = &t[pos] {
                return v.clone();
            }
        } else if let Some((key, v)) = &st.last[id] {
            if free.iter().zip(key).all(|(&s, &k)| tuple[s] == k) {
                return v.clone();
            }
        }
        let var = |s: usize| basis[s][tuple[s]].clone();
        let v = {
            let mut get = |child: usize| self.value(child, tuple, basis, st);
            Rc::new(self.compute(id, &mut get, &var))
        };
        match &mut st.tables[id] {
            Some(t) => t[pos] = Some(v.clone()),
            None => st.last[id] = Some((free.iter().map(|&s| tuple[s]).collect(), v.clone())),
        }
        v
    }
}

struct ScanState {
    tables: Vec<Option<Vec<Option<Rc<Vector>>>>>,
    last: Vec<Option<(Vec<usize>, Rc<Vector>)>>,
}

/// Exhaustive basis-tuple check, polarizing first when needed.
pub fn check_schema(s: &IdentitySchema, i: &Interpretation) -> Result<CheckReport> {
    let p = polarize(s);
    let c = Compiled::new(&p, i)?;
    let (tuples, bad) = c.scan();
    let mut report = match bad {
        None => CheckReport::pass(s.name()),
        Some((tuple, lhs, rhs)) => CheckReport::fail(
            s.name(),
            Witness {
                identity: s.name().to_string(),
                variables: p.variables().iter().map(|v| v.name.clone()).collect(),
                tuple,
                sample: None,
                lhs,
                rhs,
            },
        ),
    };
    report.tuples = tuples;
    Ok(report)
}

/// Number of basis tuples `check_schema` enumerates.
pub fn tuple_count(s: &IdentitySchema, i: &Interpretation) -> Result<u64> {
    Ok(Compiled::new(&polarize(s), i)?.tuple_count())
}

/// Draws a vector with small random rational coordinates.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    Vector::from_coords(
        (0..dim)
            .map(|_| Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
            .collect(),
    )
}

/// Evaluates the un-polarized schema at seeded random vectors.
pub fn check_schema_random(s: &IdentitySchema, i: &Interpretation, samples: usize, seed: u64) -> Result<CheckReport> {
    let c = Compiled::new(s, i)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..samples {
        let env: Vec<Vector> = c.slot_dims.iter().map(|&d| random_vector(&mut rng, d)).collect();
        let (lhs, rhs) = c.eval_at(&env);
        if lhs != rhs {
            let mut r = CheckReport::fail(
                s.name(),
                Witness {
                    identity: s.name().to_string(),
                    variables: s.variables().iter().map(|v| v.name.clone()).collect(),
                    tuple: Vec::new(),
                    sample: Some(n),
                    lhs,
                    rhs,
                },
            );
            r.tuples = n as u64 + 1;
            return Ok(r);
        }
    }
    let mut r = CheckReport::pass(s.name());
    r.tuples = samples as u64;
    Ok(r)
}

/// Evaluates both sides of a schema at given vectors, one per declared variable.
pub fn evaluate(s: &IdentitySchema, i: &Interpretation, env: &[Vector]) -> Result<(Vector, Vector)> {
    let c = Compiled::new(s, i)?;
    if env.len() != c.slot_dims.len() || env.iter().zip(&c.slot_dims).any(|(v, &d)| v.dim() != d) {
        return Err(Error::shape("assignment does not match the schema variables"));
    }
    Ok(c.eval_at(env))
}

/// Runs schemas in order, stopping at the first failure.
pub fn check_all(check: &str, schemas: &[IdentitySchema], i: &Interpretation) -> Result<CheckReport> {
    let mut tuples = 0;
    for s in schemas {
        let r = check_schema(s, i)?;
        tuples += r.tuples;
        if !r.is_pass() {
            let mut r = r.renamed(check);
            r.tuples = tuples;
            return Ok(r);
        }
    }
    let mut r = CheckReport::pass(check);
    r.tuples = tuples;
    Ok(r)
}
