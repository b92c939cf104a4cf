use crate::constructions::yau_twist_unchecked;
use crate::dsl::{write_source, Declaration, OperatorDecl, SourceFile};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar, StructureTensor};
use crate::instance::{AlgebraInstance, Family, RepInstance};
use crate::operators::{certify_operator, OperatorCandidate, OperatorKind};
use crate::report::CheckReport;
use crate::reps::{certify_rep, direct_sum_bimodule, regular_module, tensor_square_bimodule};
use crate::varieties::{certify, VarietyTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    PaperExample,
    ClassicalSeed,
    Constructed,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::PaperExample => "paper-example",
            Provenance::ClassicalSeed => "classical-seed",
            Provenance::Constructed => "constructed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogItem {
    Algebra(AlgebraInstance),
    Rep(RepInstance),
    /// An operator with the kind it certifies.
    Operator(OperatorCandidate, OperatorKind),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub item: CatalogItem,
    pub provenance: Provenance,
    pub notes: String,
}

impl CatalogEntry {
    /// Runs the entry's declared certifier.
    pub fn certify(&self) -> Result<CheckReport> {
        match &self.item {
            CatalogItem::Algebra(a) => {
                let v = a.variety.ok_or_else(|| Error::semantic(format!("`{}` declares no variety", a.name)))?;
                certify(a, v)
            }
            CatalogItem::Rep(r) => certify_rep(r),
            CatalogItem::Operator(c, k) => certify_operator(c, k),
        }
    }

    pub fn algebra(&self) -> Option<&AlgebraInstance> {
        match &self.item {
            CatalogItem::Algebra(a) => Some(a),
            _ => None,
        }
    }

    pub fn rep(&self) -> Option<&RepInstance> {
        match &self.item {
            CatalogItem::Rep(r) => Some(r),
            _ => None,
        }
    }

    /// The entry as a DSL file, dependencies first.
    pub fn source(&self) -> Result<SourceFile> {
        let d = match &self.item {
            CatalogItem::Algebra(a) => Declaration::Algebra(a.clone()),
            CatalogItem::Rep(r) => Declaration::Rep(r.clone()),
            CatalogItem::Operator(c, k) => Declaration::Operator(OperatorDecl { candidate: c.clone(), kinds: vec![k.clone()] }),
        };
        SourceFile::new().with(d)
    }

    /// File text with the id, provenance and notes as a comment header.
    pub fn file_text(&self) -> Result<String> {
        let mut header = vec![format!("catalog entry {}", self.id), format!("provenance: {}", self.provenance.as_str())];
        if !self.notes.is_empty() {
            header.push(self.notes.clone());
        }
        Ok(write_source(&self.source()?, &header))
    }
}

fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

fn t(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> StructureTensor {
    StructureTensor::from_entries((dim, dim, dim), entries)
}

fn assoc(name: &str, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> AlgebraInstance {
    AlgebraInstance::new(name, dim).with_product("mul", t(dim, entries)).with_variety(VarietyTag::HomAssociative)
}

/// 𝕂[x]/(xⁿ) on 1, x, …, xⁿ⁻¹.
fn truncated(n: usize) -> AlgebraInstance {
    let mut e = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            e.push((i, j, i + j, s(1)));
        }
    }
    assoc(&format!("kx{n}"), n, &e)
}

/// The 2-dim trialgebra with α = diag(a, b) applied by composition.
///
/// e₁⊢e₁ = e₁⊣e₁ = e₁⊥e₁ = e₁ and e₁⊢e₂ = e₂⊣e₁ = e₁⊥e₂ = e₂, then every
/// product is composed with diag(a, b). The entry e₁⊣e₁ = e₁ is not printed
/// in the source listing; the trialgebra axioms force it.
pub fn trialgebra_example(a: i64, b: i64) -> AlgebraInstance {
    let base = AlgebraInstance::new("tri-example", 2)
        .with_product("vdash", t(2, &[(0, 0, 0, s(1)), (0, 1, 1, s(1))]))
        .with_product("dashv", t(2, &[(0, 0, 0, s(1)), (1, 0, 1, s(1))]))
        .with_product("perp", t(2, &[(0, 0, 0, s(1)), (0, 1, 1, s(1))]))
        .with_variety(VarietyTag::HomAssociativeTrialgebra)
        .with_map("phi23", LinearMap::diag_ints(&[2, 3]))
        .with_map("phim15", LinearMap::diag_ints(&[-1, 5]));
    let phi = match (a, b) {
        (1, 1) => return base,
        (2, 3) => "phi23",
        (-1, 5) => "phim15",
        _ => "phi",
    };
    let base = if phi == "phi" { base.with_map(phi, LinearMap::diag_ints(&[a, b])) } else { base };
    let mut out = yau_twist_unchecked(&base, phi).expect("diagonal twist of a 2-dim instance");
    out.maps.remove("phi");
    out.named(&format!("tri-example-{}-{}", tag(a), tag(b)))
}

fn tag(n: i64) -> String {
    if n < 0 {
        format!("m{}", -n)
    } else {
        n.to_string()
    }
}

fn twisted(a: &AlgebraInstance, phi: LinearMap, name: &str) -> AlgebraInstance {
    yau_twist_unchecked(&a.clone().with_map("phi", phi), "phi")
        .map(|mut x| {
            x.maps.remove("phi");
            x.named(name)
        })
        .expect("seed twist")
}

fn algebras() -> Vec<CatalogEntry> {
    let h = Scalar::frac(1, 2);
    let ut2 = assoc("ut2", 3, &[(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 2, 1, s(1)), (2, 2, 2, s(1))]);
    let lie_solv = AlgebraInstance::new("lie-solvable2", 2)
        .with_product("bracket", t(2, &[(0, 1, 1, s(1)), (1, 0, 1, s(-1))]))
        .with_variety(VarietyTag::HomLie);
    let jordan = AlgebraInstance::new("jordan-rank1", 2)
        .with_product("circ", t(2, &[(0, 0, 0, s(1)), (0, 1, 1, h.clone()), (1, 0, 1, h)]))
        .with_variety(VarietyTag::HomJordan);
    let mut out = Vec::new();
    let mut push = |item: AlgebraInstance, p: Provenance, notes: &str| {
        out.push(CatalogEntry { id: item.name.clone(), item: CatalogItem::Algebra(item), provenance: p, notes: notes.into() })
    };
    for n in 1..=3 {
        push(assoc(&format!("zero{n}"), n, &[]), Provenance::ClassicalSeed, "zero product");
    }
    push(truncated(2), Provenance::ClassicalSeed, "truncated polynomials");
    push(truncated(3), Provenance::ClassicalSeed, "truncated polynomials");
    push(ut2, Provenance::ClassicalSeed, "upper-triangular 2x2 matrices on E11, E12, E22");
    push(
        AlgebraInstance::new("lie-abelian2", 2).with_product("bracket", t(2, &[])).with_variety(VarietyTag::HomLie),
        Provenance::ClassicalSeed,
        "abelian",
    );
    push(lie_solv, Provenance::ClassicalSeed, "[e1, e2] = e2");
    push(jordan, Provenance::ClassicalSeed, "idempotent with a Peirce 1/2 vector");
    push(trialgebra_example(1, 1), Provenance::PaperExample, "2-dim trialgebra, untwisted");
    push(trialgebra_example(2, 3), Provenance::PaperExample, "2-dim trialgebra twisted by diag(2, 3)");
    push(trialgebra_example(-1, 5), Provenance::PaperExample, "2-dim trialgebra twisted by diag(-1, 5)");
    out
}

fn named(r: RepInstance, name: &str) -> RepInstance {
    r.named(name)
}

fn reps(algs: &[CatalogEntry]) -> Result<Vec<CatalogEntry>> {
    let get = |id: &str| -> &AlgebraInstance {
        algs.iter().find(|e| e.id == id).and_then(|e| e.algebra()).expect("seed present")
    };
    let mut out = Vec::new();
    let mut push = |r: RepInstance, p: Provenance, notes: &str| {
        out.push(CatalogEntry { id: r.name.clone(), item: CatalogItem::Rep(r), provenance: p, notes: notes.into() })
    };
    for id in ["kx2", "kx3", "ut2"] {
        let a = get(id);
        push(named(regular_module(a, Family::Assoc, false)?, &format!("{id}.regular")), Provenance::Constructed, "adjoint bimodule");
        push(named(regular_module(a, Family::Assoc, true)?, &format!("{id}.regular-action")), Provenance::Constructed, "adjoint action");
        push(named(tensor_square_bimodule(a)?, &format!("{id}.tensor-square")), Provenance::PaperExample, "A⊗A bimodule");
        push(named(direct_sum_bimodule(a, 2)?, &format!("{id}.sum2")), Provenance::PaperExample, "componentwise action on A²");
        push(named(direct_sum_bimodule(a, 3)?, &format!("{id}.sum3")), Provenance::PaperExample, "componentwise action on A³");
    }
    for id in ["lie-abelian2", "lie-solvable2"] {
        let a = get(id);
        push(named(regular_module(a, Family::Lie, false)?, &format!("{id}.regular")), Provenance::Constructed, "adjoint module");
        push(named(regular_module(a, Family::Lie, true)?, &format!("{id}.regular-action")), Provenance::Constructed, "adjoint action");
    }
    {
        let id = "jordan-rank1";
        let a = get(id);
        push(named(regular_module(a, Family::Jordan, false)?, &format!("{id}.regular")), Provenance::Constructed, "adjoint module");
        push(named(regular_module(a, Family::Jordan, true)?, &format!("{id}.regular-action")), Provenance::Constructed, "adjoint action");
    }
    Ok(out)
}

/// K(a⊗b) = a·b.
fn multiplication_map(r: &RepInstance) -> LinearMap {
    let n = r.base.dim;
    let mul = r.base.product("mul").expect("associative base");
    LinearMap::from_fn(n * n, n, |row, col| mul.get(col / n, col % n, row).clone())
}

/// K(a₁, …, aₖ) = Σ aᵢ, or the i-th projection when `only` is set.
pub(crate) fn sum_map(n: usize, copies: usize, only: Option<usize>) -> LinearMap {
    LinearMap::from_fn(n * copies, n, |row, col| {
        let (b, k) = (col / n, col % n);
        if k == row && only.is_none_or(|i| i == b) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

fn operators(reps: &[CatalogEntry]) -> Vec<CatalogEntry> {
    let get = |id: &str| reps.iter().find(|e| e.id == id).and_then(|e| e.rep()).expect("seed present").clone();
    let mut out = Vec::new();
    for id in ["kx2", "kx3", "ut2"] {
        let ts = get(&format!("{id}.tensor-square"));
        let sum = get(&format!("{id}.sum2"));
        let n = sum.base.dim;
        let (mult, total, proj) =
            (format!("{id}.tensor-square.mult"), format!("{id}.sum2.sum"), format!("{id}.sum2.proj1"));
        let ops = [
            (OperatorCandidate::on_rep(&mult, ts.clone(), multiplication_map(&ts)), OperatorKind::RelAvg),
            (OperatorCandidate::on_rep(&total, sum.clone(), sum_map(n, 2, None)), OperatorKind::RelAvg),
            (OperatorCandidate::on_rep(&proj, sum.clone(), sum_map(n, 2, Some(0))), OperatorKind::HomomorphicRelAvg),
        ];
        for (c, k) in ops {
            out.push(CatalogEntry { id: c.name.clone(), item: CatalogItem::Operator(c, k), provenance: Provenance::PaperExample, notes: String::new() });
        }
    }
    out
}

/// Yau twists of the seeds by diagonal endomorphisms, for batteries that need α ≠ id.
pub fn twisted_seeds() -> Result<Vec<AlgebraInstance>> {
    let algs = algebras();
    let get = |id: &str| algs.iter().find(|e| e.id == id).and_then(|e| e.algebra()).expect("seed present").clone();
    let out = vec![
        twisted(&get("kx2"), LinearMap::diag_ints(&[1, 2]), "kx2-tw"),
        twisted(&get("kx3"), LinearMap::diag_ints(&[1, 2, 4]), "kx3-tw"),
        twisted(&get("ut2"), LinearMap::diag_ints(&[1, 3, 1]), "ut2-tw"),
        twisted(&get("lie-solvable2"), LinearMap::diag_ints(&[1, 2]), "lie-solvable2-tw"),
        twisted(&get("jordan-rank1"), LinearMap::diag_ints(&[1, 2]), "jordan-rank1-tw"),
    ];
    for a in &out {
        let v = a.variety.expect("seeds declare a variety");
        let rep = certify(a, v)?;
        if !rep.is_pass() {
            return Err(Error::Generation(format!("twisted seed `{}` does not certify: {rep}", a.name)));
        }
    }
    Ok(out)
}

/// Every seed instance, representation and operator; each certifies at load.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = algebras();
    let r = reps(&out)?;
    let o = operators(&r);
    out.extend(r);
    out.extend(o);
    for e in &out {
        let rep = e.certify()?;
        if !rep.is_pass() {
            return Err(Error::Generation(format!("catalog entry `{}` does not certify: {rep}", e.id)));
        }
    }
    Ok(out)
}

pub fn catalog_entry(id: &str) -> Result<CatalogEntry> {
    catalog()?
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::semantic(format!("no catalog entry `{id}`")))
}
