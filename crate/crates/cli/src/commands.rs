use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use homalg_core::battery::{run_battery, BatteryConfig, Setting};
use homalg_core::constructions::{
    bimodule_map_dialgebra, differential_dialgebra, functor, functor_unchecked, hemisemi_unchecked, induce_unchecked,
    yau_twist_unchecked, ConstructionId,
};
use homalg_core::dsl::{parse, write_source, Declaration, SourceFile};
use homalg_core::forge::{catalog, find_endomorphisms, CatalogItem, GridSpec};
use homalg_core::identity::{check_schema_random, Interpretation};
use homalg_core::operators::{is_admissible, OperatorDomain};
use homalg_core::reps::certify_rep;
use homalg_core::{
    certify, certify_operator, is_morphism, AlgebraInstance, CheckReport, Error, IdentitySchema, OperatorKind, Result,
    Scalar, VarietyTag,
};

use crate::record::Record;
use crate::{
    BatteryArgs, CatalogArgs, CheckArgs, Command, ConstructArgs, EndoArgs, ReportArgs, EXIT_FAIL, EXIT_PARSE, EXIT_PASS,
    EXIT_SEMANTIC,
};

fn code_of(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_SEMANTIC,
    }
}

struct Session<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    code: i32,
    rows: Vec<Record>,
}

impl Session<'_> {
    fn record(&mut self, r: Record) {
        if self.code < EXIT_FAIL && !r.is_pass() {
            self.code = EXIT_FAIL;
        }
        let _ = r.emit(self.out);
        self.rows.push(r);
    }

    fn report(&mut self, target: &str, rep: &CheckReport, started: Instant) {
        self.record(Record::from_report(target, rep, started));
    }

    fn fail(&mut self, target: &str, check: &str, e: &Error, started: Instant) {
        let _ = writeln!(self.err, "error: {e}");
        self.code = self.code.max(code_of(e));
        let _ = Record::error(target, check, e.to_string(), started).emit(self.out);
    }

    fn summary(&mut self) {
        let pass = self.rows.iter().filter(|r| r.is_pass()).count();
        let _ = writeln!(self.err, "{:<40} {:<36} status", "target", "check");
        for r in &self.rows {
            let _ = writeln!(self.err, "{:<40} {:<36} {}", r.target, r.check, r.status);
        }
        let _ = writeln!(self.err, "{} checks: {pass} pass, {} not passing", self.rows.len(), self.rows.len() - pass);
    }
}

pub(crate) fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut s = Session { out, err, code: EXIT_PASS, rows: Vec::new() };
    let started = Instant::now();
    let (target, name) = label(&cmd);
    let (result, summary) = match cmd {
        Command::Check(a) => {
            let summary = a.summary;
            (check(&mut s, a), summary)
        }
        Command::Construct(a) => (construct(&mut s, a), false),
        Command::Report(a) => {
            let summary = a.summary;
            (report(&mut s, &a), summary)
        }
        Command::Battery(a) => (battery(&mut s, &a), false),
        Command::Endomorphisms(a) => (endomorphisms(&mut s, &a), false),
        Command::Catalog(a) => (catalog_cmd(&mut s, &a), false),
    };
    if let Err(e) = result {
        let check = if matches!(e, Error::Parse(_)) { "parse" } else { name };
        s.fail(&target, check, &e, started);
    }
    if summary {
        s.summary();
    }
    s.code
}

/// Target and check names used for command-level error records.
fn label(cmd: &Command) -> (String, &'static str) {
    let shown = |p: &Path| p.display().to_string();
    match cmd {
        Command::Check(a) => (shown(&a.file), "check"),
        Command::Construct(a) => (shown(&a.file), "construct"),
        Command::Report(a) => (shown(&a.path), "report"),
        Command::Battery(a) => (a.setting.clone().unwrap_or_default(), "battery"),
        Command::Endomorphisms(a) => (shown(&a.file), "endomorphisms"),
        Command::Catalog(_) => (String::new(), "catalog"),
    }
}

fn load(path: &Path) -> Result<SourceFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::semantic(format!("cannot read {}: {e}", path.display())))?;
    let mut f = parse(&text)?;
    f.path = Some(path.to_path_buf());
    Ok(f)
}

fn parse_weight(w: &Option<String>) -> Result<Option<Scalar>> {
    w.as_deref()
        .map(|t| t.parse::<Scalar>().map_err(|_| Error::semantic(format!("invalid weight `{t}`"))))
        .transpose()
}

fn variety_of(tag: &str) -> Result<VarietyTag> {
    VarietyTag::parse(tag).ok_or_else(|| Error::semantic(format!("unknown variety `{tag}`")))
}

fn random_certify(a: &AlgebraInstance, v: VarietyTag, samples: usize, seed: u64) -> Result<CheckReport> {
    let i: Interpretation = a.interpretation()?;
    let schemas: Vec<IdentitySchema> = v.schemas();
    let mut tuples = 0;
    for sch in &schemas {
        let rep = check_schema_random(sch, &i, samples, seed)?;
        tuples += rep.tuples;
        if !rep.is_pass() {
            let mut rep = rep.renamed(v.as_str());
            rep.tuples = tuples;
            return Ok(rep);
        }
    }
    let mut rep = CheckReport::pass(v.as_str());
    rep.tuples = tuples;
    Ok(rep)
}

fn check(s: &mut Session, a: CheckArgs) -> Result<()> {
    let f = load(&a.file)?;
    if let Some(tag) = &a.variety {
        let v = variety_of(tag)?;
        let targets: Vec<&AlgebraInstance> = match &a.target {
            Some(t) => vec![f.algebra(t)?],
            None => f
                .declarations
                .iter()
                .filter_map(|d| match d {
                    Declaration::Algebra(x) => Some(x),
                    _ => None,
                })
                .collect(),
        };
        if targets.is_empty() {
            return Err(Error::semantic("the file declares no algebra"));
        }
        for alg in targets {
            let t = Instant::now();
            let rep = match a.samples {
                Some(n) => random_certify(alg, v, n, a.seed)?,
                None => certify(alg, v)?,
            };
            s.report(&alg.name, &rep, t);
        }
    } else if let Some(name) = &a.operator {
        let decl = f.operator(name)?;
        let kinds = match &a.kind {
            Some(k) => vec![OperatorKind::parse(k, parse_weight(&a.weight)?)
                .ok_or_else(|| Error::semantic(format!("unknown operator kind `{k}` (o-operator needs --weight)")))?],
            None if decl.kinds.is_empty() => {
                return Err(Error::semantic(format!("operator `{name}` declares no kind; pass --kind")))
            }
            None => decl.kinds.clone(),
        };
        for k in &kinds {
            let t = Instant::now();
            s.report(name, &certify_operator(&decl.candidate, k)?, t);
        }
    } else if let Some(name) = &a.rep {
        let t = Instant::now();
        s.report(name, &certify_rep(f.rep(name)?)?, t);
    } else if let Some(spec) = &a.crossed_module {
        let map = spec
            .strip_prefix("d=")
            .ok_or_else(|| Error::semantic(format!("--crossed-module expects d=NAME, got `{spec}`")))?;
        let decl = f.operator(map)?;
        let act = decl.candidate.rep()?;
        let t = Instant::now();
        let rep = homalg_core::constructions::crossed_module_check(act, &decl.candidate.map)?;
        s.report(&act.name, &rep, t);
    }
    Ok(())
}

/// The single declaration of the wanted keyword, or the named one.
fn pick<'f>(f: &'f SourceFile, name: Option<&str>, keyword: &str) -> Result<&'f Declaration> {
    if let Some(n) = name {
        return f.get(n).ok_or_else(|| Error::semantic(format!("no declaration `{n}`")));
    }
    let mut it = f.declarations.iter().filter(|d| d.keyword() == keyword);
    match (it.next(), it.next()) {
        (Some(d), None) => Ok(d),
        (None, _) => Err(Error::semantic(format!("the file declares no {keyword}"))),
        _ => Err(Error::semantic(format!("the file declares several of {keyword}; pass --target"))),
    }
}

/// A blocking precondition: precondition report on failure.
fn gate(s: &mut Session, target: &str, rep: CheckReport, started: Instant) -> bool {
    if rep.is_pass() {
        return true;
    }
    let check = format!("precondition:{}", rep.check);
    s.report(target, &rep.renamed(&check), started);
    s.code = EXIT_SEMANTIC;
    false
}

fn construct(s: &mut Session, a: ConstructArgs) -> Result<()> {
    let f = load(&a.file)?;
    let id = ConstructionId::parse(&a.id, a.map.as_deref()).ok_or_else(|| {
        Error::semantic(format!("unknown construction `{}` (yau-twist, differential-dialgebra and bimodule-map-dialgebra need --map)", a.id))
    })?;
    let t = Instant::now();
    let source_name = a.target.clone().or(a.rep.clone()).or(a.operator.clone());
    let (mut out, src) = match &id {
        c if c.is_hemisemi() => {
            let Declaration::Rep(r) = pick(&f, source_name.as_deref(), "rep")? else {
                return Err(Error::semantic(format!("{c} needs a rep")));
            };
            if !a.unchecked && !gate(s, &r.name, certify_rep(r)?, t) {
                return Ok(());
            }
            (hemisemi_unchecked(r, c)?, r.name.clone())
        }
        c if c.is_induced() => {
            let Declaration::Operator(o) = pick(&f, source_name.as_deref(), "operator")? else {
                return Err(Error::semantic(format!("{c} needs an operator")));
            };
            let kind = if c.is_tri() { OperatorKind::HomomorphicRelAvg } else { OperatorKind::RelAvg };
            if !a.unchecked && !gate(s, &o.candidate.name, certify_operator(&o.candidate, &kind)?, t) {
                return Ok(());
            }
            (induce_unchecked(&o.candidate, c)?, o.candidate.name.clone())
        }
        ConstructionId::BimoduleMapDialgebra(m) => {
            let o = f.operator(m)?;
            (bimodule_map_dialgebra(&o.candidate)?, o.candidate.name.clone())
        }
        ConstructionId::GraphClosure | ConstructionId::CrossedModuleCheck => {
            return Err(Error::semantic(format!("{id} is a check; use `check`")))
        }
        c => {
            let Declaration::Algebra(alg) = pick(&f, source_name.as_deref(), "algebra")? else {
                return Err(Error::semantic(format!("{c} needs an algebra")));
            };
            let built = match c {
                ConstructionId::YauTwist(phi) => {
                    if !a.unchecked && !gate(s, &alg.name, is_morphism(alg.map(phi)?, alg, alg)?, t) {
                        return Ok(());
                    }
                    yau_twist_unchecked(alg, phi)?
                }
                ConstructionId::DifferentialDialgebra(d) => differential_dialgebra(alg, d)?,
                _ if a.unchecked => functor_unchecked(alg, c)?,
                _ => {
                    let src_v = c.source_variety().ok_or_else(|| Error::semantic(format!("{c} is not a functor")))?;
                    if !gate(s, &alg.name, certify(alg, src_v)?, t) {
                        return Ok(());
                    }
                    functor(alg, c)?
                }
            };
            (built, alg.name.clone())
        }
    };
    let suffix = match &a.map {
        Some(m) => format!("{}-{m}", id.as_str()),
        None => id.as_str().to_string(),
    };
    out.name = a.name.clone().unwrap_or_else(|| format!("{src}.{suffix}"));
    let header = vec![
        format!("constructed: {id} from {src}"),
        format!("source file: {}", a.file.display()),
        format!("preconditions: {}", if a.unchecked { "not checked" } else { "checked" }),
    ];
    let text = write_source(&SourceFile::new().with(Declaration::Algebra(out.clone()))?, &header);
    if parse(&text)?.algebra(&out.name)? != &out {
        return Err(Error::semantic("constructed file does not round-trip"));
    }
    fs::write(&a.out, &text).map_err(|e| Error::semantic(format!("cannot write {}: {e}", a.out.display())))?;
    match out.variety {
        Some(v) => {
            let rep = certify(&out, v)?;
            s.report(&out.name, &rep, t);
        }
        None => s.report(&out.name, &CheckReport::pass(&format!("construct:{}", id.as_str())), t),
    }
    Ok(())
}

fn halg_files(path: &Path) -> Result<Vec<PathBuf>> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| Error::semantic(format!("cannot read {}: {e}", path.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "halg"))
        .collect();
    files.sort();
    Ok(files)
}

fn applicable_varieties(a: &AlgebraInstance) -> Vec<VarietyTag> {
    if let Some(v) = a.variety {
        return vec![v];
    }
    let names: BTreeSet<&str> = a.products.keys().map(String::as_str).collect();
    VarietyTag::ALL
        .into_iter()
        .filter(|v| v.products().iter().copied().collect::<BTreeSet<_>>() == names)
        .collect()
}

fn report_declaration(s: &mut Session, d: &Declaration) -> Result<()> {
    match d {
        Declaration::Algebra(a) => {
            for v in applicable_varieties(a) {
                let t = Instant::now();
                s.report(&a.name, &certify(a, v)?, t);
            }
        }
        Declaration::Rep(r) => {
            let t = Instant::now();
            s.report(&r.name, &certify_rep(r)?, t);
        }
        Declaration::Operator(o) => {
            let t = Instant::now();
            if o.kinds.is_empty() {
                let rep = if is_admissible(&o.candidate)? {
                    CheckReport::pass("intertwine")
                } else {
                    certify_operator(&o.candidate, &OperatorKind::RelAvg)?.renamed("intertwine")
                };
                s.report(&o.candidate.name, &rep, t);
            }
            for k in &o.kinds {
                let t = Instant::now();
                s.report(&o.candidate.name, &certify_operator(&o.candidate, k)?, t);
            }
        }
    }
    Ok(())
}

fn report(s: &mut Session, a: &ReportArgs) -> Result<()> {
    let mut seen: Vec<Declaration> = Vec::new();
    for path in halg_files(&a.path)? {
        let t = Instant::now();
        let f = match load(&path) {
            Ok(f) => f,
            Err(e) => {
                s.fail(&path.display().to_string(), "parse", &e, t);
                continue;
            }
        };
        for d in f.declarations {
            if seen.contains(&d) {
                continue;
            }
            if let Err(e) = report_declaration(s, &d) {
                s.fail(d.name(), d.keyword(), &e, Instant::now());
            }
            seen.push(d);
        }
    }
    Ok(())
}

fn battery(s: &mut Session, a: &BatteryArgs) -> Result<()> {
    let settings = match &a.setting {
        Some(n) => vec![Setting::parse(n).ok_or_else(|| Error::semantic(format!("unknown setting `{n}`")))?],
        None => Setting::ALL.to_vec(),
    };
    let cat = catalog()?;
    let cfg = BatteryConfig { seed: a.seed, grid: a.grid.clone(), samples: a.samples, perturbations: a.perturbations };
    for setting in settings {
        let t = Instant::now();
        let b = run_battery(setting, &cat, &cfg)?;
        let bad = b.disagreements();
        let check = "three-way";
        let mut rep = match bad.first() {
            None => CheckReport::pass(check),
            Some(c) => {
                let v = &c.verdicts;
                let w = [&v.certifier, &v.graph, &v.nijenhuis]
                    .into_iter()
                    .find_map(|r| r.witness.clone())
                    .expect("a disagreement has a failing side");
                CheckReport::fail(check, w).with_note(c.describe())
            }
        };
        rep = rep
            .with_note(format!("cases={}", b.cases.len()))
            .with_note(format!("negatives={}", b.negatives()))
            .with_note(format!("perturbed-negatives={}", b.perturbed_negatives()))
            .with_note(format!("disagreements={}", bad.len()));
        s.report(&setting.name(), &rep, t);
    }
    Ok(())
}

fn endomorphisms(s: &mut Session, a: &EndoArgs) -> Result<()> {
    let f = load(&a.file)?;
    let Declaration::Algebra(alg) = pick(&f, a.target.as_deref(), "algebra")? else {
        return Err(Error::semantic("endomorphisms need an algebra"));
    };
    let mut grid = GridSpec::new(&a.grid, &a.denominators, a.seed, a.count);
    if a.diagonal {
        grid = grid.diagonal();
    }
    for m in find_endomorphisms(alg, &grid)? {
        let rows: Vec<Vec<String>> =
            (0..m.dst_dim()).map(|r| (0..m.src_dim()).map(|c| m.get(r, c).to_string()).collect()).collect();
        let line = serde_json::json!({ "target": alg.name, "map": rows });
        let _ = writeln!(s.out, "{line}");
    }
    Ok(())
}

fn catalog_cmd(s: &mut Session, a: &CatalogArgs) -> Result<()> {
    let cat = catalog()?;
    if let Some(dir) = &a.export {
        fs::create_dir_all(dir).map_err(|e| Error::semantic(format!("cannot create {}: {e}", dir.display())))?;
    }
    for e in &cat {
        let item = match &e.item {
            CatalogItem::Algebra(_) => "algebra",
            CatalogItem::Rep(_) => "rep",
            CatalogItem::Operator(c, _) => match c.domain {
                OperatorDomain::OnRep(_) => "operator",
                OperatorDomain::OnAlgebra(_) => "algebra-operator",
            },
        };
        if let Some(dir) = &a.export {
            let p = dir.join(format!("{}.halg", e.id));
            fs::write(&p, e.file_text()?).map_err(|err| Error::semantic(format!("cannot write {}: {err}", p.display())))?;
        }
        let line = serde_json::json!({
            "id": e.id, "item": item, "provenance": e.provenance.as_str(), "notes": e.notes
        });
        let _ = writeln!(s.out, "{line}");
    }
    Ok(())
}
