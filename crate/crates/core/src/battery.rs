//! Equivalence batteries: operator certifier, graph closure and Nijenhuis lift on seeded candidates.

use std::fmt;

use crate::constructions::{graph_closure, hemisemi, ConstructionId};
use crate::error::{Error, Result};
use crate::exact::LinearMap;
use crate::forge::{perturb_map, sample_operator_candidates, CatalogEntry, CatalogItem, GridSpec};
use crate::instance::{AlgebraInstance, Family, RepInstance};
use crate::operators::{ambient_for, certify_operator, is_admissible, nijenhuis_in, OperatorCandidate, OperatorKind};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Setting {
    pub family: Family,
    pub tri: bool,
}

impl Setting {
    pub const ALL: [Setting; 6] = [
        Setting { family: Family::Assoc, tri: false },
        Setting { family: Family::Lie, tri: false },
        Setting { family: Family::Jordan, tri: false },
        Setting { family: Family::Assoc, tri: true },
        Setting { family: Family::Lie, tri: true },
        Setting { family: Family::Jordan, tri: true },
    ];

    pub fn name(&self) -> String {
        let f = match self.family {
            Family::Assoc => "associative",
            Family::Lie => "lie",
            Family::Jordan => "jordan",
        };
        format!("{f}-{}", if self.tri { "tri" } else { "di" })
    }

    pub fn parse(s: &str) -> Option<Setting> {
        Setting::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Operator kind the graph and Nijenhuis characterizations are compared against.
    pub fn kind(&self) -> OperatorKind {
        if self.tri {
            OperatorKind::HomomorphicRelAvg
        } else {
            OperatorKind::RelAvg
        }
    }

    /// Catalog reps of this family; module kinds for di, actions for tri.
    pub fn reps(&self, catalog: &[CatalogEntry]) -> Vec<RepInstance> {
        catalog
            .iter()
            .filter_map(CatalogEntry::rep)
            .filter(|r| r.family() == self.family && (!self.tri || r.kind.is_action()))
            .map(|r| if self.tri { r.clone() } else { r.clone().with_kind(r.kind.module_kind()) })
            .collect()
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Verdicts {
    pub certifier: CheckReport,
    pub graph: CheckReport,
    pub nijenhuis: CheckReport,
}

impl Verdicts {
    pub fn agree(&self) -> bool {
        let p = self.certifier.is_pass();
        self.graph.is_pass() == p && self.nijenhuis.is_pass() == p
    }
}

/// Runs the three characterizations of `c`; `h` is the setting's hemisemi-direct product.
pub fn three_way(c: &OperatorCandidate, setting: Setting, h: &AlgebraInstance) -> Result<Verdicts> {
    let ambient = ambient_for(c.rep()?.kind);
    if ambient != hemisemi_id(setting) {
        return Err(Error::semantic(format!("`{}` does not belong to the {setting} setting", c.name)));
    }
    Ok(Verdicts {
        certifier: certify_operator(c, &setting.kind())?,
        graph: graph_closure(c, &ambient)?,
        nijenhuis: certify_operator(&nijenhuis_in(c, h.clone())?, &OperatorKind::Nijenhuis)?,
    })
}

fn hemisemi_id(s: Setting) -> ConstructionId {
    match (s.family, s.tri) {
        (Family::Assoc, false) => ConstructionId::HemisemiDiass,
        (Family::Lie, false) => ConstructionId::HemisemiLeib,
        (Family::Jordan, false) => ConstructionId::HemisemiDiJor,
        (Family::Assoc, true) => ConstructionId::HemisemiTriass,
        (Family::Lie, true) => ConstructionId::HemisemiTriLeib,
        (Family::Jordan, true) => ConstructionId::HemisemiTriJor,
    }
}

#[derive(Clone, Debug)]
pub struct Case {
    pub candidate: OperatorCandidate,
    /// Obtained by perturbing a certified candidate.
    pub perturbed: bool,
    pub verdicts: Verdicts,
}

impl Case {
    pub fn describe(&self) -> String {
        let rep = self.candidate.rep().map(|r| r.name.as_str()).unwrap_or("?");
        let v = &self.verdicts;
        format!(
            "{} on {rep}: certifier {}, graph {}, nijenhuis {}",
            self.candidate.name, v.certifier, v.graph, v.nijenhuis
        )
    }
}

#[derive(Clone, Debug)]
pub struct BatteryConfig {
    pub seed: u64,
    pub grid: Vec<i64>,
    /// Seeded draws across all reps of a setting.
    pub samples: usize,
    /// Perturbations kept per certified nonzero candidate.
    pub perturbations: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { seed: 11, grid: vec![-1, 0, 1], samples: 100, perturbations: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct BatteryReport {
    pub setting: Setting,
    pub cases: Vec<Case>,
}

impl BatteryReport {
    pub fn negatives(&self) -> usize {
        self.cases.iter().filter(|c| !c.verdicts.certifier.is_pass()).count()
    }

    pub fn perturbed_negatives(&self) -> usize {
        self.cases.iter().filter(|c| c.perturbed && !c.verdicts.certifier.is_pass()).count()
    }

    pub fn disagreements(&self) -> Vec<&Case> {
        self.cases.iter().filter(|c| !c.verdicts.agree()).collect()
    }

    /// Candidates the operator certifier accepts.
    pub fn certified(&self) -> impl Iterator<Item = &OperatorCandidate> {
        self.cases.iter().filter(|c| c.verdicts.certifier.is_pass()).map(|c| &c.candidate)
    }
}

fn seeds(rep: &RepInstance, catalog: &[CatalogEntry]) -> Vec<OperatorCandidate> {
    let (n, m) = (rep.base.dim, rep.v_dim);
    let mut out = vec![OperatorCandidate::on_rep("zero", rep.clone(), LinearMap::zero(m, n))];
    if n == m && (rep.name.ends_with(".regular") || rep.name.ends_with(".regular-action")) {
        out.push(OperatorCandidate::on_rep("id", rep.clone(), LinearMap::identity(n)));
    }
    for e in catalog {
        if let CatalogItem::Operator(c, _) = &e.item {
            if c.rep().is_ok_and(|r| r.name == rep.name) {
                out.push(OperatorCandidate::on_rep(&e.id, rep.clone(), c.map.clone()));
            }
        }
    }
    out
}

/// Seeds, grid draws and perturbations of certified candidates over every catalog rep of `setting`.
pub fn run_battery(setting: Setting, catalog: &[CatalogEntry], cfg: &BatteryConfig) -> Result<BatteryReport> {
    let reps = setting.reps(catalog);
    if reps.is_empty() {
        return Err(Error::Generation(format!("no catalog reps for the {setting} setting")));
    }
    let per_rep = cfg.samples.div_ceil(reps.len());
    let mut cases = Vec::new();
    for (idx, rep) in reps.iter().enumerate() {
        let h = hemisemi(rep, &hemisemi_id(setting))?;
        let mut pending: Vec<(OperatorCandidate, bool)> =
            seeds(rep, catalog).into_iter().map(|c| (c, false)).collect();
        let grid = GridSpec::new(&cfg.grid, &[1], cfg.seed.wrapping_add(idx as u64), per_rep);
        pending.extend(sample_operator_candidates(rep, &grid)?.into_iter().map(|c| (c, false)));
        let mut k = 0;
        while k < pending.len() {
            let (c, perturbed) = pending[k].clone();
            k += 1;
            let verdicts = three_way(&c, setting, &h)?;
            if !perturbed && verdicts.certifier.is_pass() && !c.map.is_zero() {
                let cells = c.map.src_dim() * c.map.dst_dim();
                let mut kept = 0;
                for i in 0..cells {
                    if kept == cfg.perturbations {
                        break;
                    }
                    let p = OperatorCandidate::on_rep(&format!("{}~{i}", c.name), rep.clone(), perturb_map(&c.map, i));
                    if is_admissible(&p)? && !certify_operator(&p, &setting.kind())?.is_pass() {
                        pending.push((p, true));
                        kept += 1;
                    }
                }
            }
            cases.push(Case { candidate: c, perturbed, verdicts });
        }
    }
    Ok(BatteryReport { setting, cases })
}
