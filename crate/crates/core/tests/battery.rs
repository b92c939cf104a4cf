use homalg_core::battery::{run_battery, three_way, BatteryConfig, Setting};
use homalg_core::forge::catalog;
use homalg_core::operators::nijenhuis_of;
use homalg_core::constructions::{hemisemi, ConstructionId};
use homalg_core::{LinearMap, OperatorCandidate};

#[test]
fn di_settings_agree_three_ways() {
    let cat = catalog().unwrap();
    for s in Setting::ALL.into_iter().filter(|s| !s.tri) {
        let r = run_battery(s, &cat, &BatteryConfig::default()).unwrap();
        assert!(r.cases.len() >= 100, "{s}: {} cases", r.cases.len());
        assert!(r.perturbed_negatives() >= 10, "{s}: {} perturbed", r.perturbed_negatives());
        assert!(r.certified().count() > 0, "{s}");
        let d = r.disagreements();
        assert!(d.is_empty(), "{s}: {}", d[0].describe());
    }
}

#[test]
fn tri_settings_split_on_the_middle_product() {
    let cat = catalog().unwrap();
    let expect = [("associative-tri", 7, "nijenhuis:perp"), ("lie-tri", 1, "nijenhuis:bracket"), ("jordan-tri", 7, "nijenhuis:circ")];
    for (name, count, check) in expect {
        let s = Setting::parse(name).unwrap();
        let r = run_battery(s, &cat, &BatteryConfig::default()).unwrap();
        assert!(r.cases.len() >= 100);
        let d = r.disagreements();
        assert_eq!(d.len(), count, "{name}");
        assert_eq!(d[0].verdicts.nijenhuis.failed_identity(), Some(check));
        for c in d {
            assert_eq!(c.verdicts.certifier.is_pass(), c.verdicts.graph.is_pass(), "{}", c.describe());
        }
    }
}

#[test]
fn identity_on_the_regular_action() {
    let cat = catalog().unwrap();
    let rep = cat.iter().find(|e| e.id == "kx2.regular-action").and_then(|e| e.rep()).unwrap().clone();
    let id = OperatorCandidate::on_rep("id", rep.clone(), LinearMap::identity(2));
    let di = Setting::parse("associative-di").unwrap();
    let h = hemisemi(&rep.clone().with_kind(rep.kind.module_kind()), &ConstructionId::HemisemiDiass).unwrap();
    let m = OperatorCandidate::on_rep("id", rep.clone().with_kind(rep.kind.module_kind()), LinearMap::identity(2));
    assert!(three_way(&m, di, &h).unwrap().agree());
    let tri = Setting::parse("associative-tri").unwrap();
    let h = hemisemi(&rep, &ConstructionId::HemisemiTriass).unwrap();
    let v = three_way(&id, tri, &h).unwrap();
    assert!(v.certifier.is_pass() && v.graph.is_pass());
    assert_eq!(v.nijenhuis.failed_identity(), Some("nijenhuis:perp"));
    assert_eq!(nijenhuis_of(&id, &ConstructionId::HemisemiTriass).unwrap().map.dst_dim(), 4);
}

#[test]
fn battery_is_deterministic() {
    let cat = catalog().unwrap();
    let s = Setting::parse("lie-di").unwrap();
    let cfg = BatteryConfig::default();
    let a = run_battery(s, &cat, &cfg).unwrap();
    let b = run_battery(s, &cat, &cfg).unwrap();
    assert_eq!(a.cases.len(), b.cases.len());
    assert_eq!(a.negatives(), b.negatives());
}
