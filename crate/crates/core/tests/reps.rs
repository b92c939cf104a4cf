use homalg_core::forge::{catalog, perturb_map, twisted_seeds, CatalogItem};
use homalg_core::instance::Family;
use homalg_core::reps::{
    certify_rep, direct_sum_bimodule, minus_rep, plus_rep, regular_bimodule, regular_module, semidirect_product,
    tensor_square_bimodule,
};
use homalg_core::{certify, Error, RepInstance, RepKind, StructureTensor, VarietyTag};

fn reps() -> Vec<RepInstance> {
    catalog().unwrap().iter().filter_map(|e| e.rep().cloned()).collect()
}

#[test]
fn kinds_round_trip() {
    for k in RepKind::ALL {
        assert_eq!(RepKind::parse(k.as_str()), Some(k));
        assert!(!k.module_kind().is_action());
        assert_eq!(k.module_kind().family(), k.family());
    }
}

#[test]
fn catalog_reps_certify() {
    let all = reps();
    assert_eq!(all.len(), 21);
    for r in &all {
        assert!(certify_rep(r).unwrap().is_pass(), "{}", r.name);
    }
}

#[test]
fn semidirect_products_land_in_the_base_variety() {
    for r in reps().iter().filter(|r| r.kind.is_action()) {
        let s = semidirect_product(r).unwrap();
        assert_eq!(s.dim, r.base.dim + r.v_dim);
        assert!(certify(&s, r.family().base_variety()).unwrap().is_pass(), "{}", r.name);
    }
    let m = reps().into_iter().find(|r| r.kind == RepKind::Bimodule).unwrap();
    assert!(matches!(semidirect_product(&m), Err(Error::Semantic(_))));
}

#[test]
fn plus_and_minus_of_associative_reps() {
    for r in reps().iter().filter(|r| r.family() == Family::Assoc) {
        let p = plus_rep(r).unwrap();
        assert!(certify_rep(&p).unwrap().is_pass(), "{}", p.name);
        let m = minus_rep(r).unwrap();
        assert!(certify_rep(&m).unwrap().is_pass(), "{}", m.name);
    }
}

#[test]
fn twisted_regular_actions() {
    for a in twisted_seeds().unwrap() {
        let fam = match a.variety.unwrap() {
            VarietyTag::HomAssociative => Family::Assoc,
            VarietyTag::HomLie => Family::Lie,
            _ => Family::Jordan,
        };
        let m = regular_module(&a, fam, false).unwrap();
        assert!(certify_rep(&m).unwrap().is_pass(), "{}", a.name);
        let act = regular_module(&a, fam, true);
        if fam == Family::Jordan {
            assert!(matches!(act, Err(Error::Rejected(_))), "{}", a.name);
        } else {
            assert!(certify_rep(&act.unwrap()).unwrap().is_pass(), "{}", a.name);
        }
    }
}

#[test]
fn plus_of_a_twisted_action_fails_the_fourth_jordan_axiom() {
    let kx2 = twisted_seeds().unwrap().into_iter().find(|a| a.name == "kx2-tw").unwrap();
    let act = regular_module(&kx2, Family::Assoc, true).unwrap();
    let r = certify_rep(&plus_rep(&act).unwrap()).unwrap();
    let w = r.witness.clone().unwrap();
    assert_eq!(w.identity, "ActHJ4");
    assert_eq!(r.to_string(), "rep:jordan-action: fail at ActHJ4 [1,1,1,2] lhs=(0, 128) rhs=(0, 192)");
}

#[test]
fn tensor_square_needs_the_identity_twist() {
    let kx2 = twisted_seeds().unwrap().into_iter().find(|a| a.name == "kx2-tw").unwrap();
    assert!(tensor_square_bimodule(&kx2).is_err());
    assert!(direct_sum_bimodule(&kx2, 3).is_ok());
}

#[test]
fn perturbed_actions_fail() {
    let (mut tried, mut failures) = (0, 0);
    for e in catalog().unwrap() {
        let CatalogItem::Rep(r) = &e.item else { continue };
        if r.family() != Family::Assoc {
            continue;
        }
        tried += 1;
        let l = r.action("l").unwrap();
        let mut bad = r.clone();
        let mut t = l.clone();
        let v = t.get(0, 0, 0) + &homalg_core::Scalar::one();
        t.set(0, 0, 0, v);
        bad.actions.insert("l".into(), t);
        if !certify_rep(&bad).unwrap().is_pass() {
            failures += 1;
        }
        let beta = perturb_map(&r.beta, 0);
        assert!(!certify_rep(&r.clone().with_beta(beta)).unwrap().is_pass(), "{}", r.name);
    }
    assert_eq!((tried, failures), (15, 15));
}

#[test]
fn regular_bimodule_rejects_non_associative() {
    let mut t = StructureTensor::square(2);
    t.set(0, 0, 1, homalg_core::Scalar::one());
    t.set(1, 1, 0, homalg_core::Scalar::one());
    let a = homalg_core::AlgebraInstance::new("swap", 2).with_product("mul", t);
    assert!(matches!(regular_bimodule(&a), Err(Error::Rejected(_))));
}
