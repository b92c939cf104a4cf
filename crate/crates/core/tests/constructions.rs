use homalg_core::constructions::{
    bimodule_map_dialgebra, crossed_module_check, differential_dialgebra, functor, graph_closure, hemisemi,
    hemisemi_unchecked, induce, yau_twist, ConstructionId,
};
use homalg_core::forge::{catalog, trialgebra_example, CatalogItem};
use homalg_core::{
    certify, certify_multiplicative, AlgebraInstance, Error, LinearMap, OperatorCandidate, RepInstance, Scalar,
    VarietyTag,
};

const HEMISEMI: [&str; 6] =
    ["hemisemi-diass", "hemisemi-leib", "hemisemi-dijor", "hemisemi-triass", "hemisemi-trileib", "hemisemi-trijor"];

fn entry_algebra(id: &str) -> AlgebraInstance {
    catalog().unwrap().into_iter().find(|e| e.id == id).and_then(|e| e.algebra().cloned()).unwrap()
}

fn entry_rep(id: &str) -> RepInstance {
    catalog().unwrap().into_iter().find(|e| e.id == id).and_then(|e| e.rep().cloned()).unwrap()
}

#[test]
fn ids_round_trip() {
    for s in HEMISEMI {
        let c = ConstructionId::parse(s, None).unwrap();
        assert_eq!(c.as_str(), s);
        assert!(c.is_hemisemi());
    }
    assert_eq!(ConstructionId::parse("yau-twist", Some("phi")), Some(ConstructionId::YauTwist("phi".into())));
    assert_eq!(ConstructionId::parse("yau-twist", None), None);
    assert_eq!(ConstructionId::YauTwist("phi".into()).to_string(), "yau-twist(phi)");
    assert_eq!(ConstructionId::parse("frobnicate", None), None);
}

#[test]
fn hemisemi_products_certify() {
    let mut built = 0;
    for e in catalog().unwrap() {
        let CatalogItem::Rep(r) = &e.item else { continue };
        for s in HEMISEMI {
            let c = ConstructionId::parse(s, None).unwrap();
            match hemisemi(r, &c) {
                Ok(h) => {
                    assert_eq!(h.dim, r.base.dim + r.v_dim);
                    assert!(certify(&h, c.output_variety().unwrap()).unwrap().is_pass(), "{s} of {}", r.name);
                    built += 1;
                }
                Err(Error::Semantic(_)) => {}
                Err(other) => panic!("{s} of {}: {other}", r.name),
            }
        }
    }
    assert_eq!(built, 33);
}

#[test]
fn hemisemi_rejects_uncertified_reps() {
    let mut r = entry_rep("kx2.regular");
    r.beta = LinearMap::diag_ints(&[1, 2]);
    assert!(matches!(hemisemi(&r, &ConstructionId::HemisemiDiass), Err(Error::Rejected(_))));
    assert!(hemisemi_unchecked(&r, &ConstructionId::HemisemiDiass).is_ok());
}

#[test]
fn induced_structures_from_catalog_operators() {
    for e in catalog().unwrap() {
        let CatalogItem::Operator(c, _) = &e.item else { continue };
        let d = induce(c, &ConstructionId::InducedDialgebra).unwrap();
        assert!(certify(&d, VarietyTag::HomAssociativeDialgebra).unwrap().is_pass(), "{}", e.id);
        let l = functor(&d, &ConstructionId::Dicommutator).unwrap();
        assert!(certify(&l, VarietyTag::HomLeibniz).unwrap().is_pass(), "{}", e.id);
        assert!(graph_closure(c, &ConstructionId::HemisemiDiass).unwrap().is_pass(), "{}", e.id);
    }
}

#[test]
fn induced_rejects_non_operators() {
    let r = entry_rep("kx2.sum2");
    let k = homalg_core::forge::perturb_map(&LinearMap::from_fn(4, 2, |row, col| Scalar::int((row == col) as i64)), 1);
    let c = OperatorCandidate::on_rep("k", r, k);
    assert!(matches!(induce(&c, &ConstructionId::InducedDialgebra), Err(Error::Rejected(_))));
    assert!(matches!(induce(&c, &ConstructionId::Minus), Err(Error::Semantic(_))));
}

#[test]
fn yau_twists() {
    let kx2 = entry_algebra("kx2").with_map("p", LinearMap::diag_ints(&[1, 0]));
    let t = yau_twist(&kx2, "p").unwrap();
    assert!(certify(&t, VarietyTag::HomAssociative).unwrap().is_pass());
    assert!(certify_multiplicative(&t).unwrap().is_pass());
    assert_eq!(t.alpha().unwrap(), &LinearMap::diag_ints(&[1, 0]));
    let tri = trialgebra_example(1, 1);
    assert!(matches!(yau_twist(&tri, "phi23"), Err(Error::Rejected(_))));
}

#[test]
fn trialgebra_functors() {
    let tri = trialgebra_example(2, 3);
    for (id, v) in [
        ("tri-to-leibniz-trialgebra", VarietyTag::HomLeibnizTrialgebra),
        ("tridendriform-from-trialgebra", VarietyTag::HomTridendriform),
    ] {
        let out = functor(&tri, &ConstructionId::parse(id, None).unwrap()).unwrap();
        assert!(certify(&out, v).unwrap().is_pass(), "{id}");
    }
    assert!(functor(&entry_algebra("kx2"), &ConstructionId::TriToLeibnizTrialgebra).is_err());
    let j = functor(&trialgebra_example(1, 1), &ConstructionId::TriToJordanTrialgebra).unwrap();
    assert!(certify(&j, VarietyTag::HomJordanTrialgebra).unwrap().is_pass());
    let j = functor(&tri, &ConstructionId::TriToJordanTrialgebra).unwrap();
    let r = certify(&j, VarietyTag::HomJordanTrialgebra).unwrap();
    assert_eq!(r.to_string(), "hom-jordan-trialgebra: fail at HJTL0 [1,1,1,1] lhs=(6144, 0) rhs=(3072, 0)");
}

#[test]
fn dialgebra_functors() {
    let d = hemisemi(&entry_rep("ut2.regular"), &ConstructionId::HemisemiDiass).unwrap();
    for (c, v) in [
        (ConstructionId::Dicommutator, VarietyTag::HomLeibniz),
        (ConstructionId::AntiDicommutator, VarietyTag::HomJordanDialgebra),
        (ConstructionId::OppositeDialgebra, VarietyTag::HomAssociativeDialgebra),
    ] {
        let out = functor(&d, &c).unwrap();
        assert!(certify(&out, v).unwrap().is_pass(), "{c}");
    }
}

#[test]
fn inner_derivation_of_upper_triangular() {
    // d = [E12, -]: E11 ↦ -E12, E22 ↦ E12.
    let d = LinearMap::from_fn(3, 3, |row, col| match (row, col) {
        (1, 0) => Scalar::int(-1),
        (1, 2) => Scalar::one(),
        _ => Scalar::zero(),
    });
    let ut2 = entry_algebra("ut2").with_map("d", d);
    let out = differential_dialgebra(&ut2, "d").unwrap();
    assert!(certify(&out, VarietyTag::HomAssociativeDialgebra).unwrap().is_pass());
    let bad = entry_algebra("ut2").with_map("d", LinearMap::identity(3));
    assert!(matches!(differential_dialgebra(&bad, "d"), Err(Error::Rejected(_))));
}

#[test]
fn bimodule_map_dialgebra_from_the_identity() {
    let r = entry_rep("kx2.regular");
    let f = OperatorCandidate::on_rep("id", r.clone(), LinearMap::identity(2));
    let out = bimodule_map_dialgebra(&f).unwrap();
    assert!(certify(&out, VarietyTag::HomAssociativeDialgebra).unwrap().is_pass());
    let g = OperatorCandidate::on_rep("g", r, LinearMap::diag_ints(&[0, 1]));
    assert!(matches!(bimodule_map_dialgebra(&g), Err(Error::Rejected(_))));
}

#[test]
fn crossed_modules() {
    let act = entry_rep("kx2.regular-action");
    let r = crossed_module_check(&act, &LinearMap::identity(2)).unwrap();
    assert!(r.is_pass());
    assert_eq!(r.notes, vec!["homomorphic-rel-avg: pass".to_string()]);
    let sum = entry_rep("kx2.regular");
    assert!(crossed_module_check(&sum, &LinearMap::identity(2)).is_err());
    let zero = crossed_module_check(&act, &LinearMap::zero(2, 2)).unwrap();
    assert_eq!(zero.failed_identity(), Some("crossed-peiffer-left"));
}

#[test]
fn zero_middle_needs_vanishing_left_cubes() {
    // axiom6 with ⊥ = 0 forces (x⊣y)⊣α(z) = 0.
    let d = hemisemi(&entry_rep("ut2.regular"), &ConstructionId::HemisemiDiass).unwrap();
    let t = functor(&d, &ConstructionId::DiToTriZeroMiddle).unwrap();
    assert_eq!(certify(&t, VarietyTag::HomAssociativeTrialgebra).unwrap().failed_identity(), Some("axiom6"));
    let zero = hemisemi(&entry_rep("kx2.regular"), &ConstructionId::HemisemiDiass).unwrap();
    let mut z = zero.clone();
    for t in z.products.values_mut() {
        *t = homalg_core::StructureTensor::square(zero.dim);
    }
    let t = functor(&z, &ConstructionId::DiToTriZeroMiddle).unwrap();
    assert!(certify(&t, VarietyTag::HomAssociativeTrialgebra).unwrap().is_pass());
}
