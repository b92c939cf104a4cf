use homalg_core::constructions::{functor, ConstructionId};
use homalg_core::forge::{catalog, trialgebra_example, twisted_seeds, CatalogItem};
use homalg_core::varieties::certify_classical;
use homalg_core::{certify, certify_multiplicative, is_morphism, AlgebraInstance, LinearMap, Scalar, StructureTensor, VarietyTag};
use proptest::prelude::*;

fn tri(a: i64, b: i64) -> AlgebraInstance {
    trialgebra_example(a, b)
}

#[test]
fn tags_round_trip() {
    for t in VarietyTag::ALL {
        assert_eq!(VarietyTag::parse(t.as_str()), Some(t));
        assert!(!t.schemas().is_empty());
    }
    assert_eq!(VarietyTag::parse("hom-nothing"), None);
}

#[test]
fn catalog_algebras_certify() {
    for e in catalog().unwrap() {
        if let CatalogItem::Algebra(a) = &e.item {
            assert!(certify(a, a.variety.unwrap()).unwrap().is_pass(), "{}", e.id);
            assert!(certify_multiplicative(a).unwrap().is_pass() || a.name.starts_with("tri-example-"), "{}", e.id);
        }
    }
    for a in twisted_seeds().unwrap() {
        assert!(certify(&a, a.variety.unwrap()).unwrap().is_pass(), "{}", a.name);
        assert!(certify_multiplicative(&a).unwrap().is_pass(), "{}", a.name);
    }
}

#[test]
fn trialgebra_example_and_its_twists() {
    let v = VarietyTag::HomAssociativeTrialgebra;
    assert!(certify(&tri(1, 1), v).unwrap().is_pass());
    assert!(certify_classical(&tri(1, 1), v).unwrap().is_pass());
    for (a, b) in [(2, 3), (-1, 5)] {
        let t = tri(a, b);
        assert_eq!(t.alpha().unwrap(), &LinearMap::diag_ints(&[a, b]));
        assert!(certify(&t, v).unwrap().is_pass(), "({a},{b})");
        assert!(!certify_classical(&t, v).unwrap().is_pass(), "({a},{b})");
    }
}

#[test]
fn twisted_trialgebra_is_not_multiplicative() {
    let r = certify_multiplicative(&tri(2, 3)).unwrap();
    assert_eq!(r.to_string(), "multiplicative: fail at multiplicative:dashv [1,1] lhs=(4, 0) rhs=(8, 0)");
}

#[test]
fn diagonal_twist_is_not_an_endomorphism() {
    let t = tri(1, 1);
    let r = is_morphism(&LinearMap::diag_ints(&[2, 3]), &t, &t).unwrap();
    assert_eq!(r.failed_identity(), Some("morphism:dashv"));
    assert!(is_morphism(&LinearMap::identity(2), &t, &t).unwrap().is_pass());
    assert!(is_morphism(&LinearMap::diag_ints(&[1, 0]), &t, &t).unwrap().is_pass());
}

#[test]
fn tri_to_leibniz_of_the_twist() {
    for (a, b) in [(2i64, 3i64), (-1, 5)] {
        let l = functor(&tri(a, b), &ConstructionId::TriToLeibnizTrialgebra).unwrap();
        assert!(certify(&l, VarietyTag::HomLeibnizTrialgebra).unwrap().is_pass());
        let curly = l.product("leib").unwrap();
        assert!(curly.is_zero(), "{{e1,e1}} = {a}e1 - {a}e1");
        let br = l.product("bracket").unwrap();
        assert_eq!(br.get(0, 1, 1), &Scalar::int(b));
        assert_eq!(br.get(1, 0, 1), &Scalar::int(-b));
        assert_eq!(br.nonzero(0, 1).len() + br.nonzero(1, 0).len(), 2);
        assert!(br.product(0, 0).is_zero() && br.product(1, 1).is_zero());
    }
}

#[test]
fn missing_products_are_semantic() {
    let a = AlgebraInstance::new("a", 2).with_product("mul", StructureTensor::square(2));
    assert!(certify(&a, VarietyTag::HomLie).is_err());
    assert!(certify(&a, VarietyTag::HomAssociative).unwrap().is_pass());
}

#[test]
fn lie_examples() {
    let mut t = StructureTensor::square(2);
    t.set(0, 1, 1, Scalar::one());
    let a = AlgebraInstance::new("half", 2).with_product("bracket", t.clone());
    let r = certify(&a, VarietyTag::HomLie).unwrap();
    assert_eq!(r.failed_identity(), Some("antisymmetry"));
    assert!(certify(&AlgebraInstance::new("l", 2).with_product("leib", t), VarietyTag::HomLeibniz).unwrap().is_pass());
}

fn tensor() -> impl Strategy<Value = StructureTensor> {
    prop::collection::vec(prop::sample::select(vec![-1i64, 0, 0, 1]), 8).prop_map(|c| {
        let mut t = StructureTensor::square(2);
        for (k, v) in c.iter().enumerate() {
            t.set(k / 4, k / 2 % 2, k % 2, Scalar::int(*v));
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn untwisted_agrees_with_classical(t in tensor()) {
        let a = AlgebraInstance::new("a", 2).with_product("mul", t.clone()).with_product("bracket", t.clone()).with_product("leib", t);
        for v in [VarietyTag::HomAssociative, VarietyTag::HomLie, VarietyTag::HomLeibniz] {
            prop_assert_eq!(certify(&a, v).unwrap().is_pass(), certify_classical(&a, v).unwrap().is_pass());
        }
    }
}

#[test]
fn plus_and_minus_of_associative_entries() {
    let mut algs: Vec<AlgebraInstance> = catalog().unwrap().iter().filter_map(|e| e.algebra().cloned()).collect();
    algs.extend(twisted_seeds().unwrap());
    for a in algs.iter().filter(|a| a.variety == Some(VarietyTag::HomAssociative)) {
        let m = functor(a, &ConstructionId::Minus).unwrap();
        assert!(certify(&m, VarietyTag::HomLie).unwrap().is_pass(), "{}", a.name);
        let p = functor(a, &ConstructionId::Plus).unwrap();
        assert!(certify(&p, VarietyTag::HomJordan).unwrap().is_pass(), "{}", a.name);
    }
}
