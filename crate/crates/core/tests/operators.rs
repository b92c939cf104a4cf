use homalg_core::forge::{catalog, CatalogItem};
use homalg_core::operators::{is_admissible, lift_to_averaging};
use homalg_core::{
    certify_operator, AlgebraInstance, LinearMap, OperatorCandidate, OperatorKind, RepInstance, Scalar, Status,
};

fn rep(id: &str) -> RepInstance {
    catalog().unwrap().into_iter().find(|e| e.id == id).and_then(|e| e.rep().cloned()).unwrap()
}

fn op(id: &str) -> OperatorCandidate {
    match catalog().unwrap().into_iter().find(|e| e.id == id).unwrap().item {
        CatalogItem::Operator(c, _) => c,
        _ => panic!("{id} is not an operator"),
    }
}

fn kx2() -> AlgebraInstance {
    catalog().unwrap().into_iter().find(|e| e.id == "kx2").and_then(|e| e.algebra().cloned()).unwrap()
}

#[test]
fn kinds_round_trip() {
    let w = Scalar::frac(-1, 2);
    for k in [
        OperatorKind::Averaging,
        OperatorKind::RelAvgLeft,
        OperatorKind::RelAvgRight,
        OperatorKind::RelAvg,
        OperatorKind::HomomorphicRelAvg,
        OperatorKind::Nijenhuis,
    ] {
        assert_eq!(OperatorKind::parse(&k.as_str(), None), Some(k));
    }
    assert_eq!(OperatorKind::OOperator(w.clone()).as_str(), "o-operator(-1/2)");
    assert_eq!(OperatorKind::parse("o-operator", Some(w.clone())), Some(OperatorKind::OOperator(w)));
    assert_eq!(OperatorKind::parse("o-operator", None), None);
}

#[test]
fn catalog_operators_certify_their_kind() {
    let mut n = 0;
    for e in catalog().unwrap() {
        if let CatalogItem::Operator(c, k) = &e.item {
            assert!(certify_operator(c, k).unwrap().is_pass(), "{}", e.id);
            n += 1;
        }
    }
    assert_eq!(n, 9);
}

#[test]
fn sum_is_not_homomorphic_but_projection_is() {
    let s = op("kx2.sum2.sum");
    assert!(certify_operator(&s, &OperatorKind::RelAvg).unwrap().is_pass());
    let p = op("kx2.sum2.proj1");
    assert!(certify_operator(&p, &OperatorKind::HomomorphicRelAvg).unwrap().is_pass());
    let m = op("kx2.tensor-square.mult");
    assert!(certify_operator(&m, &OperatorKind::RelAvgLeft).unwrap().is_pass());
    assert!(certify_operator(&m, &OperatorKind::RelAvgRight).unwrap().is_pass());
}

#[test]
fn o_operator_signs() {
    let one = Scalar::one();
    let p = op("kx2.sum2.proj1");
    let neg = p.scaled(&-&one);
    assert!(certify_operator(&p, &OperatorKind::OOperator(-&one)).unwrap().is_pass());
    assert!(certify_operator(&neg, &OperatorKind::OOperator(one.clone())).unwrap().is_pass());
    assert_eq!(certify_operator(&neg, &OperatorKind::OOperator(-&one)).unwrap().status, Status::Fail);
    let s = op("kx2.sum2.sum");
    assert!(!certify_operator(&s, &OperatorKind::OOperator(-&one)).unwrap().is_pass());
}

#[test]
fn operators_on_the_algebra() {
    let a = kx2();
    let id = OperatorCandidate::on_algebra("id", a.clone(), LinearMap::identity(2));
    for k in [OperatorKind::Averaging, OperatorKind::Nijenhuis] {
        assert!(certify_operator(&id, &k).unwrap().is_pass(), "{k}");
    }
    // T(1) = 0, T(x) = x: Tx·Tx = 0 but T(Tx·x) = 0 and T is not averaging at (1, x).
    let t = OperatorCandidate::on_algebra("t", a, LinearMap::diag_ints(&[0, 1]));
    let r = certify_operator(&t, &OperatorKind::Averaging).unwrap();
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn non_intertwining_maps_are_not_admissible() {
    let r = rep("kx2.regular");
    let k = LinearMap::diag_ints(&[1, 2]);
    let c = OperatorCandidate::on_rep("k", r.with_beta(LinearMap::diag_ints(&[1, 1])), k);
    assert!(is_admissible(&c).unwrap());
    let a = kx2().with_alpha(LinearMap::diag_ints(&[1, 2]));
    let mut r = rep("kx2.regular");
    r.base = a;
    let c = OperatorCandidate::on_rep("k", r, LinearMap::from_fn(2, 2, |i, j| Scalar::int((i == 1 && j == 0) as i64)));
    assert!(!is_admissible(&c).unwrap());
    assert_eq!(certify_operator(&c, &OperatorKind::RelAvg).unwrap().status, Status::NotAdmissible);
}

#[test]
fn lifts_are_one_sided_averaging() {
    for id in ["kx2.tensor-square.mult", "kx2.sum2.sum", "ut2.sum2.sum"] {
        let (right, left) = lift_to_averaging(&op(id)).unwrap();
        assert!(certify_operator(&right, &OperatorKind::RelAvgRight).unwrap().is_pass(), "{id}");
        assert!(certify_operator(&left, &OperatorKind::RelAvgLeft).unwrap().is_pass(), "{id}");
    }
    let mut bad = op("kx2.sum2.sum");
    bad.map = homalg_core::forge::perturb_map(&bad.map, 1);
    assert!(lift_to_averaging(&bad).is_err());
}

#[test]
fn shape_mismatch_is_an_error() {
    let c = OperatorCandidate::on_rep("k", rep("kx2.sum2"), LinearMap::identity(2));
    assert!(certify_operator(&c, &OperatorKind::RelAvg).is_err());
}
