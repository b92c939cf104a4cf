use homalg_core::identity::{check_all, evaluate, tuple_count};
use homalg_core::varieties::{hom_associative, hom_jordan};
use homalg_core::{
    check_schema, check_schema_random, polarize, Error, IdentitySchema, Interpretation, LinearMap, Scalar, Status,
    StructureTensor, Vector,
};
use proptest::prelude::*;

fn one() -> Scalar {
    Scalar::one()
}

fn on_a(dim: usize, name: &str, t: StructureTensor) -> Interpretation {
    Interpretation::new().sort("A", dim).product(name, "A", t).endo("alpha", "A", LinearMap::identity(dim))
}

fn kx2() -> StructureTensor {
    StructureTensor::from_entries((2, 2, 2), &[(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one())])
}

fn assoc() -> IdentitySchema {
    hom_associative("mul").remove(0)
}

#[test]
fn truncated_polynomials_are_associative() {
    let r = check_schema(&assoc(), &on_a(2, "mul", kx2())).unwrap();
    assert!(r.is_pass());
    assert_eq!(r.tuples, 8);
}

#[test]
fn swapped_squares_fail_at_first_triple() {
    // e1e1 = e2, e2e2 = e1; (e1e1)e2 = e1 but e1(e1e2) = 0.
    let t = StructureTensor::from_entries((2, 2, 2), &[(0, 0, 1, one()), (1, 1, 0, one())]);
    let r = check_schema(&assoc(), &on_a(2, "mul", t.clone())).unwrap();
    let w = r.witness.clone().expect("fails");
    assert_eq!(w.identity, "hom-associativity");
    assert_eq!(w.tuple, vec![0, 0, 1]);
    assert_eq!(w.lhs, Vector::basis(2, 0));
    assert!(w.rhs.is_zero());
    assert_eq!(r.to_string(), "hom-associativity: fail at hom-associativity [1,1,2] lhs=(1, 0) rhs=(0, 0)");
    assert_eq!(check_schema_random(&assoc(), &on_a(2, "mul", t), 50, 3).unwrap().status, Status::Fail);
}

#[test]
fn zero_product_passes_everything() {
    let i = on_a(3, "mul", StructureTensor::square(3));
    for s in hom_associative("mul").into_iter().chain(hom_jordan("mul")) {
        assert!(check_schema(&s, &i).unwrap().is_pass());
        assert!(check_schema_random(&s, &i, 20, 1).unwrap().is_pass());
    }
}

#[test]
fn hom_jordan_polarizes_to_four_slots() {
    let s = hom_jordan("circ").remove(1);
    assert!(!s.is_multilinear());
    let p = polarize(&s);
    assert!(p.is_multilinear());
    assert_eq!(p.variables().len(), 4);
    let m = assoc();
    assert_eq!(polarize(&m), m);
}

#[test]
fn polarized_square() {
    // P(x) = x∘x on e1∘e1 = e1: L(a, b) = 2 a∘b.
    let s = IdentitySchema::parse("square", "x:A", "circ(x, x) = 0").unwrap();
    let one_dim = StructureTensor::from_entries((1, 1, 1), &[(0, 0, 0, one())]);
    let r = check_schema(&s, &on_a(1, "circ", one_dim)).unwrap();
    let w = r.witness.unwrap();
    assert_eq!(w.tuple, vec![0, 0]);
    assert_eq!(w.lhs, Vector::from_ints(&[2]));
    assert!(check_schema(&s, &on_a(1, "circ", StructureTensor::square(1))).unwrap().is_pass());
}

#[test]
fn unbound_symbols_and_shapes() {
    let i = Interpretation::new().sort("A", 2).endo("alpha", "A", LinearMap::identity(2));
    assert!(matches!(check_schema(&assoc(), &i), Err(Error::Semantic(_))));
    let bad = on_a(2, "mul", StructureTensor::square(3));
    assert!(check_schema(&assoc(), &bad).is_err());
}

#[test]
fn cost_is_dim_to_the_slots() {
    let i = on_a(3, "mul", kx3());
    assert_eq!(tuple_count(&assoc(), &i).unwrap(), 27);
    let j = polarize(&hom_jordan("mul").remove(1));
    assert_eq!(tuple_count(&j, &i).unwrap(), 81);
}

#[test]
fn check_all_stops_at_first_failure() {
    let t = StructureTensor::from_entries((2, 2, 2), &[(0, 1, 0, one())]);
    let i = on_a(2, "mul", t);
    let r = check_all("jordan", &hom_jordan("mul"), &i).unwrap();
    assert_eq!(r.check, "jordan");
    assert_eq!(r.failed_identity(), Some("commutativity"));
}

#[test]
fn evaluate_on_explicit_vectors() {
    let i = on_a(2, "mul", kx2());
    let x = Vector::from_ints(&[1, 1]);
    let (l, r) = evaluate(&assoc(), &i, &[x.clone(), x.clone(), x]).unwrap();
    assert_eq!(l, r);
    assert_eq!(l, Vector::from_ints(&[1, 3]));
}

fn kx3() -> StructureTensor {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 0..3 - a {
            e.push((a, b, a + b, one()));
        }
    }
    StructureTensor::from_entries((3, 3, 3), &e)
}

fn small_tensor(n: usize) -> impl Strategy<Value = StructureTensor> {
    prop::collection::vec(prop::sample::select(vec![-1i64, 0, 0, 0, 1]), n * n * n).prop_map(move |c| {
        let mut t = StructureTensor::square(n);
        for (k, v) in c.iter().enumerate() {
            t.set(k / (n * n), k / n % n, k % n, Scalar::int(*v));
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exhaustive_and_random_agree(t in small_tensor(2), seed in 0u64..1000) {
        let i = on_a(2, "mul", t);
        for s in hom_associative("mul").into_iter().chain(hom_jordan("mul")) {
            let a = check_schema(&s, &i).unwrap().is_pass();
            let b = check_schema_random(&s, &i, 50, seed).unwrap().is_pass();
            prop_assert_eq!(a, b, "{}", s.name());
        }
    }

    #[test]
    fn reports_are_deterministic(t in small_tensor(2)) {
        let i = on_a(2, "mul", t);
        let s = polarize(&hom_jordan("mul").remove(1));
        prop_assert_eq!(check_schema(&s, &i).unwrap(), check_schema(&s, &i).unwrap());
    }
}
