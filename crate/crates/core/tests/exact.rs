use homalg_core::exact::{apply_bilinear, compose, map_power, scalar_arith, ArithOp};
use homalg_core::{Error, LinearMap, Scalar, StructureTensor, Vector};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

fn kx2() -> StructureTensor {
    let one = Scalar::one();
    StructureTensor::from_entries((2, 2, 2), &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)])
}

#[test]
fn scalar_examples() {
    assert_eq!(scalar_arith(&q(1, 2), &q(1, 3), ArithOp::Add).unwrap(), q(5, 6));
    let half = scalar_arith(&q(2, 4), &q(0, 1), ArithOp::Add).unwrap();
    assert_eq!(half.to_string(), "1/2");
    assert!(matches!(scalar_arith(&q(1, 1), &q(0, 1), ArithOp::Div), Err(Error::Arithmetic(_))));
}

#[test]
fn scalar_lowest_terms_and_sign() {
    let s = Scalar::new(6, -4).unwrap();
    assert_eq!(s.to_string(), "-3/2");
    assert_eq!(s.denom().to_string(), "2");
    assert!("3/0".parse::<Scalar>().is_err());
    assert_eq!("-7/14".parse::<Scalar>().unwrap(), q(-1, 2));
}

#[test]
fn bilinear_examples() {
    let e1 = Vector::basis(2, 0);
    let e2 = Vector::basis(2, 1);
    let mut perp = StructureTensor::square(2);
    perp.set(0, 0, 0, Scalar::one());
    assert_eq!(apply_bilinear(&perp, &e1, &e1).unwrap(), e1);
    assert!(apply_bilinear(&kx2(), &Vector::zeros(2), &e2).unwrap().is_zero());
    assert!(apply_bilinear(&kx2(), &e2, &e2).unwrap().is_zero());
    assert!(matches!(apply_bilinear(&kx2(), &Vector::zeros(3), &e2), Err(Error::Shape(_))));
}

#[test]
fn map_examples() {
    let f = LinearMap::diag_ints(&[2, 3]);
    assert_eq!(compose(&LinearMap::identity(2), &f).unwrap(), f);
    assert_eq!(map_power(&f, 2).unwrap(), LinearMap::diag_ints(&[4, 9]));
    assert_eq!(compose(&f, &f).unwrap(), LinearMap::diag_ints(&[4, 9]));
    assert_eq!(map_power(&f, 0).unwrap(), LinearMap::identity(2));
    assert!(matches!(compose(&f, &LinearMap::identity(3)), Err(Error::Shape(_))));
}

#[test]
fn mixed_sort_tensor() {
    let mut l = StructureTensor::zeros(2, 3, 3);
    l.set(1, 2, 0, q(1, 2));
    let v = l.apply(&Vector::basis(2, 1), &Vector::basis(3, 2)).unwrap();
    assert_eq!(v, Vector::from_coords(vec![q(1, 2), q(0, 1), q(0, 1)]));
    assert_eq!(l.nonzero(1, 2).len(), 1);
    assert_eq!(l.opposite().dims(), (3, 2, 3));
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), n).prop_map(Vector::from_coords)
}

fn map(src: usize, dst: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(scalar(), src * dst)
        .prop_map(move |c| LinearMap::from_fn(src, dst, |r, k| c[r * src + k].clone()))
}

fn tensor(n: usize) -> impl Strategy<Value = StructureTensor> {
    prop::collection::vec(scalar(), n * n).prop_map(move |c| {
        StructureTensor::from_fn(n, n, n, |i, j| Vector::from_coords((0..n).map(|k| c[(i * n + j + k) % c.len()].clone()).collect()))
    })
}

proptest! {
    #[test]
    fn bilinear_in_both_slots(t in tensor(3), x in vector(3), y in vector(3), z in vector(3), s in scalar()) {
        let xz = x.add(&z.scale(&s)).unwrap();
        let lhs = t.apply(&xz, &y).unwrap();
        let rhs = t.apply(&x, &y).unwrap().add(&t.apply(&z, &y).unwrap().scale(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = t.apply(&y, &xz).unwrap();
        let rhs = t.apply(&y, &x).unwrap().add(&t.apply(&y, &z).unwrap().scale(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_is_associative(f in map(2, 3), g in map(3, 2), h in map(2, 2)) {
        let a = f.compose(&g).unwrap().compose(&f).unwrap().compose(&h).unwrap();
        let b = f.compose(&g.compose(&f.compose(&h).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn identity_is_a_unit(f in map(3, 2)) {
        prop_assert_eq!(LinearMap::identity(2).compose(&f).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&LinearMap::identity(3)).unwrap(), f);
    }

    #[test]
    fn powers_add(f in map(2, 2), m in 0u32..4, n in 0u32..4) {
        prop_assert_eq!(f.power(m + n).unwrap(), f.power(m).unwrap().compose(&f.power(n).unwrap()).unwrap());
    }

    #[test]
    fn mul_div_round_trip(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn apply_respects_composition(f in map(2, 3), g in map(3, 2), x in vector(3)) {
        let lhs = f.compose(&g).unwrap().apply(&x).unwrap();
        prop_assert_eq!(lhs, f.apply(&g.apply(&x).unwrap()).unwrap());
    }
}
