use std::collections::BTreeMap;

use homalg_core::forge::{
    brute_oracle, catalog, find_endomorphisms, perturb_algebra, perturbation_count, sample_operator_candidates,
    trialgebra_example, CatalogItem, GridSpec, ORACLE_SCHEMAS,
};
use homalg_core::{check_schema, IdentitySchema, Interpretation, LinearMap, Scalar, StructureTensor, VarietyTag};
use proptest::prelude::*;

fn engine_schemas() -> BTreeMap<String, IdentitySchema> {
    let mut out = BTreeMap::new();
    for v in VarietyTag::ALL {
        for s in v.schemas() {
            if ORACLE_SCHEMAS.contains(&s.name()) {
                out.entry(s.name().to_string()).or_insert(s);
            }
        }
    }
    out
}

fn interp(dim: usize, t: &StructureTensor, alpha: LinearMap) -> Interpretation {
    let mut i = Interpretation::new().sort("A", dim).endo("alpha", "A", alpha);
    for p in ["mul", "bracket", "leib", "dashv", "vdash", "perp"] {
        i = i.product(p, "A", t.clone());
    }
    i
}

#[test]
fn every_oracle_schema_has_an_engine_twin() {
    assert_eq!(engine_schemas().len(), ORACLE_SCHEMAS.len());
}

#[test]
fn oracle_agrees_on_the_catalog() {
    let schemas = engine_schemas();
    let mut compared = 0;
    for e in catalog().unwrap() {
        let CatalogItem::Algebra(a) = &e.item else { continue };
        let i = a.interpretation().unwrap();
        for (name, s) in &schemas {
            let (Ok(x), Ok(y)) = (check_schema(s, &i), brute_oracle(name, &i)) else { continue };
            assert_eq!(x.is_pass(), y.is_pass(), "{name} on {}", e.id);
            assert_eq!(x.witness.map(|w| w.tuple), y.witness.map(|w| w.tuple), "{name} on {}", e.id);
            compared += 1;
        }
    }
    assert!(compared >= 40, "{compared}");
}

#[test]
fn oracle_on_zero_tensor_and_unknown_names() {
    let i = interp(2, &StructureTensor::square(2), LinearMap::identity(2));
    for name in ORACLE_SCHEMAS {
        assert!(brute_oracle(name, &i).unwrap().is_pass(), "{name}");
    }
    assert!(brute_oracle("axiom11", &i).is_err());
}

#[test]
fn untwisted_trialgebra_endomorphisms() {
    let tri = trialgebra_example(1, 1);
    let grid = GridSpec::new(&[0, 1, -1, 2, 3], &[1], 0, 100_000).diagonal();
    let found = find_endomorphisms(&tri, &grid).unwrap();
    assert!(found.contains(&LinearMap::identity(2)));
    assert!(found.contains(&LinearMap::zero(2, 2)));
    assert!(!found.contains(&LinearMap::diag_ints(&[2, 3])));
    // φ(e1) idempotent forces a ∈ {0, 1}; b is then free when a = 1 and zero when a = 0.
    let mut expect: Vec<LinearMap> = [0, 1, -1, 2, 3].iter().map(|&b| LinearMap::diag_ints(&[1, b])).collect();
    expect.push(LinearMap::zero(2, 2));
    assert_eq!(found.len(), expect.len());
    for m in &expect {
        assert!(found.contains(m), "{m:?}");
    }
}

#[test]
fn truncated_polynomial_endomorphisms() {
    let kx2 = catalog().unwrap().into_iter().find(|e| e.id == "kx2").and_then(|e| e.algebra().cloned()).unwrap();
    let found = find_endomorphisms(&kx2, &GridSpec::new(&[0, 1], &[1], 0, 100_000)).unwrap();
    assert!(found.contains(&LinearMap::identity(2)));
    assert!(found.contains(&LinearMap::diag_ints(&[1, 0])));
    assert_eq!(found.len(), 3);
    let zero = catalog().unwrap().into_iter().find(|e| e.id == "zero2").and_then(|e| e.algebra().cloned()).unwrap();
    assert_eq!(find_endomorphisms(&zero, &GridSpec::new(&[0, 1], &[1], 0, 100_000)).unwrap().len(), 16);
}

#[test]
fn sampling_is_deterministic_and_admissible() {
    let cat = catalog().unwrap();
    let rep = |id: &str| cat.iter().find(|e| e.id == id).and_then(|e| e.rep().cloned()).unwrap();
    let reg = rep("kx2.regular");
    let g = GridSpec::new(&[-1, 0, 1], &[1, 2], 5, 30);
    let a = sample_operator_candidates(&reg, &g).unwrap();
    assert_eq!(a.len(), 30);
    assert_eq!(a, sample_operator_candidates(&reg, &g).unwrap());
    assert!(sample_operator_candidates(&reg, &GridSpec::new(&[0, 1], &[1], 0, 0)).unwrap().is_empty());
    let ts = rep("kx2.tensor-square");
    let mult = match &cat.iter().find(|e| e.id == "kx2.tensor-square.mult").unwrap().item {
        CatalogItem::Operator(c, _) => c.map.clone(),
        _ => unreachable!(),
    };
    let draws = sample_operator_candidates(&ts, &GridSpec::new(&[0, 1], &[1], 1, 2000)).unwrap();
    assert!(draws.iter().any(|c| c.map == mult));
}

#[test]
fn perturbations_cover_every_constant() {
    let tri = trialgebra_example(1, 1);
    assert_eq!(perturbation_count(&tri), 24);
    let p = perturb_algebra(&tri, 0);
    assert_eq!(p.products["dashv"].get(0, 0, 0), &Scalar::int(2));
    let p = perturb_algebra(&tri, 8 + 7);
    assert_eq!(p.products["perp"].get(1, 1, 1), &Scalar::one());
}

#[test]
fn exported_catalog_matches_the_shipped_files() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog");
    let cat = catalog().unwrap();
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), cat.len());
    for e in cat {
        let shipped = std::fs::read_to_string(dir.join(format!("{}.halg", e.id))).unwrap();
        assert_eq!(shipped, e.file_text().unwrap(), "{}", e.id);
    }
}

fn random_tensor(max_dim: usize) -> impl Strategy<Value = (usize, StructureTensor, Vec<i64>)> {
    (1..=max_dim).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::sample::select(vec![-1i64, 0, 0, 0, 1, 2]), n * n * n),
            prop::collection::vec(prop::sample::select(vec![1i64, 1, -1, 2, 0]), n),
        )
            .prop_map(|(n, c, d)| {
                let mut t = StructureTensor::square(n);
                for (k, v) in c.iter().enumerate() {
                    t.set(k / (n * n), k / n % n, k % n, Scalar::int(*v));
                }
                (n, t, d)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_agrees_on_random_tensors((n, t, d) in random_tensor(3)) {
        let i = interp(n, &t, LinearMap::diag_ints(&d));
        for (name, s) in engine_schemas() {
            let x = check_schema(&s, &i).unwrap();
            let y = brute_oracle(&name, &i).unwrap();
            prop_assert_eq!(x.is_pass(), y.is_pass(), "{}", name);
        }
    }
}
