//! Benchmark fixtures.

use homalg_core::forge::{catalog, trialgebra_example, CatalogItem};
use homalg_core::{AlgebraInstance, OperatorCandidate, OperatorKind, Scalar, StructureTensor};

/// 𝕂[x]/(xⁿ) on 1, x, …, xⁿ⁻¹.
pub fn truncated(n: usize) -> AlgebraInstance {
    let mut e = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            e.push((i, j, i + j, Scalar::one()));
        }
    }
    AlgebraInstance::new(&format!("kx{n}"), n).with_product("mul", StructureTensor::from_entries((n, n, n), &e))
}

pub fn trialgebra() -> AlgebraInstance {
    trialgebra_example(2, 3)
}

/// Catalog operators with the kind each certifies.
pub fn operators() -> Vec<(OperatorCandidate, OperatorKind)> {
    catalog()
        .expect("catalog certifies")
        .into_iter()
        .filter_map(|e| match e.item {
            CatalogItem::Operator(c, k) => Some((c, k)),
            _ => None,
        })
        .collect()
}
