//! Seed catalog, deterministic generators and an independent identity oracle.

mod catalog;
mod generate;
mod oracle;

pub use catalog::{catalog, catalog_entry, trialgebra_example, twisted_seeds, CatalogEntry, CatalogItem, Provenance};
pub use generate::{
    find_endomorphisms, perturb_algebra, perturb_map, perturbation_count, sample_operator_candidates, GridSpec,
    MapShape,
};
pub use oracle::{brute_oracle, ORACLE_SCHEMAS};
