//! Exact structure-constant workbench for Hom-algebras: variety identities,
//! representations, operators and the constructions relating them.

pub mod battery;
pub mod constructions;
pub mod dsl;
pub mod error;
pub mod exact;
pub mod forge;
pub mod identity;
pub mod instance;
pub mod operators;
pub mod reps;
pub mod report;
pub mod varieties;

pub use error::{Error, Result};
pub use exact::{LinearMap, Scalar, StructureTensor, Vector};
pub use identity::{check_schema, check_schema_random, polarize, Expr, IdentitySchema, Interpretation};
pub use instance::{AlgebraInstance, RepInstance, RepKind};
pub use operators::{certify_operator, OperatorCandidate, OperatorDomain, OperatorKind};
pub use report::{CheckReport, Status, Witness};
pub use varieties::{certify, certify_multiplicative, is_morphism, VarietyTag};
