//! Identity schemas, their evaluation over basis tuples, and polarization.

mod eval;
mod expr;
mod interp;
mod polarize;
mod schema;

pub use eval::{check_all, check_schema, check_schema_random, evaluate, random_vector, tuple_count};
pub use expr::Expr;
pub use interp::{Interpretation, MapBinding, OpBinding};
pub use polarize::polarize;
pub use schema::{IdentitySchema, Variable};
