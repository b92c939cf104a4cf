//! Exact rational scalars, vectors, linear maps and structure tensors.

mod linear_map;
mod scalar;
mod tensor;
mod vector;

pub use linear_map::LinearMap;
pub use scalar::{scalar_arith, ArithOp, Scalar};
pub use tensor::StructureTensor;
pub use vector::Vector;

/// apply_bilinear(t, x, y) = Σᵢⱼ xᵢ yⱼ Σₖ c[i][j][k] eₖ
pub fn apply_bilinear(t: &StructureTensor, x: &Vector, y: &Vector) -> crate::Result<Vector> {
    t.apply(x, y)
}

pub fn compose(f: &LinearMap, g: &LinearMap) -> crate::Result<LinearMap> {
    f.compose(g)
}

pub fn map_power(f: &LinearMap, k: u32) -> crate::Result<LinearMap> {
    f.power(k)
}
