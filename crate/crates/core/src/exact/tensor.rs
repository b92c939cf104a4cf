use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Scalar, Vector};

/// Bilinear map X × Y → Z given by eᵢ∗eⱼ = Σₖ c[i][j][k] eₖ.
///
/// Square products have all three dimensions equal; action maps such as
/// l: A×V→V are mixed-sort.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    coeffs: Vec<Scalar>,
    // nonzero (k, c) per (i, j), kept in sync with coeffs
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl StructureTensor {
    pub fn zeros(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        StructureTensor {
            left_dim,
            right_dim,
            out_dim,
            coeffs: vec![Scalar::zero(); left_dim * right_dim * out_dim],
            sparse: vec![Vec::new(); left_dim * right_dim],
        }
    }

    pub fn square(dim: usize) -> Self {
        Self::zeros(dim, dim, dim)
    }

    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        f: impl Fn(usize, usize) -> Vector,
    ) -> Self {
        let mut t = Self::zeros(left_dim, right_dim, out_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                let v = f(i, j);
                assert_eq!(v.dim(), out_dim);
                t.set_product(i, j, &v);
            }
        }
        t
    }

    /// Builds a product from sparse (i, j, k, c) entries, 0-based.
    pub fn from_entries(dims: (usize, usize, usize), entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut t = Self::zeros(dims.0, dims.1, dims.2);
        for (i, j, k, c) in entries {
            t.set(*i, *j, *k, c.clone());
        }
        t
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn is_square(&self) -> bool {
        self.left_dim == self.right_dim && self.right_dim == self.out_dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right_dim + j) * self.out_dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = c;
        self.resync(i, j);
    }

    /// Sets eᵢ∗eⱼ to the given vector.
    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        for k in 0..self.out_dim {
            let n = self.idx(i, j, k);
            self.coeffs[n] = v.get(k).clone();
        }
        self.resync(i, j);
    }

    fn resync(&mut self, i: usize, j: usize) {
        let base = self.idx(i, j, 0);
        self.sparse[i * self.right_dim + j] = (0..self.out_dim)
            .filter(|&k| !self.coeffs[base + k].is_zero())
            .map(|k| (k, self.coeffs[base + k].clone()))
            .collect();
    }

    /// eᵢ∗eⱼ as a vector.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        let mut v = Vector::zeros(self.out_dim);
        for (k, c) in &self.sparse[i * self.right_dim + j] {
            v.set(*k, c.clone());
        }
        v
    }

    pub fn nonzero(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.right_dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.sparse.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.left_dim || y.dim() != self.right_dim {
            return Err(Error::shape(format!(
                "product expects dims ({}, {}), got ({}, {})",
                self.left_dim,
                self.right_dim,
                x.dim(),
                y.dim()
            )));
        }
        let mut acc = vec![Scalar::zero(); self.out_dim];
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let row = &self.sparse[i * self.right_dim + j];
                if row.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in row {
                    acc[*k] += &(&w * c);
                }
            }
        }
        Ok(Vector::from_coords(acc))
    }

    /// φ∘t : (x, y) ↦ φ(x∗y)
    pub fn compose_out(&self, phi: &LinearMap) -> Result<StructureTensor> {
        if phi.src_dim() != self.out_dim {
            return Err(Error::shape("post-composition map has wrong source dimension"));
        }
        let mut out = Self::zeros(self.left_dim, self.right_dim, phi.dst_dim());
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                if !self.nonzero(i, j).is_empty() {
                    out.set_product(i, j, &phi.apply(&self.product(i, j))?);
                }
            }
        }
        Ok(out)
    }

    /// t(f x, g y)
    pub fn precompose(&self, f: &LinearMap, g: &LinearMap) -> Result<StructureTensor> {
        if f.dst_dim() != self.left_dim || g.dst_dim() != self.right_dim {
            return Err(Error::shape("pre-composition maps have wrong target dimensions"));
        }
        let mut out = Self::zeros(f.src_dim(), g.src_dim(), self.out_dim);
        for i in 0..f.src_dim() {
            let fi = f.column(i);
            for j in 0..g.src_dim() {
                out.set_product(i, j, &self.apply(&fi, &g.column(j))?);
            }
        }
        Ok(out)
    }

    /// (x, y) ↦ y∗x
    pub fn opposite(&self) -> StructureTensor {
        let mut out = Self::zeros(self.right_dim, self.left_dim, self.out_dim);
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                for (k, c) in self.nonzero(i, j) {
                    out.set(j, i, *k, c.clone());
                }
            }
        }
        out
    }

    pub fn add(&self, other: &StructureTensor) -> Result<StructureTensor> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &StructureTensor) -> Result<StructureTensor> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> StructureTensor {
        let mut out = Self::zeros(self.left_dim, self.right_dim, self.out_dim);
        out.coeffs = self.coeffs.iter().map(|c| c * s).collect();
        out.resync_all();
        out
    }

    fn combine(&self, other: &StructureTensor, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<StructureTensor> {
        if self.dims() != other.dims() {
            return Err(Error::shape("tensors of different shapes"));
        }
        let mut out = Self::zeros(self.left_dim, self.right_dim, self.out_dim);
        out.coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        out.resync_all();
        Ok(out)
    }

    fn resync_all(&mut self) {
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                self.resync(i, j);
            }
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }

    /// Nonzero entries (i, j, k, c) in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                for (k, c) in self.nonzero(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureTensor{:?}{{", self.dims())?;
        for (n, (i, j, k, c)) in self.entries().into_iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "e{}*e{}→{}e{}", i + 1, j + 1, c, k + 1)?;
        }
        write!(f, "}}")
    }
}
