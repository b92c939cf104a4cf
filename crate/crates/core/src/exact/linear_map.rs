use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Scalar, Vector};

/// A linear map stored as a dst_dim × src_dim matrix; column j is the image of e_j.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    src_dim: usize,
    dst_dim: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(src_dim: usize, dst_dim: usize) -> Self {
        LinearMap { src_dim, dst_dim, entries: vec![Scalar::zero(); src_dim * dst_dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim, dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zero(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn diag_ints(diag: &[i64]) -> Self {
        Self::diagonal(&diag.iter().map(|&d| Scalar::int(d)).collect::<Vec<_>>())
    }

    /// Build from the images of the source basis vectors.
    pub fn from_columns(dst_dim: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zero(cols.len(), dst_dim);
        for (j, c) in cols.iter().enumerate() {
            if c.dim() != dst_dim {
                return Err(Error::shape(format!("column {j} has dim {}, expected {dst_dim}", c.dim())));
            }
            for (i, s) in c.coords().iter().enumerate() {
                m.set(i, j, s.clone());
            }
        }
        Ok(m)
    }

    /// Build from row-major integer data.
    pub fn from_rows_i64(dst_dim: usize, src_dim: usize, rows: &[i64]) -> Self {
        assert_eq!(rows.len(), dst_dim * src_dim);
        LinearMap { src_dim, dst_dim, entries: rows.iter().map(|&x| Scalar::int(x)).collect() }
    }

    pub fn from_fn(src_dim: usize, dst_dim: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = Self::zero(src_dim, dst_dim);
        for i in 0..dst_dim {
            for j in 0..src_dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }

    /// Entry at (row, col).
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.src_dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, s: Scalar) {
        self.entries[row * self.src_dim + col] = s;
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_coords((0..self.dst_dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.src_dim == self.dst_dim && *self == Self::identity(self.src_dim)
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.src_dim {
            return Err(Error::shape(format!(
                "map expects dim {}, got vector of dim {}",
                self.src_dim,
                x.dim()
            )));
        }
        let mut out = Vector::zeros(self.dst_dim);
        for (j, xj) in x.support() {
            for i in 0..self.dst_dim {
                let a = self.get(i, j);
                if !a.is_zero() {
                    let v = out.get(i) + &(a * xj);
                    out.set(i, v);
                }
            }
        }
        Ok(out)
    }

    /// self ∘ g
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        if g.dst_dim != self.src_dim {
            return Err(Error::shape(format!(
                "cannot compose {}→{} after {}→{}",
                self.src_dim, self.dst_dim, g.src_dim, g.dst_dim
            )));
        }
        let mut m = Self::zero(g.src_dim, self.dst_dim);
        for i in 0..self.dst_dim {
            for k in 0..self.src_dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..g.src_dim {
                    let b = g.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn power(&self, k: u32) -> Result<LinearMap> {
        if self.src_dim != self.dst_dim {
            return Err(Error::shape("power of a non-square map"));
        }
        let mut acc = Self::identity(self.src_dim);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(LinearMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(LinearMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    fn same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.src_dim != other.src_dim || self.dst_dim != other.dst_dim {
            return Err(Error::shape("linear maps of different shapes"));
        }
        Ok(())
    }

    /// Block-diagonal f ⊕ g acting on the concatenated space.
    pub fn direct_sum(&self, g: &LinearMap) -> LinearMap {
        let mut m = Self::zero(self.src_dim + g.src_dim, self.dst_dim + g.dst_dim);
        for i in 0..self.dst_dim {
            for j in 0..self.src_dim {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..g.dst_dim {
            for j in 0..g.src_dim {
                m.set(self.dst_dim + i, self.src_dim + j, g.get(i, j).clone());
            }
        }
        m
    }

    /// Kronecker product f ⊗ g with row-major basis e_i⊗e_j ↦ i·n+j.
    pub fn kron(&self, g: &LinearMap) -> LinearMap {
        let (sn, dn) = (g.src_dim, g.dst_dim);
        LinearMap::from_fn(self.src_dim * sn, self.dst_dim * dn, |r, c| {
            self.get(r / dn, c / sn) * g.get(r % dn, c % sn)
        })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({}→{})[", self.src_dim, self.dst_dim)?;
        for i in 0..self.dst_dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.src_dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
