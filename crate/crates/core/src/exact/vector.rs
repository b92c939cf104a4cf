use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// A coordinate vector over the fixed ordered basis e₁…e_n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { coords: vec![Scalar::zero(); dim] }
    }

    /// Basis vector with 0-based index `i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector { coords: xs.iter().map(|&x| Scalar::int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        self.coords[i] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn same_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::shape(format!(
                "vector dimensions {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other)?;
        Ok(Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other)?;
        Ok(Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn neg(&self) -> Vector {
        Vector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// self += s·other
    pub fn axpy(&mut self, s: &Scalar, other: &Vector) -> Result<()> {
        self.same_dim(other)?;
        if s.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
        Ok(())
    }

    /// Concatenation, the coordinates of x+u in A⊕V.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        Vector { coords }
    }

    pub fn split(&self, at: usize) -> (Vector, Vector) {
        let (a, b) = self.coords.split_at(at);
        (Vector::from_coords(a.to_vec()), Vector::from_coords(b.to_vec()))
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
