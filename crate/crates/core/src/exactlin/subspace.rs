//! Subspaces of K^n in a canonical reduced echelon form.
//!
//! The basis matrix stores the subspace column-wise; its transpose is the
//! unique reduced row echelon form of any spanning set. Two equal subspaces
//! therefore have bit-identical representations, which is what lets every
//! homology comparison in the crate be a plain equality test.

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    /// ambient × dim; column j is the basis vector with pivot `pivots[j]`.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zero(field, ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        let mut rows = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let pivots = rows.rref_in_place();
        let dim = pivots.len();
        let basis = Matrix::from_fn(field, ambient, dim, |i, j| rows.get(j, i).clone());
        Subspace { field, ambient, basis, pivots }
    }

    /// The span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::from_spanning(m.field(), m.rows(), &m.columns())
    }

    /// Canonical kernel of `m`.
    pub fn kernel(m: &Matrix) -> Self {
        Subspace::from_spanning(m.field(), m.cols(), &m.kernel_columns())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not
    /// in the subspace. In reduced echelon form the coordinates are just
    /// the entries of `v` at the pivot positions.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.basis.apply(&coords);
        if rebuilt == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::input("subspaces over different fields"));
        }
        if self.ambient != other.ambient {
            return Err(Error::input(format!(
                "ambient dimension mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::from_spanning(self.field, self.ambient, &vs))
    }

    /// Intersection via the kernel of [U | V]: a pair (a, b) with
    /// U·a + V·b = 0 corresponds to the intersection vector U·a.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let stacked = self.basis.hstack(other.basis());
        let mut vectors = Vec::new();
        for k in stacked.kernel_columns() {
            let a = &k[..self.dim()];
            vectors.push(self.basis.apply(a));
        }
        Ok(Subspace::from_spanning(self.field, self.ambient, &vectors))
    }

    /// preimage(m, v) = { x : m·x ∈ v }, the kernel of the composite with
    /// the quotient by `v`, computed as the projection of ker [m | B_v].
    pub fn preimage(m: &Matrix, v: &Subspace) -> Result<Subspace> {
        if m.rows() != v.ambient_dim() {
            return Err(Error::input(format!(
                "preimage: map has {} rows but subspace lives in dimension {}",
                m.rows(),
                v.ambient_dim()
            )));
        }
        if m.field() != v.field() {
            return Err(Error::input("preimage: mixed fields"));
        }
        let stacked = m.hstack(v.basis());
        let mut vectors = Vec::new();
        for k in stacked.kernel_columns() {
            vectors.push(k[..m.cols()].to_vec());
        }
        Ok(Subspace::from_spanning(m.field(), m.cols(), &vectors))
    }

    /// Image of this subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "image_under: dimension mismatch");
        let vectors: Vec<Vec<Scalar>> =
            self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::from_spanning(m.field(), m.rows(), &vectors)
    }
}
