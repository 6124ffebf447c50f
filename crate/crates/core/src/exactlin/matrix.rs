//! Dense matrices over an exact field with deterministic elimination.
//!
//! Pivoting is always "first nonzero entry in column order"; there is no
//! numerical pivoting since all arithmetic is exact. Every routine that
//! produces a basis does so in a canonical form, so equal spaces compare
//! bit-identically.

use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Row-major dense matrix. All entries belong to `field`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, rejecting mixed fields.
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::input(format!(
                "entry count {} does not match {rows}x{cols}",
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::input(format!(
                    "mixed fields: matrix over {field} contains entry over {}",
                    e.field()
                )));
            }
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, ambient: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, ambient, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let zero = Scalar::zero(self.field);
        Matrix::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let zero = Scalar::zero(self.field);
        (0..self.rows)
            .map(|i| {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() && !v[k].is_zero() {
                        acc = acc.add(&a.mul(&v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(s))
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the pivot columns in increasing order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // first nonzero entry in column order
            let Some(piv) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, piv);
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).sub(&factor.mul(self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Rank over the matrix's field. Deterministic.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the kernel, one column per free variable,
    /// in free-column order, then canonicalized by the caller.
    pub(crate) fn kernel_columns(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let zero = Scalar::zero(self.field);
        let one = Scalar::one(self.field);
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.get(prow, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self · x = b` with free variables set to zero in
    /// the canonical echelon order, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        // inconsistent iff some pivot lands in the augmented column
        if pivots.iter().any(|&p| p == self.cols) {
            return Ok(None);
        }
        let zero = Scalar::zero(self.field);
        let mut x = vec![zero; self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.get(prow, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        let f = FieldSpec::Rationals;
        Matrix::new(f, rows, cols, vals.iter().map(|&v| f.scalar_from_i64(v)).collect()).unwrap()
    }

    #[test]
    fn rank_empty_matrix_is_zero() {
        let m = Matrix::zero(FieldSpec::Rationals, 0, 0);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Matrix::identity(FieldSpec::Rationals, 3).rank(), 3);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = qmat(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let m = Matrix::identity(FieldSpec::Rationals, 2);
        assert!(m.kernel_columns().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let m = Matrix::zero(FieldSpec::Rationals, 2, 2);
        assert_eq!(m.kernel_columns().len(), 2);
    }

    #[test]
    fn kernel_over_f2() {
        let f = FieldSpec::Prime(2);
        let m = Matrix::new(f, 1, 2, vec![f.scalar_from_i64(1), f.scalar_from_i64(1)]).unwrap();
        let k = m.kernel_columns();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![f.scalar_from_i64(1), f.scalar_from_i64(1)]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(FieldSpec::Rationals, 3);
        let f = FieldSpec::Rationals;
        let b = vec![f.scalar_from_i64(5), f.scalar_from_i64(-1), f.scalar_from_i64(0)];
        assert_eq!(m.solve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_inconsistent() {
        let m = qmat(2, 2, &[1, 0, 0, 0]);
        let f = FieldSpec::Rationals;
        let b = vec![f.scalar_from_i64(0), f.scalar_from_i64(1)];
        assert_eq!(m.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_zeroes_free_variables() {
        let m = qmat(1, 2, &[1, 1]);
        let f = FieldSpec::Rationals;
        let b = vec![f.scalar_from_i64(2)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x, vec![f.scalar_from_i64(2), f.scalar_from_i64(0)]);
    }

    #[test]
    fn solve_rejects_bad_rhs_length() {
        let m = qmat(2, 2, &[1, 0, 0, 1]);
        assert!(m.solve(&[FieldSpec::Rationals.scalar_from_i64(1)]).is_err());
    }

    #[test]
    fn mixed_field_entries_rejected() {
        let q = FieldSpec::Rationals.scalar_from_i64(1);
        let p = FieldSpec::Prime(3).scalar_from_i64(1);
        assert!(Matrix::new(FieldSpec::Rationals, 1, 2, vec![q, p]).is_err());
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let m = qmat(3, 4, &[1, 2, 3, 4, 0, 1, 1, 0, 1, 3, 4, 4]);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}
