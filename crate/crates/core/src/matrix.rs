//! Dense matrices over the Gaussian rationals, with the handful of exact
//! kernels everything else is built on: multiplication, Kronecker products,
//! adjoints and traces.
//!
//! Values are immutable after construction and all operations are pure, so
//! matrices can be shared freely across threads.

use std::ops::Index;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, GaussianRational};

/// Dense row-major matrix. The flat index of entry `(i, j)` is `i*cols + j`;
/// under the global tensor convention the basis vector `e_i (x) e_j` of a
/// tensor square carries the flat index `i*d + j` (0-based).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> GaussianRational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        let c = rows[0].len();
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| GaussianRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    /// Exact matrix product. Zero entries are skipped, which makes products
    /// of the (mostly signed-permutation) matrices arising from normal forms
    /// essentially linear in the matrix size.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = vec![GaussianRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = &self.entries[i * self.cols + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let bkj = &other.entries[k * other.cols + j];
                    if bkj.is_zero() {
                        continue;
                    }
                    acc[i * other.cols + j] += aik * bkj;
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        })
    }

    /// Kronecker product under the convention `e_i (x) e_j -> i*dim + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = vec![GaussianRational::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = &self.entries[i * self.cols + j];
                if aij.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let bkl = &other.entries[k * other.cols + l];
                        if bkl.is_zero() {
                            continue;
                        }
                        let r = i * other.rows + k;
                        let c = j * other.cols + l;
                        entries[r * cols + c] = aij * bkl;
                    }
                }
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-GaussianRational::one())
    }

    pub fn scale(&self, s: &GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Matrix {
        self.scale(&scalar::from_rational(r.clone()))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> GaussianRational {
        debug_assert!(self.is_square());
        let mut t = GaussianRational::zero();
        for i in 0..self.rows {
            t += self.entries[i * self.cols + i].clone();
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self.entries[i * self.cols + j];
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if self[(i, j)] != self[(j, i)].conj() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_unitary(&self) -> bool {
        self.is_square()
            && self
                .mat_mul(&self.adjoint())
                .map(|p| p.is_identity())
                .unwrap_or(false)
    }

    /// `self^n` for square matrices.
    pub fn pow(&self, n: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("matrix power needs a square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;

    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| scalar::render(&self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
