//! Dense matrix and vector carriers.
//!
//! Everything in this crate operates on small dense real matrices
//! (n ≤ 64 by design), stored row-major in a flat `Vec<f64>`.
//! [`SymMatrix`] enforces exact symmetry at construction by averaging
//! `(M + Mᵀ)/2`, so downstream code never has to re-check it.

use std::ops::{Add, Index, Mul, Sub};

/// Real symmetric n×n matrix. Symmetry is an invariant: every constructor
/// symmetrizes its input, and the only mutator keeps both mirror entries
/// in step.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

/// Real n×n matrix with no symmetry requirement.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralMatrix {
    dim: usize,
    data: Vec<f64>,
}

/// Real n-vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from a flat row-major buffer, symmetrizing as `(M + Mᵀ)/2`.
    pub fn new(dim: usize, data: Vec<f64>) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        assert_eq!(data.len(), dim * dim, "data length must be dim²");
        let mut m = Self { dim, data };
        m.symmetrize_in_place();
        m
    }

    /// Builds from rows, symmetrizing as `(M + Mᵀ)/2`.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            data.extend_from_slice(row);
        }
        Self::new(dim, data)
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1);
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in entries.iter().enumerate() {
            m.data[i * dim + i] = v;
        }
        m
    }

    fn symmetrize_in_place(&mut self) {
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (self.data[i * n + j] + self.data[j * n + i]);
                self.data[i * n + j] = avg;
                self.data[j * n + i] = avg;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets entry (i, j) and its mirror (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    /// Max-abs entry norm, the norm every relative tolerance scales with.
    pub fn norm_max(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, t: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * t).collect(),
        }
    }

    pub fn apply_vec(&self, x: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim, "vector length must match matrix dim");
        let n = self.dim;
        let out = (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * x[j]).sum())
            .collect();
        Vector::new(out)
    }

    /// Quadratic form (Mx | x).
    pub fn quad_form(&self, x: &Vector) -> f64 {
        self.apply_vec(x).dot(x)
    }

    pub fn as_general(&self) -> GeneralMatrix {
        GeneralMatrix {
            dim: self.dim,
            data: self.data.clone(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| self.data[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }
}

impl GeneralMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        assert_eq!(data.len(), dim * dim, "data length must be dim²");
        Self { dim, data }
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            data.extend_from_slice(row);
        }
        Self::new(dim, data)
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::new(dim, vec![0.0; dim * dim]);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn norm_max(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn transpose(&self) -> GeneralMatrix {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.data[i * n + j];
            }
        }
        GeneralMatrix { dim: n, data: out }
    }

    pub fn matmul(&self, other: &GeneralMatrix) -> GeneralMatrix {
        assert_eq!(self.dim, other.dim, "matrix dims must match");
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        GeneralMatrix { dim: n, data: out }
    }

    pub fn apply_vec(&self, x: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim, "vector length must match matrix dim");
        let n = self.dim;
        let out = (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * x[j]).sum())
            .collect();
        Vector::new(out)
    }

    /// Projects onto the symmetric part `(M + Mᵀ)/2`.
    pub fn symmetrize(&self) -> SymMatrix {
        SymMatrix::new(self.dim, self.data.clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| self.data[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }
}

impl Vector {
    pub fn new(data: Vec<f64>) -> Self {
        assert!(!data.is_empty(), "vector must have at least one entry");
        Self { data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "vector dims must match");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn norm_max(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn norm_two(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, t: f64) -> Vector {
        Vector::new(self.data.iter().map(|v| v * t).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

impl Index<(usize, usize)> for SymMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl Index<(usize, usize)> for GeneralMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.data[i]
    }
}

macro_rules! impl_entrywise {
    ($ty:ident, $op:ident, $fn:ident, $expr:expr) => {
        impl $op<&$ty> for &$ty {
            type Output = $ty;
            fn $fn(self, rhs: &$ty) -> $ty {
                assert_eq!(self.dim, rhs.dim, "matrix dims must match");
                let data = self.data.iter().zip(&rhs.data).map($expr).collect();
                $ty {
                    dim: self.dim,
                    data,
                }
            }
        }
    };
}

impl_entrywise!(SymMatrix, Add, add, |(a, b)| a + b);
impl_entrywise!(SymMatrix, Sub, sub, |(a, b)| a - b);
impl_entrywise!(GeneralMatrix, Add, add, |(a, b)| a + b);
impl_entrywise!(GeneralMatrix, Sub, sub, |(a, b)| a - b);

impl Mul<f64> for &SymMatrix {
    type Output = SymMatrix;
    fn mul(self, t: f64) -> SymMatrix {
        self.scale(t)
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dims must match");
        Vector::new(
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dims must match");
        Vector::new(
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}
