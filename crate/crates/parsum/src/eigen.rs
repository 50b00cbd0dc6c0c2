//! Symmetric eigendecomposition by cyclic Jacobi sweeps.
//!
//! Jacobi is slow compared to tridiagonal QR but unconditionally robust on
//! the small dense matrices this crate targets, and it is easy to make
//! bit-deterministic: the sweep order is fixed, the stopping test is fixed,
//! and every eigenvector is sign-normalized so that repeated calls on the
//! same input produce identical bytes.

use crate::error::{Error, Result};
use crate::matrix::{GeneralMatrix, SymMatrix};

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// The iteration stops once the off-diagonal Frobenius norm drops below
/// `OFF_DIAG_FACTOR * ‖M‖_F`.
pub const OFF_DIAG_FACTOR: f64 = 1e-14;

/// Eigendecomposition `M = Q · diag(λ) · Qᵀ` of a symmetric matrix.
///
/// Columns of `q` are orthonormal eigenvectors; `lambda` is ascending.
/// Sign convention: the largest-magnitude entry of each eigenvector is
/// positive (first such entry wins on ties), which pins the decomposition
/// down to a single representative.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    q: GeneralMatrix,
    lambda: Vec<f64>,
}

impl EigenDecomposition {
    pub fn q(&self) -> &GeneralMatrix {
        &self.q
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.lambda
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.lambda[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.lambda[self.lambda.len() - 1]
    }

    /// Assembles `Q · diag(f(λ)) · Qᵀ`, re-symmetrized.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> SymMatrix {
        let n = self.lambda.len();
        let mut out = vec![0.0; n * n];
        for (k, &lam) in self.lambda.iter().enumerate() {
            let flam = f(lam);
            if flam == 0.0 {
                continue;
            }
            for i in 0..n {
                let qik = self.q.get(i, k);
                for j in 0..n {
                    out[i * n + j] += flam * qik * self.q.get(j, k);
                }
            }
        }
        SymMatrix::new(n, out)
    }

    /// `Q · diag(λ) · Qᵀ`; equals the source matrix up to rounding.
    pub fn reconstruct(&self) -> SymMatrix {
        self.apply(|t| t)
    }

    /// `M⁻¹ · rhs` through this decomposition. The caller is responsible
    /// for the spectrum being safely invertible.
    pub fn solve(&self, rhs: &GeneralMatrix) -> GeneralMatrix {
        let n = self.lambda.len();
        assert_eq!(rhs.dim(), n, "matrix dims must match");
        let mut scaled = self.q.transpose().matmul(rhs);
        for i in 0..n {
            let inv = 1.0 / self.lambda[i];
            for j in 0..n {
                scaled.set(i, j, scaled.get(i, j) * inv);
            }
        }
        self.q.matmul(&scaled)
    }
}

/// Decomposes a symmetric matrix with cyclic Jacobi rotations.
///
/// Deterministic for identical input. Fails with [`Error::NonConvergence`]
/// if `MAX_SWEEPS` sweeps do not reach the off-diagonal target.
pub fn eigh(m: &SymMatrix) -> Result<EigenDecomposition> {
    let n = m.dim();
    let target = OFF_DIAG_FACTOR * m.norm_fro();

    let mut a: Vec<f64> = (0..n * n).map(|k| m.get(k / n, k % n)).collect();
    let mut q = GeneralMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let off = off_diag_fro(&a, n);
        if off <= target {
            break;
        }
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NonConvergence {
                sweeps,
                off_diag: off,
                target,
            });
        }
        for p in 0..n - 1 {
            for r in p + 1..n {
                rotate(&mut a, &mut q, n, p, r);
            }
        }
        sweeps += 1;
    }

    // Sort ascending; stable so equal eigenvalues keep sweep order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));

    let lambda: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let mut qs = GeneralMatrix::new(n, vec![0.0; n * n]);
    for (col, &k) in order.iter().enumerate() {
        // Sign convention: first largest-magnitude entry positive.
        let mut max_abs = 0.0;
        let mut sign = 1.0;
        for i in 0..n {
            let v = q.get(i, k);
            if v.abs() > max_abs {
                max_abs = v.abs();
                sign = if v < 0.0 { -1.0 } else { 1.0 };
            }
        }
        for i in 0..n {
            qs.set(i, col, sign * q.get(i, k));
        }
    }

    Ok(EigenDecomposition { q: qs, lambda })
}

fn off_diag_fro(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * acc).sqrt()
}

/// One Jacobi rotation annihilating the (p, r) entry.
fn rotate(a: &mut [f64], q: &mut GeneralMatrix, n: usize, p: usize, r: usize) {
    let apr = a[p * n + r];
    if apr == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let arr = a[r * n + r];
    let theta = 0.5 * (arr - app) / apr;
    // Smaller-root tangent; switch to the asymptote when theta² would overflow.
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let s = if theta < 0.0 { -1.0 } else { 1.0 };
        s / (theta.abs() + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apr;
    a[r * n + r] = arr + t * apr;
    a[p * n + r] = 0.0;
    a[r * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == r {
            continue;
        }
        let akp = a[k * n + p];
        let akr = a[k * n + r];
        let new_p = c * akp - s * akr;
        let new_r = s * akp + c * akr;
        a[k * n + p] = new_p;
        a[p * n + k] = new_p;
        a[k * n + r] = new_r;
        a[r * n + k] = new_r;
    }
    for k in 0..n {
        let qkp = q.get(k, p);
        let qkr = q.get(k, r);
        q.set(k, p, c * qkp - s * qkr);
        q.set(k, r, s * qkp + c * qkr);
    }
}
