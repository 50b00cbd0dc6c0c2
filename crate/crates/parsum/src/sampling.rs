//! Seeded random instances: orthogonal matrices, positive definite
//! matrices with prescribed eigenvalue spread, and plain entry grids.
//!
//! Reproducibility contract: every sampled instance is derived from a
//! 64-bit sub-seed obtained by mixing (seed, stream, index) through
//! splitmix64. Workers can therefore own disjoint index ranges and still
//! produce byte-identical streams regardless of evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{GeneralMatrix, SymMatrix, Vector};

/// splitmix64 finalizer; a cheap 64-bit bijective mixer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the sub-seed for sample `index` of stream `stream` under the
/// master `seed`. Order-independent by construction.
pub fn derive_subseed(seed: u64, stream: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(stream)).wrapping_add(index))
}

/// Deterministic generator for one sample.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal via Box–Muller.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Haar-ish random orthogonal matrix: modified Gram-Schmidt on a
/// standard-normal matrix, re-drawing any column that degenerates.
pub fn sample_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> GeneralMatrix {
    let mut q = GeneralMatrix::new(n, vec![0.0; n * n]);
    for col in 0..n {
        loop {
            let mut v: Vec<f64> = (0..n).map(|_| standard_normal(rng)).collect();
            for prev in 0..col {
                let dot: f64 = v
                    .iter()
                    .enumerate()
                    .map(|(i, vi)| vi * q.get(i, prev))
                    .sum();
                for (i, vi) in v.iter_mut().enumerate() {
                    *vi -= dot * q.get(i, prev);
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-8 {
                for (i, vi) in v.iter().enumerate() {
                    q.set(i, col, vi / norm);
                }
                break;
            }
        }
    }
    q
}

/// Random positive definite matrix `Q diag(λ) Qᵀ` with eigenvalues
/// log-uniform in `[eig_lo, eig_hi]`.
pub fn sample_pd(rng: &mut ChaCha8Rng, n: usize, eig_lo: f64, eig_hi: f64) -> SymMatrix {
    assert!(eig_lo > 0.0 && eig_lo < eig_hi, "need 0 < eig_lo < eig_hi");
    let q = sample_orthogonal(rng, n);
    let (ln_lo, ln_hi) = (eig_lo.ln(), eig_hi.ln());
    let lambda: Vec<f64> = (0..n)
        .map(|_| (ln_lo + (ln_hi - ln_lo) * rng.random::<f64>()).exp())
        .collect();
    let mut out = vec![0.0; n * n];
    for (k, &lam) in lambda.iter().enumerate() {
        for i in 0..n {
            let qik = q.get(i, k);
            for j in 0..n {
                out[i * n + j] += lam * qik * q.get(j, k);
            }
        }
    }
    SymMatrix::new(n, out)
}

/// Rank-`rank` orthogonal projection assembled from random orthonormal
/// columns.
pub fn sample_projection(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> SymMatrix {
    assert!(rank <= n, "projection rank cannot exceed dimension");
    let q = sample_orthogonal(rng, n);
    let mut out = vec![0.0; n * n];
    for k in 0..rank {
        for i in 0..n {
            let qik = q.get(i, k);
            for j in 0..n {
                out[i * n + j] += qik * q.get(j, k);
            }
        }
    }
    SymMatrix::new(n, out)
}

/// Matrix with independent entries uniform in `[lo, hi]`.
pub fn sample_general(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> GeneralMatrix {
    let data = (0..n * n)
        .map(|_| lo + (hi - lo) * rng.random::<f64>())
        .collect();
    GeneralMatrix::new(n, data)
}

/// Standard-normal vector.
pub fn sample_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector::new((0..n).map(|_| standard_normal(rng)).collect())
}
