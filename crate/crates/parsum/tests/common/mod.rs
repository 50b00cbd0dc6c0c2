//! Shared helpers for the integration tests: relative-tolerance matrix
//! comparison and an eigendecomposition-free inverse oracle.

#![allow(dead_code)]

use parsum::{GeneralMatrix, SymMatrix};

/// `‖x − y‖_max ≤ tol · (1 + max(‖x‖_max, ‖y‖_max))`, the crate-wide
/// relative comparison policy.
pub fn close_sym(x: &SymMatrix, y: &SymMatrix, tol: f64) -> bool {
    (x - y).norm_max() <= tol * (1.0 + x.norm_max().max(y.norm_max()))
}

pub fn assert_close_sym(x: &SymMatrix, y: &SymMatrix, tol: f64, what: &str) {
    assert!(
        close_sym(x, y, tol),
        "{what}: ‖diff‖ = {:e}, tol scale = {:e}",
        (x - y).norm_max(),
        tol * (1.0 + x.norm_max().max(y.norm_max()))
    );
}

/// Determinant by Laplace cofactor expansion. Exponential cost; intended
/// as an independent oracle for n ≤ 4.
pub fn det_cofactor(m: &GeneralMatrix) -> f64 {
    let n = m.dim();
    assert!(n <= 5, "cofactor oracle is for small matrices only");
    if n == 1 {
        return m.get(0, 0);
    }
    let mut det = 0.0;
    for j in 0..n {
        let minor = strike(m, 0, j);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m.get(0, j) * det_cofactor(&minor);
    }
    det
}

fn strike(m: &GeneralMatrix, row: usize, col: usize) -> GeneralMatrix {
    let n = m.dim();
    let mut data = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == row {
            continue;
        }
        for j in 0..n {
            if j == col {
                continue;
            }
            data.push(m.get(i, j));
        }
    }
    GeneralMatrix::new(n - 1, data)
}

/// Matrix inverse through the adjugate: `M⁻¹ = adj(M)ᵀ-cofactors / det`.
/// Never touches the eigendecomposition path it is used to check.
pub fn inverse_cofactor(m: &GeneralMatrix) -> GeneralMatrix {
    let n = m.dim();
    let det = det_cofactor(m);
    assert!(det != 0.0, "cofactor oracle needs a non-singular matrix");
    if n == 1 {
        return GeneralMatrix::new(1, vec![1.0 / det]);
    }
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            // adjugate: cofactor of (j, i)
            data[i * n + j] = sign * det_cofactor(&strike(m, j, i)) / det;
        }
    }
    GeneralMatrix::new(n, data)
}

/// The golden 2×2 pair used across the integration tests.
pub fn golden_pair() -> (SymMatrix, SymMatrix) {
    parsum::search::example_pair()
}
