//! The generating functional `F(C) = CᵀAC + (I−C)ᵀB(I−C)` and the
//! closed-form solver for `F(C) = H`.
//!
//! `F` majorizes the parallel sum for every `C`, and its range is exactly
//! `{H : H ≥ A:B}`. The solver certifies feasibility by classifying
//! `H − A:B`, then works in symmetrized coordinates: with
//! `R = (A+B)^{1/2}`, set `Y = R⁻¹BR⁻¹` and `S = R⁻¹(H − A:B)R⁻¹`; the
//! solution is `C = R⁻¹(Y + S^{1/2})R`. Every square root is taken on a
//! symmetric PSD matrix — the similarity image `(A+B)⁻¹(H−A:B)` itself is
//! generally not symmetric and is never rooted directly.

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::linalg::{congruence, psd_check, require_pd, PsdVerdict};
use crate::matrix::{GeneralMatrix, SymMatrix};
use crate::means::parallel_sum;

/// Relative tolerance for the feasibility verdict on `H − A:B`.
pub const FEASIBILITY_REL_TOL: f64 = 1e-9;

/// Solution of `F(C) = H` together with its certificates.
#[derive(Debug, Clone)]
pub struct SolveResult {
    /// The solution operator; in general not symmetric.
    pub c: GeneralMatrix,
    /// `‖F(C) − H‖_max`.
    pub residual: f64,
    /// Verdict for `H − A:B` at [`FEASIBILITY_REL_TOL`].
    pub feasibility: PsdVerdict,
}

/// Evaluates `F(C) = CᵀAC + (I−C)ᵀB(I−C)`, re-symmetrized.
pub fn generator_f(a: &SymMatrix, b: &SymMatrix, c: &GeneralMatrix) -> SymMatrix {
    assert_eq!(a.dim(), b.dim(), "matrix dims must match");
    assert_eq!(a.dim(), c.dim(), "matrix dims must match");
    let ct = c.transpose();
    let first = ct.matmul(&a.as_general()).matmul(c);
    let ic = &GeneralMatrix::identity(c.dim()) - c;
    let second = ic.transpose().matmul(&b.as_general()).matmul(&ic);
    (&first + &second).symmetrize()
}

/// Solves `F(C) = H` in closed form.
///
/// Fails with [`Error::Infeasible`] exactly when `H − A:B` classifies as
/// indefinite. Marginally negative eigenvalues of the transformed gap are
/// clamped to zero before the square root, so `H = A:B` solves cleanly.
pub fn solve_equation(a: &SymMatrix, b: &SymMatrix, h: &SymMatrix) -> Result<SolveResult> {
    assert_eq!(a.dim(), b.dim(), "matrix dims must match");
    assert_eq!(a.dim(), h.dim(), "matrix dims must match");
    require_pd(a, "A")?;
    require_pd(b, "B")?;

    let sum = a + b;
    let sum_eig = eigh(&sum)?;
    let r = sum_eig.apply(|t| t.sqrt()).as_general();
    let r_inv = sum_eig.apply(|t| 1.0 / t.sqrt()).as_general();

    let ab = parallel_sum(a, b)?;
    let gap = h - &ab;
    let feasibility = psd_check(&gap, FEASIBILITY_REL_TOL)?;
    if feasibility.is_indefinite() {
        return Err(Error::Infeasible {
            min_eig: feasibility.min_eig,
            threshold: feasibility.threshold,
        });
    }

    // S = R⁻¹ (H − A:B) R⁻¹ is PSD up to noise once feasibility holds.
    let s = congruence(&gap, &r_inv);
    let s_sqrt = eigh(&s)?.apply(|t| if t > 0.0 { t.sqrt() } else { 0.0 });

    let y = congruence(b, &r_inv);
    let x = &y + &s_sqrt;
    let c = r_inv.matmul(&x.as_general()).matmul(&r);

    let residual = (&generator_f(a, b, &c) - h).norm_max();
    Ok(SolveResult {
        c,
        residual,
        feasibility,
    })
}
