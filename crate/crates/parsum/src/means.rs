//! The parallel sum `A:B = (A⁻¹ + B⁻¹)⁻¹`, the harmonic and power operator
//! means built on it, and the variational principle
//! `((A:B)x | x) = inf_η { (Aη | η) + (B(x−η) | x−η) }`
//! with both its closed-form minimizer and an independent descent oracle.

use crate::error::{Error, Result};
use crate::linalg::{matrix_power, require_pd, solve_spd, solve_spd_vec};
use crate::matrix::{SymMatrix, Vector};

/// Iteration cap for the descent oracle.
pub const ORACLE_MAX_STEPS: usize = 10_000;

/// The oracle stops once the gradient max-norm falls below
/// `ORACLE_GRAD_REL_TOL * (1 + ‖x‖_max)`.
pub const ORACLE_GRAD_REL_TOL: f64 = 1e-10;

/// Mean selector used by the CLI `compute` command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    ParallelSum,
    Harmonic2,
    Power(f64),
}

impl MeanKind {
    pub fn compute(&self, a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
        match *self {
            MeanKind::ParallelSum => parallel_sum(a, b),
            MeanKind::Harmonic2 => harmonic_mean(a, b),
            MeanKind::Power(p) => power_mean(a, b, p),
        }
    }
}

/// Parallel sum `A:B`, computed in the stable product form `A(A+B)⁻¹B`
/// rather than through two explicit inversions.
pub fn parallel_sum(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    require_pd(a, "A")?;
    require_pd(b, "B")?;
    let sum = a + b;
    let t = solve_spd(&sum, &b.as_general())?; // (A+B)⁻¹B
    Ok(a.as_general().matmul(&t).symmetrize())
}

/// Two-operator harmonic mean `H₂(A,B) = 2(A:B)`.
pub fn harmonic_mean(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    Ok(parallel_sum(a, b)?.scale(2.0))
}

/// Parallel sum for operands already certified positive definite upstream,
/// typically exact spectral powers of checked inputs. Such powers can be
/// far too ill-conditioned for the relative PD gate even though their
/// spectra are positive by construction, so this path only rejects an
/// actually non-positive sum.
pub(crate) fn parallel_sum_trusted(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    assert_eq!(a.dim(), b.dim(), "matrix dims must match");
    let sum = a + b;
    let eig = crate::eigen::eigh(&sum)?;
    if eig.min_eigenvalue() <= 0.0 {
        return Err(Error::Domain(format!(
            "sum of operands is not positive definite (min eigenvalue {:e})",
            eig.min_eigenvalue()
        )));
    }
    let t = eig.solve(&b.as_general()); // (A+B)⁻¹B
    Ok(a.as_general().matmul(&t).symmetrize())
}

pub(crate) fn harmonic_mean_trusted(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    Ok(parallel_sum_trusted(a, b)?.scale(2.0))
}

/// Power mean `M_p(A,B) = ((Aᵖ + Bᵖ)/2)^{1/p}` for `p ≠ 0`.
pub fn power_mean(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<SymMatrix> {
    if p == 0.0 {
        return Err(Error::Param("power mean is undefined at p = 0".into()));
    }
    require_pd(a, "A")?;
    require_pd(b, "B")?;
    let ap = matrix_power(a, p)?;
    let bp = matrix_power(b, p)?;
    matrix_power(&(&ap + &bp).scale(0.5), 1.0 / p)
}

/// Closed-form minimizer `ξ = (A+B)⁻¹Bx` of the variational functional.
pub fn variational_minimizer(a: &SymMatrix, b: &SymMatrix, x: &Vector) -> Result<Vector> {
    let sum = a + b;
    solve_spd_vec(&sum, &b.apply_vec(x))
}

/// The functional value `f(η) = (Aη | η) + (B(x−η) | x−η)`.
pub fn variational_value(a: &SymMatrix, b: &SymMatrix, x: &Vector, eta: &Vector) -> f64 {
    a.quad_form(eta) + b.quad_form(&(x - eta))
}

/// Minimizes the variational functional by steepest descent with exact
/// line search, using [`ORACLE_MAX_STEPS`] as the iteration cap.
///
/// This exists purely as an independent check of the closed form: it never
/// touches the parallel sum, only the gradient `2(Aη − B(x−η))` and the
/// Hessian `2(A+B)` of the strictly convex quadratic.
pub fn variational_infimum_oracle(a: &SymMatrix, b: &SymMatrix, x: &Vector) -> Result<f64> {
    variational_infimum_oracle_with_cap(a, b, x, ORACLE_MAX_STEPS)
}

/// [`variational_infimum_oracle`] with a caller-chosen iteration cap.
pub fn variational_infimum_oracle_with_cap(
    a: &SymMatrix,
    b: &SymMatrix,
    x: &Vector,
    max_steps: usize,
) -> Result<f64> {
    assert_eq!(a.dim(), b.dim(), "matrix dims must match");
    assert_eq!(a.dim(), x.dim(), "vector length must match matrix dim");
    let sum = a + b;
    let bx = b.apply_vec(x);
    let tol = ORACLE_GRAD_REL_TOL * (1.0 + x.norm_max());

    let mut eta = Vector::zeros(x.dim());
    for _ in 0..=max_steps {
        // ∇f(η) = 2((A+B)η − Bx)
        let g = (&sum.apply_vec(&eta) - &bx).scale(2.0);
        if g.norm_max() <= tol {
            return Ok(variational_value(a, b, x, &eta));
        }
        // Exact line search along −g: t* = gᵀg / (2 gᵀ(A+B)g).
        let denom = 2.0 * sum.quad_form(&g);
        if !denom.is_finite() || denom <= 0.0 {
            break;
        }
        let t = g.dot(&g) / denom;
        eta = &eta - &g.scale(t);
    }
    Err(Error::NonConvergence {
        sweeps: max_steps,
        off_diag: f64::NAN,
        target: tol,
    })
}
