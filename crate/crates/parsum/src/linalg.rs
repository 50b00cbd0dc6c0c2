//! Matrix functions, Loewner-order classification, and SPD solves, all
//! routed through the Jacobi eigendecomposition.

use serde::{Deserialize, Serialize};

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::matrix::{GeneralMatrix, SymMatrix, Vector};

/// Relative tolerance used to certify positive definiteness before an SPD
/// solve or a mean computation.
pub const PD_INPUT_REL_TOL: f64 = 1e-12;

/// For fractional or negative powers, eigenvalues below
/// `EIGENVALUE_FLOOR_FACTOR * λ_max` are rejected rather than clamped:
/// silently flooring would corrupt genuinely tiny eigenvalues, which this
/// domain cares about.
pub const EIGENVALUE_FLOOR_FACTOR: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    PositiveDefinite,
    PositiveSemidefiniteWithinTol,
    Indefinite,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Classification::PositiveDefinite => "positive-definite",
            Classification::PositiveSemidefiniteWithinTol => "psd-within-tol",
            Classification::Indefinite => "indefinite",
        };
        f.write_str(s)
    }
}

/// Signed minimum-eigenvalue report with the tolerance that was applied.
///
/// `Indefinite` iff `min_eig < -threshold`; `PositiveDefinite` iff
/// `min_eig > +threshold`; the band in between is PSD within tolerance.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PsdVerdict {
    pub min_eig: f64,
    pub threshold: f64,
    pub classification: Classification,
}

impl PsdVerdict {
    pub fn classify(min_eig: f64, threshold: f64) -> Self {
        let classification = if min_eig < -threshold {
            Classification::Indefinite
        } else if min_eig > threshold {
            Classification::PositiveDefinite
        } else {
            Classification::PositiveSemidefiniteWithinTol
        };
        Self {
            min_eig,
            threshold,
            classification,
        }
    }

    pub fn is_indefinite(&self) -> bool {
        self.classification == Classification::Indefinite
    }

    pub fn is_positive_definite(&self) -> bool {
        self.classification == Classification::PositiveDefinite
    }
}

/// Classifies `m` in the Loewner order with threshold
/// `rel_tol * (1 + ‖m‖_max)`.
pub fn psd_check(m: &SymMatrix, rel_tol: f64) -> Result<PsdVerdict> {
    assert!(rel_tol >= 0.0, "rel_tol must be non-negative");
    let eig = eigh(m)?;
    let threshold = rel_tol * (1.0 + m.norm_max());
    Ok(PsdVerdict::classify(eig.min_eigenvalue(), threshold))
}

/// Certifies `m` positive definite at [`PD_INPUT_REL_TOL`], naming the
/// offending operand in the error.
pub fn require_pd(m: &SymMatrix, what: &str) -> Result<()> {
    let verdict = psd_check(m, PD_INPUT_REL_TOL)?;
    if verdict.is_positive_definite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} is not positive definite (min eigenvalue {:e})",
            verdict.min_eig
        )))
    }
}

/// Applies a scalar function through the spectrum: `Q diag(f(λ)) Qᵀ`.
///
/// Fails with a domain error if `f` produces a non-finite value on any
/// eigenvalue.
pub fn matrix_function<F: Fn(f64) -> f64>(m: &SymMatrix, f: F) -> Result<SymMatrix> {
    let eig = eigh(m)?;
    for &lam in eig.eigenvalues() {
        let v = f(lam);
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "scalar function is undefined on eigenvalue {lam:e}"
            )));
        }
    }
    Ok(eig.apply(f))
}

/// Matrix power `m^p` through the spectrum.
///
/// Non-negative integer powers are defined for every symmetric matrix
/// (`t⁰ = 1` convention included). Fractional or negative powers require
/// the spectrum to sit above the relative eigenvalue floor; anything below
/// is a domain error, never silently clamped.
pub fn matrix_power(m: &SymMatrix, p: f64) -> Result<SymMatrix> {
    let eig = eigh(m)?;
    let nonneg_integer = p >= 0.0 && p.fract() == 0.0;
    if !nonneg_integer {
        let lam_max = eig.max_eigenvalue();
        let floor = EIGENVALUE_FLOOR_FACTOR * lam_max;
        if lam_max <= 0.0 || eig.min_eigenvalue() < floor {
            return Err(Error::Domain(format!(
                "matrix power {p} needs eigenvalues above {floor:e}, found {:e}",
                eig.min_eigenvalue()
            )));
        }
    }
    Ok(eig.apply(|t| t.powf(p)))
}

/// Congruence transform `Tᵀ M T`, re-symmetrized.
pub fn congruence(m: &SymMatrix, t: &GeneralMatrix) -> SymMatrix {
    assert_eq!(m.dim(), t.dim(), "matrix dims must match");
    t.transpose().matmul(&m.as_general()).matmul(t).symmetrize()
}

/// Solves `M X = rhs` for positive definite `M` through its
/// eigendecomposition.
pub fn solve_spd(m: &SymMatrix, rhs: &GeneralMatrix) -> Result<GeneralMatrix> {
    assert_eq!(m.dim(), rhs.dim(), "matrix dims must match");
    Ok(pd_decomposition(m)?.solve(rhs))
}

/// Vector variant of [`solve_spd`].
pub fn solve_spd_vec(m: &SymMatrix, rhs: &Vector) -> Result<Vector> {
    assert_eq!(m.dim(), rhs.dim(), "dims must match");
    let eig = pd_decomposition(m)?;
    let qt_rhs = eig.q().transpose().apply_vec(rhs);
    let scaled = Vector::new(
        qt_rhs
            .as_slice()
            .iter()
            .zip(eig.eigenvalues())
            .map(|(v, lam)| v / lam)
            .collect(),
    );
    Ok(eig.q().apply_vec(&scaled))
}

fn pd_decomposition(m: &SymMatrix) -> Result<crate::eigen::EigenDecomposition> {
    let eig = eigh(m)?;
    let threshold = PD_INPUT_REL_TOL * (1.0 + m.norm_max());
    if eig.min_eigenvalue() <= threshold {
        return Err(Error::Domain(format!(
            "matrix is not positive definite (min eigenvalue {:e})",
            eig.min_eigenvalue()
        )));
    }
    Ok(eig)
}
