//! Checkable operator-inequality constructions.
//!
//! Each operation instantiates one inequality family with the parallel sum
//! on the small side, returning both comparison matrices and a verdict for
//! the gap `rhs − lhs`. A verdict that classifies as indefinite means the
//! inequality failed on that instance beyond numerical tolerance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{matrix_power, psd_check, require_pd, solve_spd, PsdVerdict};
use crate::matrix::{GeneralMatrix, SymMatrix};
use crate::means::{harmonic_mean, parallel_sum};

/// Relative tolerance for gap verdicts.
pub const GAP_REL_TOL: f64 = 1e-9;

/// Acceptance threshold for `‖P² − P‖_max` when validating a projection.
pub const PROJECTION_TOL: f64 = 1e-10;

/// Exponent grid covering every regime the power families distinguish.
pub const DEFAULT_P_GRID: [f64; 8] = [-1.0, -0.5, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0];

/// Scalar grid for the λ family.
pub const DEFAULT_LAMBDA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Parameter record attached to a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportParams {
    None,
    Lambda(f64),
    Power(f64),
    ProjectionRank(usize),
}

/// One inequality instance: `lhs ≤ rhs` claimed, `gap_verdict` computed
/// from `rhs − lhs` at [`GAP_REL_TOL`].
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub name: &'static str,
    pub lhs: SymMatrix,
    pub rhs: SymMatrix,
    pub gap_verdict: PsdVerdict,
    pub parameters: ReportParams,
}

impl InequalityReport {
    fn new(
        name: &'static str,
        lhs: SymMatrix,
        rhs: SymMatrix,
        parameters: ReportParams,
    ) -> Result<Self> {
        assert_eq!(lhs.dim(), rhs.dim(), "comparison dims must match");
        let gap_verdict = psd_check(&(&rhs - &lhs), GAP_REL_TOL)?;
        Ok(Self {
            name,
            lhs,
            rhs,
            gap_verdict,
            parameters,
        })
    }

    pub fn holds(&self) -> bool {
        !self.gap_verdict.is_indefinite()
    }
}

/// Scalar family `A:B ≤ λ²A + (1−λ)²B` for `λ ∈ [0, 1]`.
///
/// λ = 0 and λ = 1 give the upper bounds `B` and `A`; λ = 1/2 gives
/// `(A+B)/4`.
pub fn ineq_scalar_lambda(a: &SymMatrix, b: &SymMatrix, lambda: f64) -> Result<InequalityReport> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Param(format!("λ must be in [0, 1], got {lambda}")));
    }
    let lhs = parallel_sum(a, b)?;
    let rhs = &a.scale(lambda * lambda) + &b.scale((1.0 - lambda) * (1.0 - lambda));
    InequalityReport::new("scalar-lambda", lhs, rhs, ReportParams::Lambda(lambda))
}

/// Projection family `A:B ≤ PAP + (I−P)B(I−P)` for an orthogonal
/// projection `P`.
pub fn ineq_projection(
    a: &SymMatrix,
    b: &SymMatrix,
    p_proj: &SymMatrix,
) -> Result<InequalityReport> {
    let p2 = p_proj
        .as_general()
        .matmul(&p_proj.as_general())
        .symmetrize();
    let defect = (&p2 - p_proj).norm_max();
    if defect > PROJECTION_TOL {
        return Err(Error::Param(format!(
            "P is not an orthogonal projection: ‖P² − P‖ = {defect:e}"
        )));
    }
    let rank = p_proj.trace().round();
    let lhs = parallel_sum(a, b)?;
    let p = p_proj.as_general();
    let ip = &GeneralMatrix::identity(p.dim()) - &p;
    let rhs = &p.matmul(&a.as_general()).matmul(&p).symmetrize()
        + &ip.matmul(&b.as_general()).matmul(&ip).symmetrize();
    InequalityReport::new(
        "projection",
        lhs,
        rhs,
        ReportParams::ProjectionRank(rank.max(0.0) as usize),
    )
}

/// Cubic family `A:B ≤ (A+B)⁻¹(BAB + ABA)(A+B)⁻¹`.
pub fn ineq_bab_aba(a: &SymMatrix, b: &SymMatrix) -> Result<InequalityReport> {
    require_pd(a, "A")?;
    require_pd(b, "B")?;
    let lhs = parallel_sum(a, b)?;
    let ag = a.as_general();
    let bg = b.as_general();
    let middle = (&bg.matmul(&ag).matmul(&bg) + &ag.matmul(&bg).matmul(&ag)).symmetrize();
    let sum = a + b;
    // (A+B)⁻¹ · middle · (A+B)⁻¹, associating through two SPD solves.
    let right = solve_spd(&sum, &middle.as_general())?; // (A+B)⁻¹ middle
    let rhs = solve_spd(&sum, &right.transpose())?.symmetrize(); // ((A+B)⁻¹ (middle (A+B)⁻¹)ᵀ)
    InequalityReport::new("bab-aba", lhs, rhs, ReportParams::None)
}

/// Power family `A:B ≤ (Aᵖ:Bᵖ)(A^{2p−1}:B^{2p−1})⁻¹(Aᵖ:Bᵖ)`; equality at
/// `p = 1`.
///
/// The right-hand side equals the generating functional at
/// `C = (Aᵖ+Bᵖ)⁻¹Bᵖ`, and for any `C` the difference from the parallel
/// sum has the exact Gram form `F(C) − A:B = ZᵀZ` with
/// `Z = (A+B)^{1/2}C − (A+B)^{−1/2}B`. Assembling the gap that way keeps
/// it positive semidefinite by construction; the literal sandwich
/// ([`power_family_sandwich`]) loses the gap to cancellation once
/// intermediate condition numbers approach 1/ε.
pub fn ineq_power_family(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<InequalityReport> {
    require_pd(a, "A")?;
    require_pd(b, "B")?;
    let lhs = parallel_sum(a, b)?;
    let c = power_family_c(a, b, p)?;

    let sum = a + b;
    let sum_eig = crate::eigen::eigh(&sum)?;
    let r = sum_eig.apply(|t| t.sqrt()).as_general();
    let r_inv = sum_eig.apply(|t| 1.0 / t.sqrt()).as_general();
    let z = &r.matmul(&c) - &r_inv.matmul(&b.as_general());
    let gram = z.transpose().matmul(&z).symmetrize();

    let rhs = &lhs + &gram;
    InequalityReport::new("power-family", lhs, rhs, ReportParams::Power(p))
}

/// The equality-attaining operator `C = (Aᵖ+Bᵖ)⁻¹Bᵖ` of the power family.
pub fn power_family_c(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<GeneralMatrix> {
    let ap = matrix_power(a, p)?;
    let bp = matrix_power(b, p)?;
    let sum_p = &ap + &bp;
    let eig = crate::eigen::eigh(&sum_p)?;
    if eig.min_eigenvalue() <= 0.0 {
        return Err(Error::Domain(format!(
            "Aᵖ + Bᵖ is not positive definite (min eigenvalue {:e})",
            eig.min_eigenvalue()
        )));
    }
    Ok(eig.solve(&bp.as_general()))
}

/// The power-family right-hand side in its literal sandwich form
/// `(Aᵖ:Bᵖ)(A^{2p−1}:B^{2p−1})⁻¹(Aᵖ:Bᵖ)`, with the middle inverse
/// expanded through `(X:Y)⁻¹ = X⁻¹ + Y⁻¹` into `A^{1−2p} + B^{1−2p}`.
///
/// Kept as an independent oracle for [`ineq_power_family`]; at wide
/// eigenvalue spreads and large `|p|` this form carries the full
/// cancellation of its intermediates.
pub fn power_family_sandwich(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<SymMatrix> {
    let ps_p = crate::means::parallel_sum_trusted(&matrix_power(a, p)?, &matrix_power(b, p)?)?;
    let middle = &matrix_power(a, 1.0 - 2.0 * p)? + &matrix_power(b, 1.0 - 2.0 * p)?;
    // (Aᵖ:Bᵖ) is symmetric, so the sandwich is the congruence of the
    // middle by it.
    Ok(crate::linalg::congruence(&middle, &ps_p.as_general()))
}

/// Harmonic-mean power chain: `H₂(A,B)ᵖ ≤ H₂(Aᵖ,Bᵖ)` for `p ∈ [0, 1]`,
/// reversed on `[−1, 0)` and `(1, 2]`.
pub fn ineq_h2_power_chain(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<InequalityReport> {
    if !(-1.0..=2.0).contains(&p) {
        return Err(Error::Param(format!("p must be in [-1, 2], got {p}")));
    }
    let h2 = harmonic_mean(a, b)?;
    let h2_pow = matrix_power(&h2, p)?;
    let h2_of_powers =
        crate::means::harmonic_mean_trusted(&matrix_power(a, p)?, &matrix_power(b, p)?)?;
    let (lhs, rhs) = if (0.0..=1.0).contains(&p) {
        (h2_pow, h2_of_powers)
    } else {
        (h2_of_powers, h2_pow)
    };
    InequalityReport::new("h2-chain", lhs, rhs, ReportParams::Power(p))
}

/// Power mean vs parallel sum: `M_p(A,B) ≥ 2(A:B)` for `p ≥ 1`.
pub fn ineq_power_mean_vs_parallel(
    a: &SymMatrix,
    b: &SymMatrix,
    p: f64,
) -> Result<InequalityReport> {
    if p < 1.0 {
        return Err(Error::Param(format!("p must be ≥ 1, got {p}")));
    }
    let lhs = parallel_sum(a, b)?.scale(2.0);
    let rhs = crate::means::power_mean(a, b, p)?;
    InequalityReport::new("power-mean", lhs, rhs, ReportParams::Power(p))
}
