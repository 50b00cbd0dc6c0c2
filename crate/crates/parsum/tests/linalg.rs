//! Eigendecomposition and matrix-function contracts, checked against
//! independent oracles and as properties over random instances.

mod common;

use common::{assert_close_sym, golden_pair, inverse_cofactor};
use parsum::linalg::matrix_power;
use parsum::sampling::{rng_from_seed, sample_orthogonal, sample_pd};
use parsum::{congruence, eigh, matrix_function, psd_check, solve_spd, GeneralMatrix, SymMatrix};
use proptest::prelude::*;

#[test]
fn random_5x5_reconstructs() {
    let mut rng = rng_from_seed(20_000);
    let m = sample_pd(&mut rng, 5, 1e-3, 1e3);
    let eig = eigh(&m).unwrap();
    assert_close_sym(&eig.reconstruct(), &m, 1e-10, "Q Λ Qᵀ reconstruction");
}

#[test]
fn golden_pair_sqrt_round_trips() {
    let (_, b) = golden_pair();
    let root = matrix_power(&b, 0.5).unwrap();
    let squared = matrix_function(&root, |t| t * t).unwrap();
    assert_close_sym(&squared, &b, 1e-10, "sqrt of B squared back");
}

#[test]
fn golden_pair_gap_classifies_indefinite() {
    // ((√A+√B)/2)² − A:B carries a genuinely negative eigenvalue, five
    // decades above the classification threshold.
    let (a, b) = golden_pair();
    let gap = &parsum::power_mean(&a, &b, 0.5).unwrap() - &parsum::parallel_sum(&a, &b).unwrap();
    let verdict = psd_check(&gap, 1e-9).unwrap();
    assert!(verdict.is_indefinite(), "verdict: {verdict:?}");
    let rel = (verdict.min_eig - (-1.57101e-6)).abs() / 1.57101e-6;
    assert!(rel <= 1e-2, "min_eig {:e}", verdict.min_eig);
}

#[test]
fn golden_pair_congruence_round_trips() {
    let (a, b) = golden_pair();
    let sum = &a + &b;
    let fwd = matrix_power(&sum, -0.5).unwrap().as_general();
    let back = matrix_power(&sum, 0.5).unwrap().as_general();
    let once = congruence(&b, &fwd);
    let round = congruence(&once, &back);
    assert_close_sym(&round, &b, 1e-9, "congruence by (A+B)^{∓1/2}");
}

#[test]
fn solve_spd_matches_cofactor_inverse() {
    // Brute-force adjugate inverse at n ≤ 4, no spectral code involved.
    for (seed, n) in [(1u64, 2usize), (2, 3), (3, 4)] {
        let mut rng = rng_from_seed(seed);
        let m = sample_pd(&mut rng, n, 1e-2, 1e2);
        let inv_oracle = inverse_cofactor(&m.as_general());
        let inv_spectral = solve_spd(&m, &GeneralMatrix::identity(n)).unwrap();
        let gap = (&inv_oracle - &inv_spectral).norm_max();
        let scale = 1.0 + inv_oracle.norm_max();
        assert!(gap <= 1e-9 * scale, "n={n}: gap {gap:e} vs scale {scale:e}");
    }
}

#[test]
fn solve_spd_residual_within_condition_guard() {
    for seed in 0..20u64 {
        let mut rng = rng_from_seed(1000 + seed);
        let n = [2, 3, 4, 6][seed as usize % 4];
        let m = sample_pd(&mut rng, n, 1e-4, 1e2);
        let rhs = sample_pd(&mut rng, n, 1e-1, 1e1).as_general();
        let out = solve_spd(&m, &rhs).unwrap();
        let residual = (&m.as_general().matmul(&out) - &rhs).norm_max();
        let eig = eigh(&m).unwrap();
        let cond_guard = (eig.max_eigenvalue() / eig.min_eigenvalue()).max(1.0);
        assert!(
            residual <= 1e-9 * (1.0 + rhs.norm_max()) * cond_guard,
            "residual {residual:e} vs κ-guarded bound"
        );
    }
}

#[test]
fn monotone_spectra_under_matrix_function() {
    let mut rng = rng_from_seed(77);
    let m = sample_pd(&mut rng, 4, 1e-2, 1e2);
    let f = |t: f64| t * t + 1.0;
    let fm = matrix_function(&m, f).unwrap();
    let expected: Vec<f64> = {
        let mut v: Vec<f64> = eigh(&m)
            .unwrap()
            .eigenvalues()
            .iter()
            .map(|&t| f(t))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let got = eigh(&fm).unwrap().eigenvalues().to_vec();
    let scale = 1.0 + expected.last().unwrap().abs();
    for (g, e) in got.iter().zip(&expected) {
        assert!((g - e).abs() <= 1e-12 * scale, "eigenvalue {g} vs f(λ) {e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reconstruction_property(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = rng_from_seed(seed);
        let q = sample_orthogonal(&mut rng, n);
        // Arbitrary symmetric matrix, eigenvalues of both signs.
        let m = {
            let g = parsum::sampling::sample_general(&mut rng, n, -10.0, 10.0);
            g.symmetrize()
        };
        let eig = eigh(&m).unwrap();
        prop_assert!(close(&eig.reconstruct(), &m, 1e-10));

        // Orthonormality of the eigenvector basis.
        let qtq = eig.q().transpose().matmul(eig.q());
        prop_assert!((&qtq - &GeneralMatrix::identity(n)).norm_max() <= 1e-12);

        // psd_check is invariant under orthogonal conjugation.
        let rotated = congruence(&m, &q);
        let v1 = psd_check(&m, 1e-10).unwrap();
        let v2 = psd_check(&rotated, 1e-10).unwrap();
        prop_assert!((v1.min_eig - v2.min_eig).abs() <= 1e-10 * (1.0 + m.norm_max()));
    }

    #[test]
    fn sqrt_square_composition(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = rng_from_seed(seed);
        let m = sample_pd(&mut rng, n, 1e-3, 1e3);
        let root = matrix_power(&m, 0.5).unwrap();
        let back = matrix_function(&root, |t| t * t).unwrap();
        prop_assert!(close(&back, &m, 1e-9));
    }
}

fn close(x: &SymMatrix, y: &SymMatrix, tol: f64) -> bool {
    common::close_sym(x, y, tol)
}
