//! The built-in golden 2×2 pair: positive definite matrices with five
//! decades of eigenvalue spread for which the order-1/2 power mean fails
//! to dominate the parallel sum — the domination that holds for every
//! p ≥ 1 breaks below p = 1.
//!
//! Run with: cargo run --example golden_pair

use parsum::io::format_f64;
use parsum::search::{example_pair, EXAMPLE_EIG_A, EXAMPLE_EIG_B, EXAMPLE_MIN_EIG_GAP};
use parsum::{parallel_sum, power_mean, psd_check, reproduce_example};

fn main() {
    let (a, b) = example_pair();
    println!("A = {:?}", a.to_rows());
    println!("B = {:?}", b.to_rows());

    let report = reproduce_example().unwrap();
    println!(
        "\neigenvalues of A: {:?} (expected ≈ {EXAMPLE_EIG_A:?})",
        report.eig_a
    );
    println!(
        "eigenvalues of B: {:?} (expected ≈ {EXAMPLE_EIG_B:?})",
        report.eig_b
    );

    // M_{1/2}(A,B) = ((√A + √B)/2)² sits below A:B in one direction.
    let gap = &power_mean(&a, &b, 0.5).unwrap() - &parallel_sum(&a, &b).unwrap();
    let verdict = psd_check(&gap, 1e-9).unwrap();
    println!(
        "\nmin eigenvalue of M_1/2(A,B) - A:B = {} (expected ≈ {EXAMPLE_MIN_EIG_GAP:e})",
        format_f64(report.min_eig_gap)
    );
    println!("classification: {}", verdict.classification);
    println!("within tolerance: {}", report.within_tolerance());

    // Contrast: at p ≥ 1 the same comparison is nonnegative, and the
    // power mean even dominates twice the parallel sum.
    for p in [1.0, 2.0] {
        let gap = &power_mean(&a, &b, p).unwrap() - &parallel_sum(&a, &b).unwrap().scale(2.0);
        let verdict = psd_check(&gap, 1e-9).unwrap();
        println!("M_{p}(A,B) - 2(A:B): {}", verdict.classification);
    }
}
