//! Parallel sum and operator means of a positive definite pair, with the
//! classical order bounds checked numerically.
//!
//! Run with: cargo run --example means

use parsum::io::format_f64;
use parsum::sampling::{rng_from_seed, sample_pd};
use parsum::{harmonic_mean, parallel_sum, power_mean, psd_check, SymMatrix};

fn show(name: &str, m: &SymMatrix) {
    println!("{name}:");
    for row in m.to_rows() {
        let line: Vec<String> = row.iter().map(|v| format!("{v:+.6}")).collect();
        println!("  [{}]", line.join(", "));
    }
}

fn check_bound(name: &str, gap: &SymMatrix) {
    let verdict = psd_check(gap, 1e-9).unwrap();
    println!(
        "  {name}: min eigenvalue {} -> {}",
        format_f64(verdict.min_eig),
        verdict.classification
    );
}

fn main() {
    let mut rng = rng_from_seed(7);
    let a = sample_pd(&mut rng, 3, 0.1, 10.0);
    let b = sample_pd(&mut rng, 3, 0.1, 10.0);
    show("A", &a);
    show("B", &b);

    let ab = parallel_sum(&a, &b).unwrap();
    show("parallel sum A:B = A(A+B)⁻¹B", &ab);

    println!("\norder bounds (all gaps must be ≥ 0 in the Loewner order):");
    check_bound("A - A:B", &(&a - &ab));
    check_bound("B - A:B", &(&b - &ab));
    check_bound("(A+B)/4 - A:B", &(&(&a + &b).scale(0.25) - &ab));

    let h2 = harmonic_mean(&a, &b).unwrap();
    println!(
        "\nharmonic mean H₂ = 2(A:B); ‖H₂ - 2(A:B)‖ = {}",
        format_f64((&h2 - &ab.scale(2.0)).norm_max())
    );

    println!("\npower means M_p(A,B) = ((Aᵖ+Bᵖ)/2)^(1/p):");
    for p in [-1.0, 0.5, 1.0, 2.0] {
        let mp = power_mean(&a, &b, p).unwrap();
        println!("  p = {p:>4}: trace {}", format_f64(mp.trace()));
    }

    // M₋₁ recovers the harmonic mean.
    let m_neg1 = power_mean(&a, &b, -1.0).unwrap();
    println!(
        "\nM₋₁ vs H₂: ‖difference‖ = {}",
        format_f64((&m_neg1 - &h2).norm_max())
    );

    // For p ≥ 1 the power mean dominates twice the parallel sum.
    println!("\nM_p - 2(A:B) for p ≥ 1:");
    for p in [1.0, 2.0, 3.0] {
        let mp = power_mean(&a, &b, p).unwrap();
        check_bound(&format!("M_{p} - 2(A:B)"), &(&mp - &ab.scale(2.0)));
    }
}
