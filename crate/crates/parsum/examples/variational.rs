//! The variational principle behind the parallel sum:
//!
//!   ((A:B)x | x) = inf over η of (Aη | η) + (B(x−η) | x−η)
//!
//! computed three ways: the closed-form minimizer ξ = (A+B)⁻¹Bx, the
//! quadratic value at ξ, and an exact-line-search descent oracle that
//! knows nothing about parallel sums.
//!
//! Run with: cargo run --example variational

use parsum::sampling::{rng_from_seed, sample_pd, sample_vector};
use parsum::{parallel_sum, variational_infimum_oracle, variational_minimizer, variational_value};

fn main() {
    let mut rng = rng_from_seed(42);
    let a = sample_pd(&mut rng, 4, 0.5, 20.0);
    let b = sample_pd(&mut rng, 4, 0.5, 20.0);
    let x = sample_vector(&mut rng, 4);

    let xi = variational_minimizer(&a, &b, &x).unwrap();
    println!("minimizer ξ = (A+B)⁻¹Bx: {:?}", xi.as_slice());

    // First-order condition: Aξ − B(x−ξ) = 0.
    let stationarity = (&a.apply_vec(&xi) - &b.apply_vec(&(&x - &xi))).norm_max();
    println!("‖Aξ − B(x−ξ)‖ = {stationarity:.3e}");

    let at_minimizer = variational_value(&a, &b, &x, &xi);
    let closed_form = parallel_sum(&a, &b).unwrap().quad_form(&x);
    let by_descent = variational_infimum_oracle(&a, &b, &x).unwrap();

    println!("f(ξ)            = {at_minimizer:.12}");
    println!("((A:B)x | x)    = {closed_form:.12}");
    println!("descent oracle  = {by_descent:.12}");
    println!(
        "max pairwise difference = {:.3e}",
        (at_minimizer - closed_form)
            .abs()
            .max((by_descent - closed_form).abs())
    );

    // Any other η gives a larger value.
    println!("\nrandom η never beat the minimum:");
    for i in 0..5 {
        let eta = sample_vector(&mut rng, 4);
        let value = variational_value(&a, &b, &x, &eta);
        println!("  η{i}: f(η) − f(ξ) = {:+.6e}", value - at_minimizer);
    }
}
