//! Solving CᵀAC + (I−C)ᵀB(I−C) = H in closed form.
//!
//! The functional's range over all C is exactly {H : H ≥ A:B}, so the
//! solver first certifies H − A:B and then assembles one solution through
//! the symmetrized coordinates. An H below the parallel sum is rejected.
//!
//! Run with: cargo run --example generator_equation

use parsum::generator::generator_f;
use parsum::sampling::{rng_from_seed, sample_pd};
use parsum::{parallel_sum, solve_equation, Error, SymMatrix};

fn main() {
    let mut rng = rng_from_seed(20_210_716);
    let a = sample_pd(&mut rng, 3, 0.1, 10.0);
    let b = sample_pd(&mut rng, 3, 0.1, 10.0);
    let ab = parallel_sum(&a, &b).unwrap();

    // Feasible: H = A:B + Δ with Δ positive definite.
    let delta = sample_pd(&mut rng, 3, 0.01, 1.0);
    let h = &ab + &delta;
    let out = solve_equation(&a, &b, &h).unwrap();
    println!("feasible H = A:B + Δ");
    println!("  feasibility: {}", out.feasibility.classification);
    println!("  residual ‖F(C) − H‖ = {:.3e}", out.residual);
    let reassembled = generator_f(&a, &b, &out.c);
    println!(
        "  independent reassembly ‖F(C) − H‖ = {:.3e}",
        (&reassembled - &h).norm_max()
    );

    // Marginal: H = A:B exactly; the solution is C = (A+B)⁻¹B.
    let out = solve_equation(&a, &b, &ab).unwrap();
    println!("\nmarginal H = A:B");
    println!("  feasibility: {}", out.feasibility.classification);
    println!("  residual = {:.3e}", out.residual);

    // Infeasible: any negative shift leaves the functional's range.
    let h_bad = &ab - &SymMatrix::identity(3).scale(1e-3);
    match solve_equation(&a, &b, &h_bad) {
        Err(Error::Infeasible { min_eig, .. }) => {
            println!("\ninfeasible H = A:B − 10⁻³·I rejected as expected");
            println!("  min eigenvalue of H − A:B = {min_eig:.3e}");
        }
        other => panic!("expected infeasibility, got {other:?}"),
    }
}
