//! Parallel sums, operator means, and operator-inequality experiments on
//! small dense real symmetric matrices.
//!
//! The parallel sum of two positive definite operators,
//! `A:B = (A⁻¹ + B⁻¹)⁻¹`, models resistors combined in parallel and is the
//! building block for the harmonic operator mean `H₂ = 2(A:B)`. This crate
//! provides:
//!
//! - [`linalg`]: Jacobi eigendecomposition, spectral matrix functions,
//!   Loewner-order classification, congruence transforms, SPD solves;
//! - [`means`]: the parallel sum in its stable product form `A(A+B)⁻¹B`,
//!   harmonic and power means, and the quadratic variational principle
//!   with an independent descent oracle;
//! - [`generator`]: the functional `F(C) = CᵀAC + (I−C)ᵀB(I−C)` whose
//!   range is exactly `{H : H ≥ A:B}`, and a closed-form solver for
//!   `F(C) = H` with a feasibility certificate;
//! - [`inequalities`] and [`suite`]: inequality families derived from the
//!   generator, instantiated as randomized verification suites;
//! - [`search`]: a seeded, shardable counterexample miner for the
//!   harmonic-mean power inequality `H₂(A,B) ≤ H₂(Aᵖ,Bᵖ)^{1/p}`, which
//!   fails for small positive exponents.
//!
//! Everything is pure and deterministic: values are immutable after
//! construction, random instances derive from explicit 64-bit seeds, and
//! eigendecompositions carry a fixed sign convention so identical inputs
//! produce identical bytes.
//!
//! The `examples/` directory holds one runnable walk-through per
//! capability; the `parsum` binary exposes the same operations as
//! subcommands with file-based matrix I/O.

pub mod eigen;
pub mod error;
pub mod generator;
pub mod inequalities;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod means;
pub mod sampling;
pub mod search;
pub mod suite;

pub use eigen::{eigh, EigenDecomposition};
pub use error::{Error, Result};
pub use generator::{generator_f, solve_equation, SolveResult};
pub use inequalities::InequalityReport;
pub use linalg::{
    congruence, matrix_function, matrix_power, psd_check, solve_spd, solve_spd_vec, Classification,
    PsdVerdict,
};
pub use matrix::{GeneralMatrix, SymMatrix, Vector};
pub use means::{
    harmonic_mean, parallel_sum, power_mean, variational_infimum_oracle, variational_minimizer,
    variational_value, MeanKind,
};
pub use search::{
    conjecture_gap, refine_counterexample, reproduce_example, run_search, CounterexampleRecord,
    SearchConfig, SearchReport,
};
