//! Seeded counterexample mining for the harmonic-mean power inequality
//! `H₂(A,B) ≤ H₂(Aᵖ,Bᵖ)^{1/p}`, plus the built-in golden 2×2 pair on
//! which the order-1/2 power mean fails to dominate the parallel sum.
//!
//! Every sample is derived from `(seed, p-index, sample-index)` through a
//! 64-bit mixing function, so runs are reproducible, shardable, and
//! independent of worker scheduling; identical configs produce
//! byte-identical output streams.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::linalg::matrix_power;
use crate::matrix::SymMatrix;
use crate::means::{harmonic_mean, parallel_sum, power_mean};
use crate::sampling::{derive_subseed, rng_from_seed, sample_pd, standard_normal};

pub const DEFAULT_SEARCH_DIM: usize = 2;
pub const DEFAULT_EIG_RANGE: (f64, f64) = (1e-4, 1e2);
/// Relative factor separating genuine violations from eigensolver noise.
pub const DEFAULT_VIOLATION_THRESHOLD: f64 = 1e-10;
/// The search targets small dense instances only.
pub const SEARCH_MAX_DIM: usize = 16;

const REFINE_STREAM: u64 = 0xF1DE;

fn default_dim() -> usize {
    DEFAULT_SEARCH_DIM
}
fn default_eig_range() -> (f64, f64) {
    DEFAULT_EIG_RANGE
}
fn default_violation_threshold() -> f64 {
    DEFAULT_VIOLATION_THRESHOLD
}

/// Sampling plan for [`run_search`]. Deserializable from a JSON config
/// file; `p_values`, `samples_per_p`, and `seed` are mandatory there.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub p_values: Vec<f64>,
    pub samples_per_p: u64,
    #[serde(default = "default_dim")]
    pub dim: usize,
    pub seed: u64,
    #[serde(default = "default_eig_range")]
    pub eig_range: (f64, f64),
    #[serde(default = "default_violation_threshold")]
    pub violation_threshold: f64,
}

impl SearchConfig {
    pub fn new(seed: u64, p_values: Vec<f64>, samples_per_p: u64) -> Self {
        Self {
            p_values,
            samples_per_p,
            dim: DEFAULT_SEARCH_DIM,
            seed,
            eig_range: DEFAULT_EIG_RANGE,
            violation_threshold: DEFAULT_VIOLATION_THRESHOLD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p_values.is_empty() {
            return Err(Error::Param("p_values must not be empty".into()));
        }
        if self.p_values.iter().any(|p| *p == 0.0 || !p.is_finite()) {
            return Err(Error::Param("every p must be finite and non-zero".into()));
        }
        if self.samples_per_p < 1 {
            return Err(Error::Param("samples_per_p must be at least 1".into()));
        }
        if !(2..=SEARCH_MAX_DIM).contains(&self.dim) {
            return Err(Error::Param(format!(
                "dim must be in [2, {SEARCH_MAX_DIM}], got {}",
                self.dim
            )));
        }
        let (lo, hi) = self.eig_range;
        if !(lo > 0.0 && lo < hi && hi.is_finite()) {
            return Err(Error::Param(format!(
                "eig_range needs 0 < lo < hi, got ({lo}, {hi})"
            )));
        }
        if self.violation_threshold.is_nan() || self.violation_threshold < 0.0 {
            return Err(Error::Param("violation_threshold must be ≥ 0".into()));
        }
        Ok(())
    }
}

/// A mined violation, self-contained: the stored pair re-verifies without
/// the generator that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub p: f64,
    /// Sub-seed the sample was drawn from.
    pub seed: u64,
    pub sample_index: u64,
    /// Most negative eigenvalue of `H₂(Aᵖ,Bᵖ)^{1/p} − H₂(A,B)`.
    pub min_eig_gap: f64,
    a_rows: Vec<Vec<f64>>,
    b_rows: Vec<Vec<f64>>,
}

impl CounterexampleRecord {
    pub fn new(
        p: f64,
        seed: u64,
        sample_index: u64,
        min_eig_gap: f64,
        a: &SymMatrix,
        b: &SymMatrix,
    ) -> Self {
        Self {
            p,
            seed,
            sample_index,
            min_eig_gap,
            a_rows: a.to_rows(),
            b_rows: b.to_rows(),
        }
    }

    pub fn a(&self) -> SymMatrix {
        SymMatrix::from_rows(&self.a_rows)
    }

    pub fn b(&self) -> SymMatrix {
        SymMatrix::from_rows(&self.b_rows)
    }
}

/// Per-exponent tally.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchSummary {
    pub p: f64,
    pub samples: u64,
    pub violations: u64,
    /// Samples discarded because a matrix function fell outside its domain.
    pub skipped: u64,
    pub most_negative_gap: Option<f64>,
    /// Smallest gap among non-violating samples: how close the inequality
    /// came to failing without doing so.
    pub tightest_ok_gap: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub violations: Vec<CounterexampleRecord>,
    pub summaries: Vec<SearchSummary>,
}

/// Minimum eigenvalue of `H₂(Aᵖ,Bᵖ)^{1/p} − H₂(A,B)`; negative means the
/// inequality fails on this instance.
pub fn conjecture_gap(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<f64> {
    Ok(conjecture_gap_detail(a, b, p)?.0)
}

/// [`conjecture_gap`] plus `‖H₂(A,B)‖_max`, the scale violations are
/// measured against.
pub fn conjecture_gap_detail(a: &SymMatrix, b: &SymMatrix, p: f64) -> Result<(f64, f64)> {
    if p == 0.0 {
        return Err(Error::Param("p must be non-zero".into()));
    }
    let h2 = harmonic_mean(a, b)?;
    let h2_of_powers =
        crate::means::harmonic_mean_trusted(&matrix_power(a, p)?, &matrix_power(b, p)?)?;
    let rhs = matrix_power(&h2_of_powers, 1.0 / p)?;
    let gap = eigh(&(&rhs - &h2))?.min_eigenvalue();
    Ok((gap, h2.norm_max()))
}

enum Outcome {
    Evaluated {
        gap: f64,
        violation: Option<Box<CounterexampleRecord>>,
    },
    Skipped,
}

fn evaluate_sample(cfg: &SearchConfig, p_idx: usize, index: u64) -> Outcome {
    let subseed = derive_subseed(cfg.seed, p_idx as u64, index);
    let mut rng = rng_from_seed(subseed);
    let a = sample_pd(&mut rng, cfg.dim, cfg.eig_range.0, cfg.eig_range.1);
    let b = sample_pd(&mut rng, cfg.dim, cfg.eig_range.0, cfg.eig_range.1);
    let p = cfg.p_values[p_idx];
    match conjecture_gap_detail(&a, &b, p) {
        Err(_) => Outcome::Skipped,
        Ok((gap, h2_norm)) => {
            let threshold = cfg.violation_threshold * (1.0 + h2_norm);
            let violation = (gap < -threshold)
                .then(|| Box::new(CounterexampleRecord::new(p, subseed, index, gap, &a, &b)));
            Outcome::Evaluated { gap, violation }
        }
    }
}

/// Mines the configured grid. Violations come back sorted by
/// (p-index, sample-index); identical configs produce identical reports
/// regardless of how many worker threads evaluate the samples.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let mut violations = Vec::new();
    let mut summaries = Vec::with_capacity(cfg.p_values.len());
    for (p_idx, &p) in cfg.p_values.iter().enumerate() {
        let outcomes: Vec<Outcome> = (0..cfg.samples_per_p as usize)
            .into_par_iter()
            .with_min_len(128)
            .map(|i| evaluate_sample(cfg, p_idx, i as u64))
            .collect();

        let mut summary = SearchSummary {
            p,
            samples: cfg.samples_per_p,
            violations: 0,
            skipped: 0,
            most_negative_gap: None,
            tightest_ok_gap: None,
        };
        for outcome in outcomes {
            match outcome {
                Outcome::Skipped => summary.skipped += 1,
                Outcome::Evaluated { gap, violation } => {
                    summary.most_negative_gap =
                        Some(summary.most_negative_gap.map_or(gap, |g| g.min(gap)));
                    match violation {
                        Some(rec) => {
                            summary.violations += 1;
                            violations.push(*rec);
                        }
                        None => {
                            summary.tightest_ok_gap =
                                Some(summary.tightest_ok_gap.map_or(gap, |g| g.min(gap)));
                        }
                    }
                }
            }
        }
        summaries.push(summary);
    }
    Ok(SearchReport {
        violations,
        summaries,
    })
}

/// Random coordinate-wise hill climb that never accepts a worse gap.
/// The perturbation scale halves on every rejected step.
pub fn refine_counterexample(rec: &CounterexampleRecord, steps: u64) -> CounterexampleRecord {
    let mut rng = rng_from_seed(derive_subseed(rec.seed, REFINE_STREAM, rec.sample_index));
    let mut a = rec.a();
    let mut b = rec.b();
    let mut best_gap = rec.min_eig_gap;
    let n = a.dim();
    let mut scale = 0.05 * a.norm_max().max(b.norm_max());

    for _ in 0..steps {
        if scale <= 1e-300 {
            break;
        }
        let on_a: bool = rng.random();
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        let delta = scale * standard_normal(&mut rng);

        let mut cand_a = a.clone();
        let mut cand_b = b.clone();
        let target = if on_a { &mut cand_a } else { &mut cand_b };
        let old = target.get(i, j);
        target.set_sym(i, j, old + delta);

        match conjecture_gap(&cand_a, &cand_b, rec.p) {
            Ok(gap) if gap < best_gap => {
                a = cand_a;
                b = cand_b;
                best_gap = gap;
            }
            _ => scale *= 0.5,
        }
    }
    CounterexampleRecord::new(rec.p, rec.seed, rec.sample_index, best_gap, &a, &b)
}

// ---------------------------------------------------------------------
// Built-in golden pair
// ---------------------------------------------------------------------

/// Expected spectra and gap for the golden pair, with the tolerances the
/// `repro-example` command enforces.
pub const EXAMPLE_EIG_A: [f64; 2] = [5.00338e-6, 0.184955];
pub const EXAMPLE_EIG_B: [f64; 2] = [0.00018522, 0.985315];
pub const EXAMPLE_MIN_EIG_GAP: f64 = -1.57101e-6;
pub const EXAMPLE_EIG_REL_TOL: f64 = 1e-4;
pub const EXAMPLE_GAP_REL_TOL: f64 = 1e-2;

/// The golden 2×2 pair: both matrices are positive definite with five
/// decades of eigenvalue spread, and the order-1/2 power mean
/// `M_{1/2}(A,B) = ((A^{1/2}+B^{1/2})/2)²` fails to dominate `A:B`.
pub fn example_pair() -> (SymMatrix, SymMatrix) {
    let a = SymMatrix::from_rows(&[[0.14623, -0.07525], [-0.07525, 0.03873]]);
    let b = SymMatrix::from_rows(&[[0.733, -0.43], [-0.43, 0.2525]]);
    (a, b)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub eig_a: Vec<f64>,
    pub eig_b: Vec<f64>,
    /// Minimum eigenvalue of `M_{1/2}(A,B) − A:B`.
    pub min_eig_gap: f64,
}

impl ExampleReport {
    pub fn within_tolerance(&self) -> bool {
        let rel = |got: f64, want: f64| (got - want).abs() <= want.abs() * EXAMPLE_EIG_REL_TOL;
        self.eig_a
            .iter()
            .zip(EXAMPLE_EIG_A)
            .all(|(&got, want)| rel(got, want))
            && self
                .eig_b
                .iter()
                .zip(EXAMPLE_EIG_B)
                .all(|(&got, want)| rel(got, want))
            && (self.min_eig_gap - EXAMPLE_MIN_EIG_GAP).abs()
                <= EXAMPLE_MIN_EIG_GAP.abs() * EXAMPLE_GAP_REL_TOL
    }
}

/// Recomputes the golden pair's spectra and the negative eigenvalue of
/// `M_{1/2}(A,B) − A:B` from scratch.
pub fn reproduce_example() -> Result<ExampleReport> {
    let (a, b) = example_pair();
    let eig_a = eigh(&a)?.eigenvalues().to_vec();
    let eig_b = eigh(&b)?.eigenvalues().to_vec();
    let m_half = power_mean(&a, &b, 0.5)?;
    let gap = &m_half - &parallel_sum(&a, &b)?;
    let min_eig_gap = eigh(&gap)?.min_eigenvalue();
    Ok(ExampleReport {
        eig_a,
        eig_b,
        min_eig_gap,
    })
}
