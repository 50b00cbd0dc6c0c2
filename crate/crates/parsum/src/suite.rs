//! Randomized verification suites behind the `verify` CLI command.
//!
//! Each suite draws seeded positive definite pairs, instantiates one
//! inequality family per parameter point, and emits one record per
//! instance. A suite passes when no record classifies as indefinite.

use std::str::FromStr;

use serde::Serialize;

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::generator::generator_f;
use crate::inequalities::{
    ineq_bab_aba, ineq_h2_power_chain, ineq_power_family, ineq_power_mean_vs_parallel,
    ineq_projection, ineq_scalar_lambda, InequalityReport, ReportParams, DEFAULT_LAMBDA_GRID,
    DEFAULT_P_GRID,
};
use crate::linalg::{Classification, PsdVerdict};
use crate::means::parallel_sum;
use crate::sampling::{
    derive_subseed, rng_from_seed, sample_general, sample_pd, sample_projection,
};

/// Default dimension rotation for suite instances.
pub const DEFAULT_DIMS: [usize; 4] = [2, 3, 4, 6];

/// Default eigenvalue range for sampled pairs: five decades of spread.
pub const DEFAULT_EIG_RANGE: (f64, f64) = (1e-4, 1e2);

/// Relative tolerance for the generator-inequality verdict.
pub const THEOREM1_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances per parameter point (or total, for unparameterized suites).
    pub pairs_per_point: usize,
    pub dims: Vec<usize>,
    pub p_grid: Vec<f64>,
    pub lambda_grid: Vec<f64>,
    pub eig_range: (f64, f64),
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            pairs_per_point: 500,
            dims: DEFAULT_DIMS.to_vec(),
            p_grid: DEFAULT_P_GRID.to_vec(),
            lambda_grid: DEFAULT_LAMBDA_GRID.to_vec(),
            eig_range: DEFAULT_EIG_RANGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// `F(C) ≥ A:B` for arbitrary `C` with entries uniform in [−2, 2].
    Theorem1,
    ScalarLambda,
    Projection,
    BabAba,
    /// Filters the p-grid to its own domain: all reals.
    PowerFamily,
    /// Filters the p-grid to [−1, 2].
    H2Chain,
    /// Filters the p-grid to p ≥ 1.
    PowerMean,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 7] = [
        SuiteKind::Theorem1,
        SuiteKind::ScalarLambda,
        SuiteKind::Projection,
        SuiteKind::BabAba,
        SuiteKind::PowerFamily,
        SuiteKind::H2Chain,
        SuiteKind::PowerMean,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Theorem1 => "theorem1",
            SuiteKind::ScalarLambda => "scalar-lambda",
            SuiteKind::Projection => "projection",
            SuiteKind::BabAba => "bab-aba",
            SuiteKind::PowerFamily => "power-family",
            SuiteKind::H2Chain => "h2-chain",
            SuiteKind::PowerMean => "power-mean",
        }
    }

    fn stream(&self) -> u64 {
        match self {
            SuiteKind::Theorem1 => 1,
            SuiteKind::ScalarLambda => 2,
            SuiteKind::Projection => 3,
            SuiteKind::BabAba => 4,
            SuiteKind::PowerFamily => 5,
            SuiteKind::H2Chain => 6,
            SuiteKind::PowerMean => 7,
        }
    }
}

impl FromStr for SuiteKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = SuiteKind::ALL.iter().map(|k| k.name()).collect();
                Error::Param(format!("unknown suite {s:?}, expected one of {names:?}"))
            })
    }
}

/// One suite instance, shaped for JSON-lines emission.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteRecord {
    pub name: &'static str,
    pub n: usize,
    pub parameters: ReportParams,
    pub min_eig: f64,
    pub threshold: f64,
    pub classification: Classification,
    pub seed: u64,
}

impl SuiteRecord {
    fn from_report(report: &InequalityReport, n: usize, seed: u64) -> Self {
        Self {
            name: report.name,
            n,
            parameters: report.parameters,
            min_eig: report.gap_verdict.min_eig,
            threshold: report.gap_verdict.threshold,
            classification: report.gap_verdict.classification,
            seed,
        }
    }

    pub fn holds(&self) -> bool {
        self.classification != Classification::Indefinite
    }
}

/// Runs one suite, returning a record per instance in deterministic order.
pub fn run_suite(kind: SuiteKind, cfg: &SuiteConfig) -> Result<Vec<SuiteRecord>> {
    match kind {
        SuiteKind::Theorem1 => run_theorem1(cfg),
        SuiteKind::ScalarLambda => {
            run_parameterized(kind, cfg, &cfg.lambda_grid.clone(), |a, b, &lam| {
                ineq_scalar_lambda(a, b, lam)
            })
        }
        SuiteKind::Projection => run_projection(cfg),
        SuiteKind::BabAba => run_parameterized(kind, cfg, &[()], |a, b, _| ineq_bab_aba(a, b)),
        SuiteKind::PowerFamily => run_parameterized(kind, cfg, &cfg.p_grid.clone(), |a, b, &p| {
            ineq_power_family(a, b, p)
        }),
        SuiteKind::H2Chain => {
            let grid: Vec<f64> = cfg
                .p_grid
                .iter()
                .copied()
                .filter(|p| (-1.0..=2.0).contains(p))
                .collect();
            run_parameterized(kind, cfg, &grid, |a, b, &p| ineq_h2_power_chain(a, b, p))
        }
        SuiteKind::PowerMean => {
            let grid: Vec<f64> = cfg.p_grid.iter().copied().filter(|&p| p >= 1.0).collect();
            run_parameterized(kind, cfg, &grid, |a, b, &p| {
                ineq_power_mean_vs_parallel(a, b, p)
            })
        }
    }
}

fn run_parameterized<P, F>(
    kind: SuiteKind,
    cfg: &SuiteConfig,
    grid: &[P],
    instance: F,
) -> Result<Vec<SuiteRecord>>
where
    F: Fn(&crate::matrix::SymMatrix, &crate::matrix::SymMatrix, &P) -> Result<InequalityReport>,
{
    let mut records = Vec::with_capacity(grid.len() * cfg.pairs_per_point);
    for (pt_idx, param) in grid.iter().enumerate() {
        for i in 0..cfg.pairs_per_point {
            let seed = derive_subseed(cfg.seed, kind.stream() << 16 | pt_idx as u64, i as u64);
            let mut rng = rng_from_seed(seed);
            let n = cfg.dims[i % cfg.dims.len()];
            let a = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
            let b = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
            let report = instance(&a, &b, param)?;
            records.push(SuiteRecord::from_report(&report, n, seed));
        }
    }
    Ok(records)
}

fn run_projection(cfg: &SuiteConfig) -> Result<Vec<SuiteRecord>> {
    use rand::Rng;
    let mut records = Vec::with_capacity(cfg.pairs_per_point);
    for i in 0..cfg.pairs_per_point {
        let seed = derive_subseed(cfg.seed, SuiteKind::Projection.stream() << 16, i as u64);
        let mut rng = rng_from_seed(seed);
        let n = cfg.dims[i % cfg.dims.len()];
        let a = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
        let b = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
        let rank = if n == 1 { 1 } else { rng.random_range(1..n) };
        let p = sample_projection(&mut rng, n, rank);
        let report = ineq_projection(&a, &b, &p)?;
        records.push(SuiteRecord::from_report(&report, n, seed));
    }
    Ok(records)
}

fn run_theorem1(cfg: &SuiteConfig) -> Result<Vec<SuiteRecord>> {
    let mut records = Vec::with_capacity(cfg.pairs_per_point);
    for i in 0..cfg.pairs_per_point {
        let seed = derive_subseed(cfg.seed, SuiteKind::Theorem1.stream() << 16, i as u64);
        let mut rng = rng_from_seed(seed);
        let n = cfg.dims[i % cfg.dims.len()];
        let a = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
        let b = sample_pd(&mut rng, n, cfg.eig_range.0, cfg.eig_range.1);
        let c = sample_general(&mut rng, n, -2.0, 2.0);
        let f = generator_f(&a, &b, &c);
        let gap = &f - &parallel_sum(&a, &b)?;
        let min_eig = eigh(&gap)?.min_eigenvalue();
        // Tolerance scales with ‖F(C)‖, the natural magnitude of this family.
        let threshold = THEOREM1_REL_TOL * (1.0 + f.norm_max());
        let verdict = PsdVerdict::classify(min_eig, threshold);
        records.push(SuiteRecord {
            name: SuiteKind::Theorem1.name(),
            n,
            parameters: ReportParams::None,
            min_eig,
            threshold,
            classification: verdict.classification,
            seed,
        });
    }
    Ok(records)
}
