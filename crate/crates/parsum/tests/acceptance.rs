//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::close_sym;
use parsum::generator::generator_f;
use parsum::inequalities::{power_family_c, power_family_sandwich};
use parsum::sampling::{derive_subseed, rng_from_seed, sample_pd, sample_vector};
use parsum::search::{conjecture_gap_detail, CounterexampleRecord};
use parsum::suite::{run_suite, SuiteConfig, SuiteKind};
use parsum::{
    parallel_sum, run_search, solve_equation, solve_spd, variational_infimum_oracle,
    variational_value, Error, SearchConfig, SymMatrix,
};

const PUBLISHED_SEED: u64 = 20_210_716;
const ACCEPTANCE_SEED: u64 = 0xACCE57;
const DIMS: [usize; 4] = [2, 3, 4, 6];

fn report(id: u32, name: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("acceptance {id} ({name}): PASS — {detail}"),
        Err(reason) => {
            println!("acceptance {id} ({name}): FAIL — {reason}");
            panic!("acceptance {id} ({name}) failed: {reason}");
        }
    }
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn sample_pair(seed: u64, n: usize, lo: f64, hi: f64) -> (SymMatrix, SymMatrix) {
    let mut rng = rng_from_seed(seed);
    let a = sample_pd(&mut rng, n, lo, hi);
    let b = sample_pd(&mut rng, n, lo, hi);
    (a, b)
}

#[test]
fn criterion_1_golden_example() {
    let result = (|| {
        let t0 = Instant::now();
        let rep = parsum::reproduce_example().map_err(|e| e.to_string())?;
        let rel = |got: f64, want: f64| (got - want).abs() / want.abs();

        let eig_a_want = [5.00338e-6, 0.184955];
        let eig_b_want = [0.00018522, 0.985315];
        for (got, want) in rep.eig_a.iter().zip(eig_a_want) {
            if rel(*got, want) > 1e-4 {
                return Err(format!("eig(A): {got:e} vs {want:e}"));
            }
        }
        for (got, want) in rep.eig_b.iter().zip(eig_b_want) {
            if rel(*got, want) > 1e-4 {
                return Err(format!("eig(B): {got:e} vs {want:e}"));
            }
        }
        if rel(rep.min_eig_gap, -1.57101e-6) > 1e-2 {
            return Err(format!("gap {:e} vs -1.57101e-6", rep.min_eig_gap));
        }
        let elapsed = t0.elapsed();
        if elapsed > Duration::from_secs(1) {
            return Err(format!("took {elapsed:?}, budget 1 s"));
        }

        let out = Command::new(env!("CARGO_BIN_EXE_parsum"))
            .arg("repro-example")
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            return Err(format!("repro-example exited {:?}", out.status.code()));
        }
        Ok(format!(
            "gap {:e}, eig(A) {:?}, {elapsed:?}",
            rep.min_eig_gap, rep.eig_a
        ))
    })();
    report(1, "golden example", result);
}

#[test]
fn criterion_2_theorem1_property_suite() {
    let result = (|| {
        let t0 = Instant::now();
        let mut cfg = SuiteConfig::new(ACCEPTANCE_SEED);
        cfg.pairs_per_point = 1000;
        let records = run_suite(SuiteKind::Theorem1, &cfg).map_err(|e| e.to_string())?;
        if records.len() != 1000 {
            return Err(format!("expected 1000 instances, got {}", records.len()));
        }
        // Threshold in each record is 1e-9·(1+‖F(C)‖_max) by construction.
        let violations: Vec<_> = records.iter().filter(|r| !r.holds()).collect();
        if let Some(v) = violations.first() {
            return Err(format!(
                "{} violations; first: n={} min_eig={:e} seed={}",
                violations.len(),
                v.n,
                v.min_eig,
                v.seed
            ));
        }
        let elapsed = t0.elapsed();
        if elapsed > Duration::from_secs(10) {
            return Err(format!("took {elapsed:?}, budget 10 s"));
        }
        let worst = records
            .iter()
            .map(|r| r.min_eig)
            .fold(f64::INFINITY, f64::min);
        Ok(format!(
            "1000 triples, worst min_eig {worst:e}, {elapsed:?}"
        ))
    })();
    report(2, "generator majorizes parallel sum", result);
}

#[test]
fn criterion_3_solver_round_trip_and_infeasibility() {
    let result = (|| {
        for i in 0..500u64 {
            let n = DIMS[i as usize % 4];
            let (a, b) = sample_pair(derive_subseed(ACCEPTANCE_SEED, 3, i), n, 1e-4, 1e2);
            let mut rng = rng_from_seed(derive_subseed(ACCEPTANCE_SEED, 30, i));
            let delta = sample_pd(&mut rng, n, 1e-4, 1.0);
            let ab = parallel_sum(&a, &b).map_err(|e| e.to_string())?;
            let h = &ab + &delta;
            let out = solve_equation(&a, &b, &h).map_err(|e| format!("instance {i}: {e}"))?;
            let f = generator_f(&a, &b, &out.c);
            let residual = (&f - &h).norm_max();
            if residual > 1e-8 * (1.0 + h.norm_max()) {
                return Err(format!("instance {i}: residual {residual:e}"));
            }

            let h_bad = &ab - &SymMatrix::identity(n).scale(1e-3);
            match solve_equation(&a, &b, &h_bad) {
                Err(Error::Infeasible { .. }) => {}
                other => {
                    return Err(format!(
                        "instance {i}: expected InfeasibleError, got {:?}",
                        other.map(|r| r.residual)
                    ))
                }
            }
        }
        Ok("500 PSD-shifted round-trips ≤ 1e-8·scale; 500 infeasible shifts detected".into())
    })();
    report(3, "equation solver round-trip", result);
}

#[test]
fn criterion_4_variational_oracle_equivalence() {
    let result = (|| {
        for i in 0..200u64 {
            let n = DIMS[i as usize % 4];
            // Moderate spread keeps steepest descent inside its step cap.
            let (a, b) = sample_pair(derive_subseed(ACCEPTANCE_SEED, 4, i), n, 0.5, 50.0);
            let mut rng = rng_from_seed(derive_subseed(ACCEPTANCE_SEED, 40, i));
            let x = sample_vector(&mut rng, n);
            let oracle =
                variational_infimum_oracle(&a, &b, &x).map_err(|e| format!("instance {i}: {e}"))?;
            let closed = parallel_sum(&a, &b).unwrap().quad_form(&x);
            let x_scale = 1.0 + x.norm_two() * x.norm_two();
            if (oracle - closed).abs() > 1e-8 * x_scale {
                return Err(format!(
                    "instance {i}: oracle {oracle} vs closed form {closed}"
                ));
            }
            for _ in 0..50 {
                let eta = sample_vector(&mut rng, n).scale(1.5);
                let value = variational_value(&a, &b, &x, &eta);
                let scale = 1.0 + value.abs() + closed.abs();
                if value < closed - 1e-9 * scale {
                    return Err(format!(
                        "instance {i}: f(η) = {value} below minimum {closed}"
                    ));
                }
            }
        }
        Ok("200 instances: descent oracle ≤ 1e-8·(1+‖x‖²) of ((A:B)x|x); 10000 η dominated".into())
    })();
    report(4, "variational oracle equivalence", result);
}

#[test]
fn criterion_5_theorem3_suites() {
    let result = (|| {
        let mut cfg = SuiteConfig::new(ACCEPTANCE_SEED);
        cfg.pairs_per_point = 500;
        for kind in [
            SuiteKind::ScalarLambda,
            SuiteKind::Projection,
            SuiteKind::BabAba,
            SuiteKind::PowerFamily,
            SuiteKind::H2Chain,
        ] {
            let records = run_suite(kind, &cfg).map_err(|e| e.to_string())?;
            if let Some(v) = records.iter().find(|r| !r.holds()) {
                return Err(format!(
                    "{}: indefinite gap, n={} params={:?} min_eig={:e} seed={}",
                    kind.name(),
                    v.n,
                    v.parameters,
                    v.min_eig,
                    v.seed
                ));
            }
        }

        // Equality certifications at p = 1 and C = (A+B)⁻¹B.
        for i in 0..100u64 {
            let n = DIMS[i as usize % 4];
            let (a, b) = sample_pair(derive_subseed(ACCEPTANCE_SEED, 5, i), n, 1e-4, 1e2);
            let ab = parallel_sum(&a, &b).unwrap();
            let rep = parsum::inequalities::ineq_power_family(&a, &b, 1.0).unwrap();
            if !close_sym(&rep.rhs, &ab, 1e-9) {
                return Err(format!("power family p=1 not equal to A:B at instance {i}"));
            }
            let c = solve_spd(&(&a + &b), &b.as_general()).unwrap();
            if !close_sym(&generator_f(&a, &b, &c), &ab, 1e-9) {
                return Err(format!("F((A+B)⁻¹B) ≠ A:B at instance {i}"));
            }
        }

        // Proof-identity oracles at the suite's full eigenvalue spread.
        for i in 0..200u64 {
            let n = DIMS[i as usize % 4];
            let (a, b) = sample_pair(derive_subseed(ACCEPTANCE_SEED, 50, i), n, 1e-4, 1e2);

            let bab = parsum::inequalities::ineq_bab_aba(&a, &b).unwrap();
            let c_bab = solve_spd(&(&a + &b), &b.as_general()).unwrap().transpose();
            if !close_sym(&bab.rhs, &generator_f(&a, &b, &c_bab), 1e-8) {
                return Err(format!("bab-aba proof identity drifted at instance {i}"));
            }

            let p = [-1.0, -0.5, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0][i as usize % 8];
            let rep = parsum::inequalities::ineq_power_family(&a, &b, p).unwrap();
            let c = power_family_c(&a, &b, p).unwrap();
            if !close_sym(&rep.rhs, &generator_f(&a, &b, &c), 1e-8) {
                return Err(format!(
                    "power-family proof identity drifted, p={p}, instance {i}"
                ));
            }

            // Commutation inside the proof chain:
            // Aᵖ(Aᵖ+Bᵖ)⁻¹Bᵖ = Bᵖ(Aᵖ+Bᵖ)⁻¹Aᵖ, i.e. AᵖC is symmetric.
            let ap = parsum::matrix_power(&a, p).unwrap();
            let prod = ap.as_general().matmul(&c);
            let asym = (&prod - &prod.transpose()).norm_max();
            if asym > 1e-8 * (1.0 + prod.norm_max()) {
                return Err(format!("commutation identity drifted, p={p}, instance {i}"));
            }
        }

        // The literal sandwich route agrees wherever f64 can carry it.
        for i in 0..200u64 {
            let n = DIMS[i as usize % 4];
            let (a, b) = sample_pair(derive_subseed(ACCEPTANCE_SEED, 51, i), n, 1e-1, 1e1);
            let p = [-1.0, -0.5, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0][i as usize % 8];
            let rep = parsum::inequalities::ineq_power_family(&a, &b, p).unwrap();
            let sandwich = power_family_sandwich(&a, &b, p).unwrap();
            if !close_sym(&rep.rhs, &sandwich, 1e-8) {
                return Err(format!("sandwich route drifted, p={p}, instance {i}"));
            }
        }

        Ok("5 suites × 500/point clean; equality and proof-identity oracles within bounds".into())
    })();
    report(5, "inequality family suites", result);
}

#[test]
fn criterion_6_power_chain_suite() {
    let result = (|| {
        // Forward chain on (0, 1), reverse on [−1, 0) and (1, 2].
        let mut cfg = SuiteConfig::new(ACCEPTANCE_SEED ^ 6);
        cfg.pairs_per_point = 500;
        cfg.p_grid = vec![
            0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, -1.0, -0.5, 1.5, 2.0,
        ];
        let records = run_suite(SuiteKind::H2Chain, &cfg).map_err(|e| e.to_string())?;
        if let Some(v) = records.iter().find(|r| !r.holds()) {
            return Err(format!(
                "h2-chain indefinite: params={:?} min_eig={:e} seed={}",
                v.parameters, v.min_eig, v.seed
            ));
        }
        let h2_count = records.len();

        // Power mean dominates twice the parallel sum for p ≥ 1. The p = 3
        // point cubes the condition number, so the sampler stays at 1e4
        // spread to keep the intermediate spectra above the domain floor.
        let mut cfg = SuiteConfig::new(ACCEPTANCE_SEED ^ 66);
        cfg.pairs_per_point = 500;
        cfg.p_grid = vec![1.0, 1.5, 2.0, 3.0];
        cfg.eig_range = (1e-2, 1e2);
        let records = run_suite(SuiteKind::PowerMean, &cfg).map_err(|e| e.to_string())?;
        if let Some(v) = records.iter().find(|r| !r.holds()) {
            return Err(format!(
                "power-mean indefinite: params={:?} min_eig={:e} seed={}",
                v.parameters, v.min_eig, v.seed
            ));
        }
        Ok(format!(
            "{h2_count} chain instances and {} power-mean instances, none indefinite",
            records.len()
        ))
    })();
    report(6, "harmonic power chain", result);
}

#[test]
fn criterion_7_conjecture_falsified_at_quarter() {
    let result = (|| {
        let cfg = SearchConfig::new(PUBLISHED_SEED, vec![0.25], 100_000);
        let t0 = Instant::now();
        let report = single_threaded(|| run_search(&cfg)).map_err(|e| e.to_string())?;
        let elapsed = t0.elapsed();
        if elapsed > Duration::from_secs(30) {
            return Err(format!("took {elapsed:?}, budget 30 s single-threaded"));
        }
        let summary = &report.summaries[0];
        if summary.violations == 0 {
            return Err("no violations found at p = 1/4".into());
        }

        // The committed fixture is the run's first violation; re-verify it
        // from its stored matrices alone.
        let fixture: CounterexampleRecord =
            serde_json::from_str(include_str!("fixtures/counterexample_p025.json"))
                .map_err(|e| e.to_string())?;
        let first = &report.violations[0];
        if first != &fixture {
            return Err("first violation no longer matches the committed fixture".into());
        }
        let (gap, h2_norm) = conjecture_gap_detail(&fixture.a(), &fixture.b(), fixture.p)
            .map_err(|e| e.to_string())?;
        if (gap - fixture.min_eig_gap).abs() > 1e-12 {
            return Err(format!(
                "fixture gap {:e} does not re-verify ({gap:e})",
                fixture.min_eig_gap
            ));
        }
        if gap >= -1e-10 * (1.0 + h2_norm) {
            return Err(format!("fixture gap {gap:e} is not a violation"));
        }
        Ok(format!(
            "{} violations in 1e5 samples, most negative {:e}, fixture re-verified, {elapsed:?}",
            summary.violations,
            summary.most_negative_gap.unwrap()
        ))
    })();
    report(7, "falsification at p = 1/4", result);
}

#[test]
fn criterion_8_conjecture_supported_on_upper_range() {
    let result = (|| {
        let cfg = SearchConfig::new(PUBLISHED_SEED, vec![0.5, 0.6, 0.75, 0.9, 1.0], 100_000);
        let report = run_search(&cfg).map_err(|e| e.to_string())?;
        for summary in &report.summaries {
            if summary.violations != 0 {
                return Err(format!(
                    "p = {}: {} violations (expected none)",
                    summary.p, summary.violations
                ));
            }
        }
        // Empirical support only; absence of violations proves nothing.
        let tightest = report
            .summaries
            .iter()
            .filter_map(|s| s.tightest_ok_gap)
            .fold(f64::INFINITY, f64::min);
        Ok(format!(
            "zero violations across 5×1e5 samples; tightest non-violating gap {tightest:e}"
        ))
    })();
    report(8, "support on p ∈ [1/2, 1]", result);
}

#[test]
fn criterion_9_byte_deterministic_search() {
    let result = (|| {
        let run_cli = |threads: &str| {
            Command::new(env!("CARGO_BIN_EXE_parsum"))
                .args([
                    "search",
                    "--p",
                    "0.25",
                    "--samples",
                    "100000",
                    "--seed",
                    "20210716",
                    "--threads",
                    threads,
                ])
                .output()
        };
        let t1a = run_cli("1").map_err(|e| e.to_string())?;
        let t1b = run_cli("1").map_err(|e| e.to_string())?;
        let t4a = run_cli("4").map_err(|e| e.to_string())?;
        let t4b = run_cli("4").map_err(|e| e.to_string())?;
        for out in [&t1a, &t1b, &t4a, &t4b] {
            if !out.status.success() {
                return Err(format!("search exited {:?}", out.status.code()));
            }
        }
        if t1a.stdout != t1b.stdout {
            return Err("two --threads 1 runs differ".into());
        }
        if t4a.stdout != t4b.stdout {
            return Err("two --threads 4 runs differ".into());
        }
        if t1a.stdout != t4a.stdout {
            return Err("--threads 1 and --threads 4 outputs differ".into());
        }
        Ok(format!(
            "4 runs byte-identical ({} bytes of JSON lines)",
            t1a.stdout.len()
        ))
    })();
    report(9, "byte-deterministic search", result);
}
