//! Command-line front end: operator means, the generator-equation solver,
//! randomized inequality verification, counterexample search, and the
//! golden-example reproduction, with file-based matrix I/O.
//!
//! Exit codes: 0 success; 1 a verify suite found an indefinite gap;
//! 2 usage or parse errors; 3 domain/infeasibility/convergence errors;
//! 4 golden-example mismatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use parsum::error::Error;
use parsum::io::{format_f64, format_matrix, read_matrix};
use parsum::linalg::PsdVerdict;
use parsum::means::MeanKind;
use parsum::search::{run_search, SearchConfig};
use parsum::suite::{run_suite, SuiteConfig, SuiteKind};

#[derive(Parser)]
#[command(
    name = "parsum",
    version,
    about = "Parallel sums, operator means, and operator-inequality experiments"
)]
struct Cli {
    /// Emit structured JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an operator mean of two matrices.
    Compute {
        #[arg(long, value_enum)]
        mean: MeanArg,
        /// Exponent for --mean power.
        #[arg(long, allow_hyphen_values = true)]
        p: Option<f64>,
        /// Also print the eigenvalues of the result.
        #[arg(long)]
        eigenvalues: bool,
        a: PathBuf,
        b: PathBuf,
    },
    /// Solve CᵀAC + (I−C)ᵀB(I−C) = H for C; fails if H is not ≥ A:B.
    Solve { a: PathBuf, b: PathBuf, h: PathBuf },
    /// Run randomized inequality suites; exits 1 if any gap is indefinite.
    Verify(VerifyArgs),
    /// Mine counterexamples to H₂(A,B) ≤ H₂(Aᵖ,Bᵖ)^{1/p}; streams JSON lines.
    Search(SearchArgs),
    /// Recompute the built-in golden 2×2 pair and check it against the
    /// expected spectra and gap.
    ReproExample,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeanArg {
    /// A:B = (A⁻¹+B⁻¹)⁻¹
    Parallel,
    /// H₂(A,B) = 2(A:B)
    Harmonic,
    /// M_p(A,B) = ((Aᵖ+Bᵖ)/2)^{1/p}; requires --p
    Power,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run; defaults to all. May be repeated.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Seed for instance sampling (required: runs are reproducible only).
    #[arg(long)]
    seed: u64,
    /// Instances per parameter point.
    #[arg(long, default_value_t = 500)]
    count: usize,
    /// Dimension rotation for sampled pairs.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4, 6])]
    dims: Vec<usize>,
    /// Exponent grid for the power suites.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    p_grid: Option<Vec<f64>>,
    /// λ grid for the scalar suite.
    #[arg(long, value_delimiter = ',')]
    lambda_grid: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1e-4)]
    eig_lo: f64,
    #[arg(long, default_value_t = 1e2)]
    eig_hi: f64,
    /// Worker threads for suite evaluation.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// JSON config file ({"p_values": [...], "samples_per_p": N, "seed": S, ...}).
    #[arg(long, conflicts_with_all = ["p", "samples", "seed", "dim", "eig_lo", "eig_hi", "violation_threshold"])]
    config: Option<PathBuf>,
    /// Exponents to search. May be repeated or comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required_unless_present = "config"
    )]
    p: Vec<f64>,
    #[arg(long, required_unless_present = "config")]
    samples: Option<u64>,
    /// Seed (required: runs are reproducible only).
    #[arg(long, required_unless_present = "config")]
    seed: Option<u64>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    eig_lo: Option<f64>,
    #[arg(long)]
    eig_hi: Option<f64>,
    #[arg(long)]
    violation_threshold: Option<f64>,
    /// Worker threads for sample evaluation.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Compute {
            mean,
            p,
            eigenvalues,
            a,
            b,
        } => cmd_compute(mean, p, eigenvalues, &a, &b, cli.json),
        Command::Solve { a, b, h } => cmd_solve(&a, &b, &h, cli.json),
        Command::Verify(args) => cmd_verify(args, cli.json),
        Command::Search(args) => cmd_search(args),
        Command::ReproExample => cmd_repro(cli.json),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Param(_) => 2,
        Error::Domain(_) | Error::Infeasible { .. } | Error::NonConvergence { .. } => 3,
    }
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Param(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn cmd_compute(
    mean: MeanArg,
    p: Option<f64>,
    eigenvalues: bool,
    a_path: &Path,
    b_path: &Path,
    json: bool,
) -> Result<i32, Error> {
    let kind = match (mean, p) {
        (MeanArg::Parallel, None) => MeanKind::ParallelSum,
        (MeanArg::Harmonic, None) => MeanKind::Harmonic2,
        (MeanArg::Power, Some(p)) => MeanKind::Power(p),
        (MeanArg::Power, None) => {
            return Err(Error::Param("--mean power requires --p".into()));
        }
        (_, Some(_)) => {
            return Err(Error::Param("--p is only valid with --mean power".into()));
        }
    };
    let a = read_matrix(a_path)?;
    let b = read_matrix(b_path)?;
    let result = kind.compute(&a, &b)?;
    let eig = if eigenvalues {
        Some(parsum::eigh(&result)?.eigenvalues().to_vec())
    } else {
        None
    };

    if json {
        #[derive(Serialize)]
        struct ComputeOut {
            dim: usize,
            rows: Vec<Vec<f64>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            eigenvalues: Option<Vec<f64>>,
        }
        println!(
            "{}",
            serde_json::to_string(&ComputeOut {
                dim: result.dim(),
                rows: result.to_rows(),
                eigenvalues: eig,
            })
            .unwrap()
        );
    } else {
        print!("{}", format_matrix(&result));
        if let Some(eig) = eig {
            let line: Vec<String> = eig.iter().map(|v| format_f64(*v)).collect();
            println!("eigenvalues: {}", line.join(" "));
        }
    }
    Ok(0)
}

fn cmd_solve(a_path: &Path, b_path: &Path, h_path: &Path, json: bool) -> Result<i32, Error> {
    let a = read_matrix(a_path)?;
    let b = read_matrix(b_path)?;
    let h = read_matrix(h_path)?;
    let out = parsum::solve_equation(&a, &b, &h)?;

    if json {
        #[derive(Serialize)]
        struct SolveOut {
            c_rows: Vec<Vec<f64>>,
            residual: f64,
            feasibility: PsdVerdict,
        }
        println!(
            "{}",
            serde_json::to_string(&SolveOut {
                c_rows: out.c.to_rows(),
                residual: out.residual,
                feasibility: out.feasibility,
            })
            .unwrap()
        );
    } else {
        println!("C:");
        println!("{}", out.c.dim());
        for row in out.c.to_rows() {
            let line: Vec<String> = row.iter().map(|v| format_f64(*v)).collect();
            println!("{}", line.join(" "));
        }
        println!("residual: {}", format_f64(out.residual));
        println!(
            "feasibility: min_eig={} threshold={} classification={}",
            format_f64(out.feasibility.min_eig),
            format_f64(out.feasibility.threshold),
            out.feasibility.classification
        );
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, json: bool) -> Result<i32, Error> {
    let kinds: Vec<SuiteKind> = if args.suites.is_empty() {
        SuiteKind::ALL.to_vec()
    } else {
        args.suites
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?
    };
    if args.eig_lo <= 0.0 || args.eig_lo >= args.eig_hi {
        return Err(Error::Param("need 0 < eig-lo < eig-hi".into()));
    }
    let mut cfg = SuiteConfig::new(args.seed);
    cfg.pairs_per_point = args.count;
    cfg.dims = args.dims;
    cfg.eig_range = (args.eig_lo, args.eig_hi);
    if let Some(grid) = args.p_grid {
        cfg.p_grid = grid;
    }
    if let Some(grid) = args.lambda_grid {
        cfg.lambda_grid = grid;
    }

    let mut any_indefinite = false;
    for kind in kinds {
        let records = with_pool(args.threads, || run_suite(kind, &cfg))??;
        let indefinite = records.iter().filter(|r| !r.holds()).count();
        any_indefinite |= indefinite > 0;
        if json {
            for record in &records {
                println!("{}", serde_json::to_string(record).unwrap());
            }
        } else {
            let worst = records
                .iter()
                .map(|r| r.min_eig)
                .fold(f64::INFINITY, f64::min);
            println!(
                "{}: {} instances, {} indefinite, most negative min_eig {:e}",
                kind.name(),
                records.len(),
                indefinite,
                worst
            );
        }
    }
    Ok(if any_indefinite { 1 } else { 0 })
}

fn cmd_search(args: SearchArgs) -> Result<i32, Error> {
    let cfg = match args.config {
        Some(path) => {
            let text = std::fs::read_to_string(&path)?;
            serde_json::from_str::<SearchConfig>(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut cfg = SearchConfig::new(
                args.seed.expect("clap enforces --seed"),
                args.p,
                args.samples.expect("clap enforces --samples"),
            );
            if let Some(dim) = args.dim {
                cfg.dim = dim;
            }
            if let Some(lo) = args.eig_lo {
                cfg.eig_range.0 = lo;
            }
            if let Some(hi) = args.eig_hi {
                cfg.eig_range.1 = hi;
            }
            if let Some(t) = args.violation_threshold {
                cfg.violation_threshold = t;
            }
            cfg
        }
    };
    cfg.validate()?;

    let report = with_pool(args.threads, || run_search(&cfg))??;
    for violation in &report.violations {
        println!("{}", serde_json::to_string(violation).unwrap());
    }
    for summary in &report.summaries {
        println!("{}", serde_json::to_string(summary).unwrap());
    }
    Ok(0)
}

fn cmd_repro(json: bool) -> Result<i32, Error> {
    let report = parsum::reproduce_example()?;
    let ok = report.within_tolerance();
    if json {
        #[derive(Serialize)]
        struct ReproOut {
            eig_a: Vec<f64>,
            eig_b: Vec<f64>,
            min_eig_gap: f64,
            within_tolerance: bool,
        }
        println!(
            "{}",
            serde_json::to_string(&ReproOut {
                eig_a: report.eig_a.clone(),
                eig_b: report.eig_b.clone(),
                min_eig_gap: report.min_eig_gap,
                within_tolerance: ok,
            })
            .unwrap()
        );
    } else {
        let fmt = |v: &[f64]| {
            v.iter()
                .map(|x| format_f64(*x))
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("eigenvalues of A: {}", fmt(&report.eig_a));
        println!("eigenvalues of B: {}", fmt(&report.eig_b));
        println!(
            "min eigenvalue of M_1/2(A,B) - A:B: {}",
            format_f64(report.min_eig_gap)
        );
        println!("within tolerance: {ok}");
    }
    Ok(if ok { 0 } else { 4 })
}
