//! A quick pass over every randomized inequality suite, printing one
//! summary row per suite. The `verify` CLI subcommand runs the same
//! machinery at full instance counts with JSON-lines output.
//!
//! Run with: cargo run --example inequality_suite

use parsum::suite::{run_suite, SuiteConfig, SuiteKind};

fn main() {
    let mut cfg = SuiteConfig::new(1);
    cfg.pairs_per_point = 100;

    println!(
        "{:<14} {:>10} {:>11} {:>14}",
        "suite", "instances", "indefinite", "worst min_eig"
    );
    for kind in SuiteKind::ALL {
        let records = run_suite(kind, &cfg).unwrap();
        let indefinite = records.iter().filter(|r| !r.holds()).count();
        let worst = records
            .iter()
            .map(|r| r.min_eig)
            .fold(f64::INFINITY, f64::min);
        println!(
            "{:<14} {:>10} {:>11} {:>14.3e}",
            kind.name(),
            records.len(),
            indefinite,
            worst
        );
    }

    println!("\nsample JSON-lines records, as emitted by `parsum verify --json`:");
    let records = run_suite(SuiteKind::ScalarLambda, &cfg).unwrap();
    for record in records.iter().take(3) {
        println!("{}", serde_json::to_string(record).unwrap());
    }
}
