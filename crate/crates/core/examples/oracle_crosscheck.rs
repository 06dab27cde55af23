//! Cross-check the cotree diagonalization against the dense exact oracle
//! on a small seeded corpus.
//!
//! ```bash
//! cargo run --example oracle_crosscheck
//! ```

use cograph_spectra::verify::{run_verify, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        seed: 3,
        cases: 20,
        max_n: 24,
        rational_shifts: 4,
    };
    let report = run_verify(&cfg);
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    println!(
        "{} checks over {} trees: {}",
        report.checks,
        report.cases,
        if report.passed() { "all agree" } else { "MISMATCH" }
    );
}
