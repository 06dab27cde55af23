//! Linear-time eigenvalue counting at scale with the float backend.
//!
//! ```bash
//! cargo run --release --example scaling
//! ```

use std::time::Instant;

use cograph_spectra::cotree::build_family_pk2;
use cograph_spectra::diagonalize::eigen_counts_float;

fn main() {
    for n in [10_000u64, 100_000, 1_000_000] {
        let tree = build_family_pk2((n - 4) / 4).expect("buildable");
        let start = Instant::now();
        let (gt, eq, lt) = eigen_counts_float(&tree, -1.0);
        let elapsed = start.elapsed();
        println!(
            "n = {n:>9}: ({gt}, {eq}, {lt}) eigenvalues (>, =, <) -1 in {:>8.2?} ({:.0} ns/leaf)",
            elapsed,
            elapsed.as_secs_f64() * 1e9 / n as f64
        );
    }
}
