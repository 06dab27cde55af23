//! Counting eigenvalues in intervals via Sylvester's law of inertia,
//! including the interval (-1, 0) that no cograph eigenvalue can enter.
//!
//! ```bash
//! cargo run --example interval_counts
//! ```

use cograph_spectra::cotree::{random_cotree, RandomShape};
use cograph_spectra::diagonalize::{count_in_interval, eigen_counts};
use cograph_spectra::rational::{rational_from_i64, rational_from_pair};

fn main() {
    let tree = random_cotree(40, 7, &RandomShape::default());
    println!("random cotree, n = {}", tree.n_leaves());

    let c = eigen_counts(&tree, &rational_from_i64(0));
    println!(
        "inertia at 0: {} positive, {} zero, {} negative eigenvalues",
        c.greater, c.equal, c.less
    );

    for (lo, hi) in [(-3i64, -1), (-1, 0), (0, 2), (2, 40)] {
        let count = count_in_interval(
            &tree,
            &rational_from_i64(lo),
            &rational_from_i64(hi),
            false,
            false,
        )
        .unwrap();
        println!("eigenvalues in ({lo}, {hi}): {count}");
    }

    // rational endpoints work too
    let count = count_in_interval(
        &tree,
        &rational_from_pair(-1, 2),
        &rational_from_pair(1, 2),
        true,
        true,
    )
    .unwrap();
    println!("eigenvalues in [-1/2, 1/2]: {count}");
}
