//! Parse a cotree expression and print its full spectrum.
//!
//! ```bash
//! cargo run --example spectrum_from_expression
//! ```

use cograph_spectra::rational::rational_from_pair;
use cograph_spectra::spectra::full_spectrum;
use cograph_spectra::parse_expression;

fn main() {
    // (2 disjoint copies of K_2) joined with 2 isolated vertices
    let expr = "2(1*1)*2";
    let tree = parse_expression(expr).expect("valid expression");
    println!("expression: {expr}");
    println!("n = {}", tree.n_leaves());

    let eps = rational_from_pair(1, 1 << 20);
    let report = full_spectrum(&tree, &eps).expect("spectrum");
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
}
