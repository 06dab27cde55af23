//! Closed-form multiplicities of a balanced cotree, checked against the
//! linear-time diagonalization.
//!
//! ```bash
//! cargo run --example balanced_closed_forms
//! ```

use cograph_spectra::cotree::{build_balanced, BalancedSpec};
use cograph_spectra::diagonalize::multiplicity;
use cograph_spectra::rational::{format_rational, rational_from_i64};
use cograph_spectra::spectra::{
    count_excluding_special, mult_minus_one, special_eigenvalue_regular,
};

fn main() {
    let spec = BalancedSpec::parse("T(3,2,0|0,0,2)@J").expect("valid spec");
    let tree = build_balanced(&spec).expect("buildable");
    println!("spec: T(3,2,0|0,0,2)@J, n = {}", tree.n_leaves());

    // dominant repeated eigenvalue -1: a_1 a_2 (b_3 - 1) copies
    let formula = mult_minus_one(&tree);
    let direct = multiplicity(&tree, &rational_from_i64(-1));
    println!("m(-1): closed form {formula}, diagonalization {direct}");

    // second repeated eigenvalue b_3 - 1 = 1: a_1 (a_2 - 1) copies
    let (lambda, mult) = special_eigenvalue_regular(&spec).expect("regular");
    let direct = multiplicity(&tree, &lambda);
    println!(
        "m({}): closed form {mult}, diagonalization {direct}",
        format_rational(&lambda)
    );

    // eigenvalues other than -1, counted with multiplicity: a_1 a_2
    let others = count_excluding_special(&spec).expect("regular");
    println!(
        "eigenvalues other than -1: {} = n - m(-1) = {}",
        others,
        tree.n_leaves() - formula
    );
}
