//! Two integral cograph families whose energy equals 2(n - 1), the energy
//! of the complete graph K_n.
//!
//! ```bash
//! cargo run --example borderenergetic_families
//! ```

use cograph_spectra::cotree::{build_family_kab, build_family_pk2};
use cograph_spectra::rational::format_rational;
use cograph_spectra::spectra::is_borderenergetic;

fn main() {
    println!("K_a joined with (a-1)(b-1) copies of K_b:");
    for (a, b) in [(2, 2), (3, 2), (3, 3), (4, 3)] {
        let tree = build_family_kab(a, b).expect("buildable");
        let n = tree.n_leaves();
        let (verdict, energy, cospectral) = is_borderenergetic(&tree).expect("integral");
        println!(
            "  kab({a},{b}): n = {n:2}, energy = {} = 2(n-1), borderenergetic: {verdict}, cospectral with K_n: {cospectral}",
            format_rational(energy.exact.as_ref().unwrap()),
        );
    }

    println!("(p+1)K_2 joined with (p+1)K_2:");
    for p in 1..=4u64 {
        let tree = build_family_pk2(p).expect("buildable");
        let n = tree.n_leaves();
        let (verdict, energy, _) = is_borderenergetic(&tree).expect("integral");
        println!(
            "  pk2({p}):    n = {n:2}, energy = {} = 8p+6,    borderenergetic: {verdict}",
            format_rational(energy.exact.as_ref().unwrap()),
        );
    }
}
