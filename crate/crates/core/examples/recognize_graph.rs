//! Cograph recognition: decompose an edge list into a cotree, or produce
//! an induced-P4 witness when the graph is not a cograph.
//!
//! ```bash
//! cargo run --example recognize_graph
//! ```

use cograph_spectra::cotree::{from_graph, is_valid_p4_witness, Graph};

fn main() {
    // C_4 is a cograph: complement of 2K_2
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    match from_graph(&c4) {
        Ok(tree) => println!("C_4 is a cograph: {}", tree.to_expression()),
        Err(w) => println!("unexpected witness {:?}", w.witness),
    }

    // P_4 itself is the smallest non-cograph
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    match from_graph(&p4) {
        Ok(_) => println!("unexpected: P_4 accepted"),
        Err(w) => println!(
            "P_4 rejected, witness {:?}, valid: {}",
            w.witness,
            is_valid_p4_witness(&p4, &w.witness)
        ),
    }

    // C_5 contains an induced P4
    let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    match from_graph(&c5) {
        Ok(_) => println!("unexpected: C_5 accepted"),
        Err(w) => println!(
            "C_5 rejected, witness {:?}, valid: {}",
            w.witness,
            is_valid_p4_witness(&c5, &w.witness)
        ),
    }
}
