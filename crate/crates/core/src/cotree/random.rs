//! Seeded random cotree generation for test corpora.

use super::{Cotree, InteriorKind, RawTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Branching distribution: each interior node gets `2 + Geometric(p)`
/// children (truncated to the available leaves).
#[derive(Debug, Clone, Copy)]
pub struct RandomShape {
    pub geometric_p: f64,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape { geometric_p: 0.45 }
    }
}

/// Deterministic random minimal cotree with exactly `n_leaves` leaves.
///
/// # Panics
/// Panics if `n_leaves` is zero.
pub fn random_cotree(n_leaves: usize, seed: u64, shape: &RandomShape) -> Cotree {
    assert!(n_leaves >= 1, "cotree needs at least one leaf");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n_leaves == 1 {
        return Cotree::leaf();
    }
    let root_kind = if rng.gen::<bool>() {
        InteriorKind::Join
    } else {
        InteriorKind::Union
    };
    let raw = gen_subtree(n_leaves, root_kind, shape, &mut rng);
    Cotree::from_raw(raw)
}

fn gen_subtree(n: usize, kind: InteriorKind, shape: &RandomShape, rng: &mut ChaCha8Rng) -> RawTree {
    debug_assert!(n >= 2);
    let k = draw_branching(n, shape, rng);
    let parts = split(n, k, rng);
    let children = parts
        .into_iter()
        .map(|m| {
            if m == 1 {
                RawTree::Leaf(None)
            } else {
                gen_subtree(m, kind.flip(), shape, rng)
            }
        })
        .collect();
    RawTree::Interior(kind, children)
}

/// `2 + Geometric(p)` truncated to `n`.
fn draw_branching(n: usize, shape: &RandomShape, rng: &mut ChaCha8Rng) -> usize {
    let mut k = 2usize;
    while k < n && rng.gen::<f64>() > shape.geometric_p {
        k += 1;
    }
    k.min(n)
}

/// Random composition of `n` into `k` positive parts.
fn split(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    // choose k-1 distinct cut points in 1..n
    let mut cuts: Vec<usize> = Vec::with_capacity(k - 1);
    while cuts.len() < k - 1 {
        let c = rng.gen_range(1..n);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort();
    let mut parts = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts {
        parts.push(c - prev);
        prev = c;
    }
    parts.push(n - prev);
    parts
}
