//! Seeded cross-check of the cotree diagonalization against the dense
//! oracle: inertia and multiplicity agreement at integer and random
//! rational shifts over a reproducible random-cotree corpus.

use crate::cotree::{random_cotree, Cotree, RandomShape};
use crate::diagonalize::eigen_counts;
use crate::oracle::{adjacency, inertia_exact, rank_exact};
use crate::rational::{format_rational, rational_from_i64, rational_from_pair, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_n: usize,
    /// Random rational shifts per case, in addition to every integer in
    /// `[-n, n]`.
    pub rational_shifts: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            cases: 200,
            max_n: 64,
            rational_shifts: 5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub case_index: usize,
    pub n: usize,
    pub shift: Rational,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub cases: usize,
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "cases": self.cases,
            "checks": self.checks,
            "mismatches": self.mismatches.iter().map(|m| json!({
                "case": m.case_index,
                "n": m.n,
                "shift": format_rational(&m.shift),
                "detail": m.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Reproduces the random-cotree corpus that [`run_verify`] walks, without
/// running any checks. Draws from the RNG in the same order, so the trees
/// match the ones verified under the same config.
pub fn corpus_trees(cfg: &VerifyConfig) -> Vec<Cotree> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let shape = RandomShape::default();
    let mut trees = Vec::with_capacity(cfg.cases);
    for _ in 0..cfg.cases {
        let n = rng.gen_range(1..=cfg.max_n);
        let tree_seed = rng.gen::<u64>();
        trees.push(random_cotree(n, tree_seed, &shape));
        for _ in 0..cfg.rational_shifts {
            let ni = n as i64;
            let _ = rng.gen_range(-2 * ni..=2 * ni);
            let _ = rng.gen_range(2..=9);
        }
    }
    trees
}

/// Runs the corpus: for each seeded random cotree, compares
/// `eigen_counts` against the oracle's exact inertia and the multiplicity
/// against the oracle's exact rank deficiency, at every integer shift in
/// `[-n, n]` plus random rational shifts.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let shape = RandomShape::default();
    let mut checks = 0usize;
    let mut mismatches = Vec::new();
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=cfg.max_n);
        let tree_seed = rng.gen::<u64>();
        let tree = random_cotree(n, tree_seed, &shape);
        let matrix = adjacency(&tree.to_graph()).expect("desk-scale graph");
        let ni = n as i64;
        let mut shifts: Vec<Rational> = (-ni..=ni).map(rational_from_i64).collect();
        for _ in 0..cfg.rational_shifts {
            let num = rng.gen_range(-2 * ni..=2 * ni);
            let den = rng.gen_range(2..=9);
            shifts.push(rational_from_pair(num, den));
        }
        for x in shifts {
            checks += 1;
            let counts = eigen_counts(&tree, &x);
            let oracle_inertia = inertia_exact(&matrix, &-&x);
            if (counts.greater, counts.equal, counts.less)
                != (
                    oracle_inertia.k_plus,
                    oracle_inertia.k_zero,
                    oracle_inertia.k_minus,
                )
            {
                mismatches.push(Mismatch {
                    case_index: case,
                    n,
                    shift: x.clone(),
                    detail: format!(
                        "inertia: algorithm ({}, {}, {}) vs oracle ({}, {}, {})",
                        counts.greater,
                        counts.equal,
                        counts.less,
                        oracle_inertia.k_plus,
                        oracle_inertia.k_zero,
                        oracle_inertia.k_minus
                    ),
                });
                continue;
            }
            let rank = rank_exact(&matrix, &x);
            if counts.equal != n - rank {
                mismatches.push(Mismatch {
                    case_index: case,
                    n,
                    shift: x,
                    detail: format!(
                        "multiplicity: algorithm {} vs rank deficiency {}",
                        counts.equal,
                        n - rank
                    ),
                });
            }
        }
    }
    VerifyReport {
        cases: cfg.cases,
        checks,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_passes() {
        let report = run_verify(&VerifyConfig {
            seed: 42,
            cases: 12,
            max_n: 20,
            rational_shifts: 3,
        });
        assert!(report.passed(), "{:?}", report.mismatches);
        assert_eq!(report.cases, 12);
        assert!(report.checks > 12);
    }

    #[test]
    fn json_shape() {
        let report = run_verify(&VerifyConfig {
            seed: 7,
            cases: 2,
            max_n: 8,
            rational_shifts: 1,
        });
        let v = report.to_json();
        assert_eq!(v["cases"], 2);
        assert!(v["mismatches"].as_array().unwrap().is_empty());
    }
}
