//! Congruent diagonalization of `A + xI` performed directly on the cotree,
//! with inertia extraction and eigenvalue counting via Sylvester's law.
//!
//! Works over any [`Scalar`]; the exact rational backend is authoritative,
//! the float backend exists for the performance benchmark only.

use crate::cotree::{Cotree, InteriorKind};
use crate::rational::{sign_of, Rational};
use num::{One, Zero};
use std::cmp::{Ordering, Reverse};
use std::collections::VecDeque;
use thiserror::Error;

/// Scalar field for the diagonalization engine.
pub trait Scalar: Clone + PartialEq {
    fn from_rational(x: &Rational) -> Self;
    fn from_usize(v: usize) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Sign relative to zero; inertia is read off this.
    fn sign(&self) -> Ordering;
}

impl Scalar for Rational {
    fn from_rational(x: &Rational) -> Self {
        x.clone()
    }
    fn from_usize(v: usize) -> Self {
        Rational::from(num::BigInt::from(v))
    }
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> Ordering {
        sign_of(self)
    }
}

/// Zero classification threshold for the float backend. Never used for
/// multiplicity claims; timing only.
const FLOAT_EPS: f64 = 1e-12;

impl Scalar for f64 {
    fn from_rational(x: &Rational) -> Self {
        let num: f64 = x.numer().to_string().parse().unwrap_or(f64::NAN);
        let den: f64 = x.denom().to_string().parse().unwrap_or(f64::NAN);
        num / den
    }
    fn from_usize(v: usize) -> Self {
        v as f64
    }
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> Ordering {
        if self.abs() <= FLOAT_EPS {
            Ordering::Equal
        } else if *self > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Inertia triple of a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub k_plus: usize,
    pub k_zero: usize,
    pub k_minus: usize,
}

impl Inertia {
    pub fn of_diagonal<S: Scalar>(diag: &[S]) -> Inertia {
        let mut inertia = Inertia {
            k_plus: 0,
            k_zero: 0,
            k_minus: 0,
        };
        for v in diag {
            match v.sign() {
                Ordering::Greater => inertia.k_plus += 1,
                Ordering::Equal => inertia.k_zero += 1,
                Ordering::Less => inertia.k_minus += 1,
            }
        }
        inertia
    }

    pub fn total(&self) -> usize {
        self.k_plus + self.k_zero + self.k_minus
    }
}

/// Result of diagonalizing `A + xI`.
#[derive(Debug, Clone)]
pub struct DiagnosisResult {
    pub diagonal: Vec<Rational>,
    pub inertia: Inertia,
    pub x: Rational,
}

/// Counts of eigenvalues relative to a point.
#[derive(Debug, Clone)]
pub struct EigenCounts {
    pub greater: usize,
    pub equal: usize,
    pub less: usize,
    pub at: Rational,
}

/// Outcome of processing one (co)duplicate pair.
#[derive(Debug, Clone, PartialEq)]
pub enum PairStep<S> {
    /// One vertex removed with a permanent value; the other stays.
    OneRemoved { remaining: S, removed: S },
    /// Both vertices removed with permanent values.
    TwoRemoved { removed: [S; 2] },
}

/// One iteration of the pairwise reduction: given the parent kind and the
/// pair's diagonal values, applies the matching subcase (join: 1a/1b/1c,
/// union: 2a/2b/2c).
pub fn reduce_pair<S: Scalar>(kind: InteriorKind, alpha: &S, beta: &S) -> PairStep<S> {
    let sum = alpha.add(beta);
    match kind {
        InteriorKind::Join => {
            let two = S::one().add(&S::one());
            if sum.sub(&two).sign() != Ordering::Equal {
                // subcase 1a
                let removed = sum.sub(&two);
                let remaining = alpha.mul(beta).sub(&S::one()).div(&removed);
                PairStep::OneRemoved { remaining, removed }
            } else if *beta == S::one() {
                // subcase 1b
                PairStep::OneRemoved {
                    remaining: S::one(),
                    removed: S::zero(),
                }
            } else {
                // subcase 1c
                let d = S::one().sub(beta);
                PairStep::TwoRemoved {
                    removed: [S::one(), d.mul(&d).neg()],
                }
            }
        }
        InteriorKind::Union => {
            if sum.sign() != Ordering::Equal {
                // subcase 2a
                let remaining = alpha.mul(beta).div(&sum);
                PairStep::OneRemoved {
                    remaining,
                    removed: sum,
                }
            } else if beta.sign() == Ordering::Equal {
                // subcase 2b
                PairStep::OneRemoved {
                    remaining: S::zero(),
                    removed: S::zero(),
                }
            } else {
                // subcase 2c
                PairStep::TwoRemoved {
                    removed: [beta.clone(), beta.neg()],
                }
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BatchError {
    #[error("join batch requires y != 1")]
    JoinRequiresNotOne,
    #[error("union batch requires y != 0")]
    UnionRequiresNotZero,
}

/// Closed-form reduction of `m` equal sibling values `y` under one parent:
/// returns the remaining value and the `m - 1` removed values in removal
/// order. Join requires `y != 1`, union requires `y != 0` (for `m >= 2`);
/// callers fall back to [`reduce_pair`] otherwise.
pub fn batch_reduce_equal_children<S: Scalar>(
    y: &S,
    m: usize,
    kind: InteriorKind,
) -> Result<(S, Vec<S>), BatchError> {
    assert!(m >= 1, "batch needs at least one value");
    if m == 1 {
        return Ok((y.clone(), Vec::new()));
    }
    match kind {
        InteriorKind::Join => {
            if *y == S::one() {
                return Err(BatchError::JoinRequiresNotOne);
            }
            let y_minus_one = y.sub(&S::one());
            let removed = (1..m)
                .map(|j| {
                    let j_s = S::from_usize(j);
                    let j1_s = S::from_usize(j + 1);
                    j1_s.div(&j_s).mul(&y_minus_one)
                })
                .collect();
            let remaining = y.add(&S::from_usize(m - 1)).div(&S::from_usize(m));
            Ok((remaining, removed))
        }
        InteriorKind::Union => {
            if y.sign() == Ordering::Equal {
                return Err(BatchError::UnionRequiresNotZero);
            }
            let removed = (1..m)
                .map(|j| {
                    let j_s = S::from_usize(j);
                    let j1_s = S::from_usize(j + 1);
                    j1_s.div(&j_s).mul(y)
                })
                .collect();
            let remaining = y.div(&S::from_usize(m));
            Ok((remaining, removed))
        }
    }
}

fn batch_applicable<S: Scalar>(kind: InteriorKind, y: &S) -> bool {
    match kind {
        InteriorKind::Join => *y != S::one(),
        InteriorKind::Union => y.sign() != Ordering::Equal,
    }
}

/// Reduces a node's value queue to at most one promoted value, appending
/// permanent values to `out`. Equal prefix runs take the closed-form fast
/// path; everything else is pairwise.
fn reduce_node<S: Scalar>(kind: InteriorKind, queue: &mut VecDeque<S>, out: &mut Vec<S>) -> Option<S> {
    while queue.len() >= 2 {
        let run = {
            let first = &queue[0];
            let mut run = 1;
            while run < queue.len() && queue[run] == *first {
                run += 1;
            }
            run
        };
        if run >= 2 && batch_applicable(kind, &queue[0]) {
            let y = queue.pop_front().unwrap();
            for _ in 1..run {
                queue.pop_front();
            }
            let (remaining, removed) =
                batch_reduce_equal_children(&y, run, kind).expect("precondition checked");
            out.extend(removed);
            queue.push_front(remaining);
            if queue.len() == 1 {
                break;
            }
            continue;
        }
        let alpha = queue.pop_front().unwrap();
        let beta = queue.pop_front().unwrap();
        match reduce_pair(kind, &alpha, &beta) {
            PairStep::OneRemoved { remaining, removed } => {
                out.push(removed);
                queue.push_front(remaining);
            }
            PairStep::TwoRemoved { removed } => {
                let [a, b] = removed;
                out.push(a);
                out.push(b);
            }
        }
    }
    queue.pop_front()
}

/// Runs the diagonalization over any scalar backend, returning the diagonal
/// multiset (size `n_leaves`) of a matrix congruent to `A + xI`.
pub fn diagonalize_values<S: Scalar>(tree: &Cotree, x: &S) -> Vec<S> {
    let n_nodes = tree.n_nodes();
    let mut out: Vec<S> = Vec::with_capacity(tree.n_leaves());
    if tree.is_leaf(tree.root()) {
        out.push(x.clone());
        return out;
    }
    let mut queues: Vec<VecDeque<S>> = vec![VecDeque::new(); n_nodes];
    for id in tree.node_ids() {
        if !tree.is_leaf(id) {
            let leaf_children = tree
                .children(id)
                .iter()
                .filter(|&&c| tree.is_leaf(c))
                .count();
            for _ in 0..leaf_children {
                queues[id].push_back(x.clone());
            }
        }
    }
    let depths = tree.depths();
    let mut interior: Vec<usize> = tree.node_ids().filter(|&id| !tree.is_leaf(id)).collect();
    // deepest first; ties in arena order
    interior.sort_by_key(|&id| Reverse(depths[id]));
    for id in interior {
        let kind = tree.interior_kind(id).expect("interior node");
        let mut queue = std::mem::take(&mut queues[id]);
        let promoted = reduce_node(kind, &mut queue, &mut out);
        match (promoted, tree.node(id).parent) {
            (Some(v), Some(parent)) => queues[parent].push_back(v),
            (Some(v), None) => out.push(v),
            // children exhausted by a two-removal subcase: nothing moves up
            (None, _) => {}
        }
    }
    debug_assert_eq!(out.len(), tree.n_leaves());
    out
}

/// Diagonal matrix congruent to `A + xI`, exact.
pub fn diagonalize(tree: &Cotree, x: &Rational) -> DiagnosisResult {
    let diagonal = diagonalize_values(tree, x);
    let inertia = Inertia::of_diagonal(&diagonal);
    DiagnosisResult {
        diagonal,
        inertia,
        x: x.clone(),
    }
}

/// Counts of eigenvalues of the cograph greater than / equal to / less than
/// `x`: diagonalize at `-x` and read the inertia.
pub fn eigen_counts(tree: &Cotree, x: &Rational) -> EigenCounts {
    let result = diagonalize(tree, &(-x));
    EigenCounts {
        greater: result.inertia.k_plus,
        equal: result.inertia.k_zero,
        less: result.inertia.k_minus,
        at: x.clone(),
    }
}

/// Float-backend eigenvalue counting; benchmark use only.
pub fn eigen_counts_float(tree: &Cotree, x: f64) -> (usize, usize, usize) {
    let diagonal = diagonalize_values(tree, &(-x));
    let inertia = Inertia::of_diagonal(&diagonal);
    (inertia.k_plus, inertia.k_zero, inertia.k_minus)
}

/// Multiplicity of `lambda` as an eigenvalue of the cograph.
pub fn multiplicity(tree: &Cotree, lambda: &Rational) -> usize {
    eigen_counts(tree, lambda).equal
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("interval bounds out of order: lo > hi")]
    OutOfOrder,
}

/// Number of eigenvalues in the interval from `lo` to `hi`, with each
/// endpoint included or excluded as requested.
pub fn count_in_interval(
    tree: &Cotree,
    lo: &Rational,
    hi: &Rational,
    include_lo: bool,
    include_hi: bool,
) -> Result<usize, IntervalError> {
    if lo > hi {
        return Err(IntervalError::OutOfOrder);
    }
    let at_lo = eigen_counts(tree, lo);
    let at_hi = eigen_counts(tree, hi);
    let mut count = at_lo.greater;
    if include_lo {
        count += at_lo.equal;
    }
    count -= at_hi.greater;
    if !include_hi {
        count -= at_hi.equal;
    }
    Ok(count)
}
