//! Desk-scale ground truth, independent of the cotree algorithm: dense
//! adjacency matrices, a rotation-based float eigensolver, and exact rank /
//! inertia of shifted matrices over the rationals.
//!
//! The exact routines clear denominators and run fraction-free elimination
//! over integers, on an i128 fast path with an arbitrary-precision fallback
//! when intermediate minors overflow.

use crate::cotree::Graph;
use crate::diagonalize::Inertia;
use crate::rational::Rational;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

pub const ADJACENCY_GUARD: usize = 4096;
pub const FLOAT_EIGEN_GUARD: usize = 512;
pub const EXACT_GUARD: usize = 256;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("matrix dimension {0} exceeds guard {1}")]
    OverGuard(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Dense matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zero(n: usize) -> DenseMatrix {
        DenseMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Symmetric 0/1 adjacency matrix with zero diagonal.
pub fn adjacency(g: &Graph) -> Result<DenseMatrix, OracleError> {
    if g.n() > ADJACENCY_GUARD {
        return Err(OracleError::OverGuard(g.n(), ADJACENCY_GUARD));
    }
    let mut m = DenseMatrix::zero(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, Rational::one());
        m.set(v, u, Rational::one());
    }
    Ok(m)
}

/// All eigenvalues in ascending order via cyclic Jacobi rotations; the
/// off-diagonal norm is driven below `1e-12` times the matrix norm.
pub fn eigenvalues_float(m: &DenseMatrix) -> Result<Vec<f64>, OracleError> {
    if m.n() > FLOAT_EIGEN_GUARD {
        return Err(OracleError::OverGuard(m.n(), FLOAT_EIGEN_GUARD));
    }
    if !m.is_symmetric() {
        return Err(OracleError::NotSymmetric);
    }
    let n = m.n();
    let to_f64 = |r: &Rational| -> f64 {
        let num: f64 = r.numer().to_string().parse().unwrap();
        let den: f64 = r.denom().to_string().parse().unwrap();
        num / den
    };
    let mut a: Vec<f64> = m.entries.iter().map(to_f64).collect();
    let idx = |i: usize, j: usize| i * n + j;
    let norm: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 || n < 2 {
        let mut diag: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
        diag.sort_by(|x, y| x.partial_cmp(y).unwrap());
        return Ok(diag);
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[idx(i, j)] * a[idx(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-12 * norm {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut diag: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    diag.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(diag)
}

/// Clears denominators of `m - shift*I` (for rank) or `m + shift*I` (for
/// inertia), returning an integer matrix with the same rank and inertia.
fn integer_shifted(m: &DenseMatrix, shift: &Rational, negate_shift: bool) -> Vec<BigInt> {
    let n = m.n();
    let mut denom = shift.denom().clone();
    for e in &m.entries {
        denom = denom.lcm(e.denom());
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = m.get(i, j).clone();
            if i == j {
                if negate_shift {
                    v -= shift;
                } else {
                    v += shift;
                }
            }
            out.push(v.numer() * (&denom / v.denom()));
        }
    }
    out
}

fn to_i128_matrix(ints: &[BigInt]) -> Option<Vec<i128>> {
    ints.iter().map(|v| i128::try_from(v).ok()).collect()
}

/// Rank of `m - shift*I` over the rationals, exact.
///
/// # Panics
/// Panics if `m.n()` exceeds the desk-scale guard.
pub fn rank_exact(m: &DenseMatrix, shift: &Rational) -> usize {
    assert!(m.n() <= EXACT_GUARD, "rank_exact guard exceeded");
    let ints = integer_shifted(m, shift, true);
    if m.is_symmetric() {
        if let Some(small) = to_i128_matrix(&ints) {
            if let Some((rank, _)) = symmetric_reduce(small, m.n()) {
                return rank;
            }
        }
        let (rank, _) = symmetric_reduce(ints, m.n()).expect("bigint elimination cannot overflow");
        return rank;
    }
    if let Some(small) = to_i128_matrix(&ints) {
        if let Some(rank) = bareiss_rank(small, m.n()) {
            return rank;
        }
    }
    bareiss_rank(ints, m.n()).expect("bigint elimination cannot overflow")
}

/// Inertia of `m + shift*I`, exact; `m` must be symmetric. Zero diagonals
/// are handled with 2x2 off-diagonal pivot blocks.
///
/// # Panics
/// Panics if `m.n()` exceeds the desk-scale guard or `m` is not symmetric.
pub fn inertia_exact(m: &DenseMatrix, shift: &Rational) -> Inertia {
    assert!(m.n() <= EXACT_GUARD, "inertia_exact guard exceeded");
    assert!(m.is_symmetric(), "inertia needs a symmetric matrix");
    let ints = integer_shifted(m, shift, false);
    if let Some(small) = to_i128_matrix(&ints) {
        if let Some((_, inertia)) = symmetric_reduce(small, m.n()) {
            return inertia;
        }
    }
    let (_, inertia) = symmetric_reduce(ints, m.n()).expect("bigint elimination cannot overflow");
    inertia
}

/// Elimination element: checked ring ops so the i128 path can bail out to
/// arbitrary precision on overflow. Divisions are exact by construction.
trait Elim: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sign(&self) -> Ordering;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Elim for i128 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sign(&self) -> Ordering {
        self.cmp(&0)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        debug_assert_eq!(self % rhs, 0, "inexact division in elimination");
        self.checked_div(*rhs)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Elim for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sign(&self) -> Ordering {
        if Zero::is_zero(self) {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact division");
        Some(self / rhs)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Fraction-free Gaussian elimination (Bareiss) rank of an integer matrix;
/// works for non-symmetric inputs. Returns `None` on overflow.
fn bareiss_rank<T: Elim>(mut a: Vec<T>, n: usize) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut prev: Option<T> = None;
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..n {
        let pivot = (row..n).find(|&r| !a[idx(r, col)].is_zero());
        let Some(pr) = pivot else { continue };
        if pr != row {
            for c in 0..n {
                a.swap(idx(pr, c), idx(row, c));
            }
        }
        for r in row + 1..n {
            for c in col + 1..n {
                let num = a[idx(row, col)]
                    .mul(&a[idx(r, c)])?
                    .sub(&a[idx(r, col)].mul(&a[idx(row, c)])?)?;
                a[idx(r, c)] = match &prev {
                    Some(p) => num.div_exact(p)?,
                    None => num,
                };
            }
        }
        for r in row + 1..n {
            let zero = a[idx(r, col)].sub(&a[idx(r, col)])?;
            a[idx(r, col)] = zero;
        }
        prev = Some(a[idx(row, col)].clone());
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    Some(rank)
}

/// Fraction-free symmetric elimination of a symmetric integer matrix,
/// returning rank and inertia together.
///
/// Entries after pivoting out index set `P` are the bordered minors
/// `det(M[P+r, P+s])`; `prev` holds `det(M[P, P])`. A 1x1 diagonal pivot
/// `d` contributes `sign(d * prev)` to the inertia and updates by the
/// Bareiss rule. When the whole active diagonal is zero, a 2x2 block
/// `[[0, c], [c, 0]]` is pivoted out: by Sylvester's determinant identity
/// the update is `(c*(E_ri*E_js + E_rj*E_is) - c^2*E_rs) / prev^2` with the
/// new `prev = -c^2 / prev`, and the block always contributes one positive
/// and one negative direction.
fn symmetric_reduce<T: Elim>(mut e: Vec<T>, n: usize) -> Option<(usize, Inertia)> {
    let idx = |i: usize, j: usize| i * n + j;
    let mut active: Vec<usize> = (0..n).collect();
    let mut prev = T::one();
    let mut rank = 0usize;
    let mut inertia = Inertia {
        k_plus: 0,
        k_zero: 0,
        k_minus: 0,
    };
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !e[idx(i, i)].is_zero()) {
            let i = active.remove(pos);
            let d = e[idx(i, i)].clone();
            match (d.sign(), prev.sign()) {
                (Ordering::Greater, Ordering::Greater) | (Ordering::Less, Ordering::Less) => {
                    inertia.k_plus += 1
                }
                _ => inertia.k_minus += 1,
            }
            rank += 1;
            for rp in 0..active.len() {
                let r = active[rp];
                for &s in &active[rp..] {
                    let num = d
                        .mul(&e[idx(r, s)])?
                        .sub(&e[idx(r, i)].mul(&e[idx(i, s)])?)?;
                    let updated = num.div_exact(&prev)?;
                    e[idx(r, s)] = updated.clone();
                    e[idx(s, r)] = updated;
                }
            }
            prev = d;
        } else if let Some((pi, pj)) = find_offdiag(&e, n, &active) {
            let j = active.remove(pj);
            let i = active.remove(pi);
            let c = e[idx(i, j)].clone();
            inertia.k_plus += 1;
            inertia.k_minus += 1;
            rank += 2;
            let prev_sq = prev.mul(&prev)?;
            for rp in 0..active.len() {
                let r = active[rp];
                for &s in &active[rp..] {
                    let cross = e[idx(r, i)]
                        .mul(&e[idx(j, s)])?
                        .add(&e[idx(r, j)].mul(&e[idx(i, s)])?)?;
                    let num = c.mul(&cross)?.sub(&c.mul(&c)?.mul(&e[idx(r, s)])?)?;
                    let updated = num.div_exact(&prev_sq)?;
                    e[idx(r, s)] = updated.clone();
                    e[idx(s, r)] = updated;
                }
            }
            prev = c.mul(&c)?.neg()?.div_exact(&prev)?;
        } else {
            inertia.k_zero += active.len();
            break;
        }
    }
    Some((rank, inertia))
}

fn find_offdiag<T: Elim>(e: &[T], n: usize, active: &[usize]) -> Option<(usize, usize)> {
    for (pi, &i) in active.iter().enumerate() {
        for (pj, &j) in active.iter().enumerate().skip(pi + 1) {
            if !e[i * n + j].is_zero() {
                return Some((pi, pj));
            }
        }
    }
    None
}
