//! Balanced cotrees `T(a_1,...,a_r | b_1,...,b_r)` and the two
//! borderenergetic families built from them.

use super::{Cotree, CotreeError, InteriorKind, RawTree};
use std::fmt;

/// Parameter vector of a balanced cotree: every interior node at depth `i`
/// (0-based) has `a[i]` interior children and `b[i]` leaf children.
/// Invariants: `a[r-1] = 0`, `a[i] >= 1` for `i < r-1`, `b[r-1] >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedSpec {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub root_kind: InteriorKind,
}

impl BalancedSpec {
    pub fn new(a: Vec<u64>, b: Vec<u64>, root_kind: InteriorKind) -> Result<Self, CotreeError> {
        let spec = BalancedSpec { a, b, root_kind };
        spec.validate()?;
        Ok(spec)
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn validate(&self) -> Result<(), CotreeError> {
        let r = self.a.len();
        if r == 0 || self.b.len() != r {
            return Err(CotreeError::InvalidSpec(format!(
                "need equal-length non-empty a ({}) and b ({})",
                self.a.len(),
                self.b.len()
            )));
        }
        if self.a[r - 1] != 0 {
            return Err(CotreeError::InvalidSpec(format!(
                "a_r must be 0, got {}",
                self.a[r - 1]
            )));
        }
        if self.a[..r - 1].iter().any(|&x| x == 0) {
            return Err(CotreeError::InvalidSpec(
                "a_1..a_{r-1} must be positive".into(),
            ));
        }
        if self.b[r - 1] < 2 {
            return Err(CotreeError::InvalidSpec(format!(
                "b_r must be at least 2, got {}",
                self.b[r - 1]
            )));
        }
        Ok(())
    }

    /// Regular: leaves only at the deepest level.
    pub fn regular(&self) -> bool {
        let r = self.r();
        self.b[..r - 1].iter().all(|&x| x == 0)
    }

    /// The non-regular pattern: with 1-based level index `i < r`,
    /// `b_i = 0` when `i` and `r` have different parity and `b_i >= b_r`
    /// when they share parity.
    pub fn nonregular_admissible(&self) -> bool {
        let r = self.r();
        let b_r = self.b[r - 1];
        for i in 1..r {
            let b_i = self.b[i - 1];
            if i % 2 == r % 2 {
                if b_i < b_r {
                    return false;
                }
            } else if b_i != 0 {
                return false;
            }
        }
        true
    }

    /// Total leaf count: sum over levels of `a_1...a_{i-1} * b_i`.
    pub fn n_leaves(&self) -> u64 {
        let mut prefix = 1u64;
        let mut n = 0u64;
        for i in 0..self.r() {
            n += prefix * self.b[i];
            prefix *= self.a[i];
        }
        n
    }

    /// Kind of the interior nodes at 0-based depth `d`.
    pub fn kind_at_depth(&self, d: usize) -> InteriorKind {
        if d % 2 == 0 {
            self.root_kind
        } else {
            self.root_kind.flip()
        }
    }

    /// Kind of the deepest interior level (depth r-1).
    pub fn deepest_kind(&self) -> InteriorKind {
        self.kind_at_depth(self.r() - 1)
    }

    /// Parses `T(a1,...,ar|b1,...,br)` with an optional `@U`/`@J` root-kind
    /// suffix (default `@J`).
    pub fn parse(text: &str) -> Result<Self, CotreeError> {
        let text = text.trim();
        let bad = |msg: &str| CotreeError::InvalidSpec(format!("{msg} in `{text}`"));
        let (body, root_kind) = match text.rsplit_once('@') {
            Some((body, "U")) => (body, InteriorKind::Union),
            Some((body, "J")) => (body, InteriorKind::Join),
            Some((_, other)) => {
                return Err(bad(&format!("unknown root kind `@{other}`")));
            }
            None => (text, InteriorKind::Join),
        };
        let body = body.trim();
        let inner = body
            .strip_prefix('T')
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('('))
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("expected T(...|...)"))?;
        let (a_str, b_str) = inner.split_once('|').ok_or_else(|| bad("missing `|`"))?;
        let parse_list = |s: &str| -> Result<Vec<u64>, CotreeError> {
            s.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| bad("bad integer")))
                .collect()
        };
        Self::new(parse_list(a_str)?, parse_list(b_str)?, root_kind)
    }
}

impl fmt::Display for BalancedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let suffix = match self.root_kind {
            InteriorKind::Union => "@U",
            InteriorKind::Join => "@J",
        };
        write!(f, "T({}|{}){}", list(&self.a), list(&self.b), suffix)
    }
}

/// Builds the balanced cotree described by `spec` (normalized, so levels
/// with `a_i = 1, b_i = 0` are spliced out of the final tree).
pub fn build_balanced(spec: &BalancedSpec) -> Result<Cotree, CotreeError> {
    spec.validate()?;
    fn level(spec: &BalancedSpec, d: usize) -> RawTree {
        let mut children = Vec::new();
        for _ in 0..spec.b[d] {
            children.push(RawTree::Leaf(None));
        }
        for _ in 0..spec.a[d] {
            children.push(level(spec, d + 1));
        }
        RawTree::Interior(spec.kind_at_depth(d), children)
    }
    Ok(Cotree::from_raw(level(spec, 0)))
}

/// The family `K_a joined with (a-1)(b-1) disjoint copies of K_b`, i.e. the
/// balanced cotree `T(1,(a-1)(b-1),0 | a,0,b)` with a join root;
/// `n = a + b(a-1)(b-1)`. Requires `a >= b >= 2`.
pub fn build_family_kab(a: u64, b: u64) -> Result<Cotree, CotreeError> {
    if b < 2 || a < b {
        return Err(CotreeError::InvalidFamily(format!(
            "kab family needs a >= b >= 2, got a={a}, b={b}"
        )));
    }
    let spec = BalancedSpec::new(
        vec![1, (a - 1) * (b - 1), 0],
        vec![a, 0, b],
        InteriorKind::Join,
    )?;
    build_balanced(&spec)
}

/// The family `(p+1)K_2 joined with (p+1)K_2`, i.e. the regular balanced
/// cotree `T(2,p+1,0 | 0,0,2)` with a join root; `n = 4p+4`. Requires `p >= 1`.
pub fn build_family_pk2(p: u64) -> Result<Cotree, CotreeError> {
    if p < 1 {
        return Err(CotreeError::InvalidFamily(format!(
            "pk2 family needs p >= 1, got p={p}"
        )));
    }
    let spec = BalancedSpec::new(vec![2, p + 1, 0], vec![0, 0, 2], InteriorKind::Join)?;
    build_balanced(&spec)
}
