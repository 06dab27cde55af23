//! Closed-form multiplicity results for balanced cotrees, full-spectrum
//! extraction by inertia bisection, graph energy, and borderenergetic
//! verification for the two special families.

use crate::cotree::{BalancedSpec, Cotree, InteriorKind, NodeKind};
use crate::diagonalize::eigen_counts;
use crate::rational::{format_rational, rational_from_i64, rational_from_pair, Rational};
use num::{One, Signed, Zero};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("spec is not regular")]
    NotRegular,
    #[error("spec does not match the admissible non-regular pattern")]
    NotAdmissible,
    #[error("spec needs r >= 2, got r = {0}")]
    RankTooSmall(usize),
    #[error("lambda {0} is an excluded special value for this spec")]
    ExcludedLambda(String),
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("energy interval [{lower}, {upper}] straddles 2(n-1); tighten epsilon")]
    IndeterminateEnergy { lower: String, upper: String },
}

/// Where a spectrum entry lives: pinned exactly, or bracketed in an open
/// interval certified by inertia counts at the endpoints.
#[derive(Debug, Clone, PartialEq)]
pub enum Location {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub location: Location,
    pub mult: usize,
    pub certified: bool,
}

/// Full account of a cograph's spectrum; multiplicities sum to `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub entries: Vec<SpectrumEntry>,
    pub n: usize,
    /// Largest interval width in the report; zero when fully exact.
    pub residual_width: Rational,
}

impl SpectrumReport {
    pub fn is_exact(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e.location, Location::Exact(_)))
    }

    /// The `(value, mult)` pairs when every entry is exact.
    pub fn exact_entries(&self) -> Option<Vec<(Rational, usize)>> {
        self.entries
            .iter()
            .map(|e| match &e.location {
                Location::Exact(v) => Some((v.clone(), e.mult)),
                Location::Interval { .. } => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| match &e.location {
                Location::Exact(v) => json!({
                    "value": format_rational(v),
                    "mult": e.mult,
                    "certified": e.certified,
                }),
                Location::Interval { lo, hi } => json!({
                    "lo": format_rational(lo),
                    "hi": format_rational(hi),
                    "mult": e.mult,
                    "certified": e.certified,
                }),
            })
            .collect();
        json!({
            "n": self.n,
            "entries": entries,
            "residual_width": format_rational(&self.residual_width),
        })
    }
}

/// Energy bounds; `exact` is set iff the whole spectrum was exact.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyResult {
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
}

impl EnergyResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lower": format_rational(&self.lower),
            "upper": format_rational(&self.upper),
            "exact": self.exact.as_ref().map(format_rational),
        })
    }
}

/// Number of leaf children of a node.
fn terminal_children(tree: &Cotree, id: usize) -> usize {
    tree.children(id)
        .iter()
        .filter(|&&c| tree.is_leaf(c))
        .count()
}

/// Multiplicity of -1 by the closed form: every join node with `t >= 1`
/// leaf children contributes `t - 1`.
pub fn mult_minus_one(tree: &Cotree) -> usize {
    tree.node_ids()
        .filter(|&id| tree.kind(id) == NodeKind::Join)
        .map(|id| terminal_children(tree, id).saturating_sub(1))
        .sum()
}

/// Multiplicity of 0 by the closed form: leaf children of a union root are
/// isolated vertices and each contributes one zero; every other union node
/// with `t >= 1` leaf children contributes `t - 1`.
pub fn mult_zero(tree: &Cotree) -> usize {
    if tree.is_leaf(tree.root()) {
        return 1;
    }
    tree.node_ids()
        .filter(|&id| tree.kind(id) == NodeKind::Union)
        .map(|id| {
            let t = terminal_children(tree, id);
            if id == tree.root() {
                t
            } else {
                t.saturating_sub(1)
            }
        })
        .sum()
}

fn product(vals: &[u64]) -> u64 {
    vals.iter().product()
}

/// For a regular spec: the number of eigenvalues other than the dominant
/// repeated one (-1 when the deepest level is a join, 0 when a union),
/// namely `a_1 * ... * a_{r-1}`.
pub fn count_excluding_special(spec: &BalancedSpec) -> Result<u64, SpectraError> {
    if !spec.regular() {
        return Err(SpectraError::NotRegular);
    }
    let r = spec.r();
    Ok(product(&spec.a[..r - 1]))
}

fn special_formulas(spec: &BalancedSpec) -> Result<(Rational, u64), SpectraError> {
    let r = spec.r();
    if r < 2 {
        return Err(SpectraError::RankTooSmall(r));
    }
    let b_r = spec.b[r - 1] as i64;
    let lambda = match spec.deepest_kind() {
        InteriorKind::Join => rational_from_i64(b_r - 1),
        InteriorKind::Union => rational_from_i64(-b_r),
    };
    // A union root with r = 2 is a_1 disjoint copies of K_{b_2}; with no
    // join above them, every copy keeps its Perron value b_2 - 1. In all
    // other cases exactly one copy per depth-(r-2) node is perturbed away.
    let mult = if spec.root_kind == InteriorKind::Union && r == 2 {
        spec.a[0]
    } else {
        product(&spec.a[..r - 2]) * (spec.a[r - 2] - 1)
    };
    Ok((lambda, mult))
}

/// The second repeated eigenvalue of a regular balanced cotree: `b_r - 1`
/// when the deepest interior level is a join (multiplicity
/// `a_1 ... a_{r-2} (a_{r-1} - 1)`), `-b_r` when it is a union.
pub fn special_eigenvalue_regular(spec: &BalancedSpec) -> Result<(Rational, u64), SpectraError> {
    if !spec.regular() {
        return Err(SpectraError::NotRegular);
    }
    special_formulas(spec)
}

/// Same formulas, valid for non-regular specs matching the admissible
/// pattern (`b_i = 0` at levels of one parity, `b_i >= b_r` at the other).
pub fn special_eigenvalue_nonregular(spec: &BalancedSpec) -> Result<(Rational, u64), SpectraError> {
    if !spec.nonregular_admissible() {
        return Err(SpectraError::NotAdmissible);
    }
    special_formulas(spec)
}

/// Upper bound on `m(lambda)` for a regular spec, valid away from the two
/// special eigenvalues: `a_1 ... a_{r-2}` (empty product 1 for r = 2).
pub fn mult_upper_bound(spec: &BalancedSpec, lambda: &Rational) -> Result<u64, SpectraError> {
    if !spec.regular() {
        return Err(SpectraError::NotRegular);
    }
    let r = spec.r();
    if r < 2 {
        return Err(SpectraError::RankTooSmall(r));
    }
    let b_r = spec.b[r - 1] as i64;
    let excluded = match spec.deepest_kind() {
        InteriorKind::Join => [rational_from_i64(-1), rational_from_i64(b_r - 1)],
        InteriorKind::Union => [rational_from_i64(0), rational_from_i64(-b_r)],
    };
    if excluded.contains(lambda) {
        return Err(SpectraError::ExcludedLambda(format_rational(lambda)));
    }
    Ok(product(&spec.a[..r - 2]))
}

/// Open bracket known to hold `count` eigenvalues, with `above` of them
/// strictly greater than `hi`.
struct Bracket {
    lo: Rational,
    hi: Rational,
    count: usize,
    above: usize,
}

/// Every eigenvalue, located exactly or bracketed to width `epsilon`.
///
/// Integer candidates in `[-(n-1), n-1]` are probed first; an eigenvalue of
/// an integer symmetric matrix is either an integer or irrational, so the
/// remaining ones are bisected inside integer gaps at dyadic midpoints,
/// where exact probes always report zero multiplicity.
pub fn full_spectrum(tree: &Cotree, epsilon: &Rational) -> Result<SpectrumReport, SpectraError> {
    if !epsilon.is_positive() {
        return Err(SpectraError::NonPositiveEpsilon);
    }
    let n = tree.n_leaves();
    let bound = n as i64 - 1;
    let mut exact: Vec<(Rational, usize)> = Vec::new();
    let mut brackets: Vec<Bracket> = Vec::new();
    // counts at each integer from bound down to -bound
    let mut prev_greater: Option<usize> = None;
    for k in (-bound..=bound).rev() {
        let c = eigen_counts(tree, &rational_from_i64(k));
        if c.equal > 0 {
            exact.push((rational_from_i64(k), c.equal));
        }
        if let Some(g_hi) = prev_greater {
            // strictly between k and k+1
            let inside = c.greater - g_hi - exact_at(&exact, k + 1);
            if inside > 0 {
                brackets.push(Bracket {
                    lo: rational_from_i64(k),
                    hi: rational_from_i64(k + 1),
                    count: inside,
                    above: g_hi,
                });
            }
        }
        prev_greater = Some(c.greater);
    }
    // bisect brackets down to the requested width
    let mut done: Vec<Bracket> = Vec::new();
    let half = rational_from_pair(1, 2);
    while let Some(b) = brackets.pop() {
        if &b.hi - &b.lo <= *epsilon {
            done.push(b);
            continue;
        }
        let mid = (&b.lo + &b.hi) * &half;
        let c = eigen_counts(tree, &mid);
        debug_assert_eq!(c.equal, 0, "dyadic non-integer probe hit an eigenvalue");
        let right = c.greater - b.above;
        let left = b.count - right;
        if right > 0 {
            brackets.push(Bracket {
                lo: mid.clone(),
                hi: b.hi.clone(),
                count: right,
                above: b.above,
            });
        }
        if left > 0 {
            brackets.push(Bracket {
                lo: b.lo,
                hi: mid,
                count: left,
                above: b.above + right,
            });
        }
    }
    let mut entries: Vec<SpectrumEntry> = exact
        .into_iter()
        .map(|(v, m)| SpectrumEntry {
            location: Location::Exact(v),
            mult: m,
            certified: true,
        })
        .collect();
    let mut residual = Rational::zero();
    for b in done {
        let width = &b.hi - &b.lo;
        if width > residual {
            residual = width;
        }
        entries.push(SpectrumEntry {
            location: Location::Interval { lo: b.lo, hi: b.hi },
            mult: b.count,
            certified: true,
        });
    }
    entries.sort_by(|a, b| entry_key(a).cmp(entry_key(b)));
    let total: usize = entries.iter().map(|e| e.mult).sum();
    debug_assert_eq!(total, n);
    Ok(SpectrumReport {
        entries,
        n,
        residual_width: residual,
    })
}

fn exact_at(exact: &[(Rational, usize)], k: i64) -> usize {
    let k = rational_from_i64(k);
    exact
        .iter()
        .find(|(v, _)| *v == k)
        .map(|&(_, m)| m)
        .unwrap_or(0)
}

fn entry_key(e: &SpectrumEntry) -> &Rational {
    match &e.location {
        Location::Exact(v) => v,
        Location::Interval { lo, .. } => lo,
    }
}

/// Energy bounds from a spectrum report; exact iff the report is exact.
pub fn energy(tree: &Cotree, epsilon: &Rational) -> Result<EnergyResult, SpectraError> {
    let report = full_spectrum(tree, epsilon)?;
    Ok(energy_of_report(&report))
}

pub fn energy_of_report(report: &SpectrumReport) -> EnergyResult {
    let mut lower = Rational::zero();
    let mut upper = Rational::zero();
    let mut all_exact = true;
    for e in &report.entries {
        let m = rational_from_i64(e.mult as i64);
        match &e.location {
            Location::Exact(v) => {
                let a = v.abs() * &m;
                lower += &a;
                upper += &a;
            }
            Location::Interval { lo, hi } => {
                all_exact = false;
                // interval never straddles zero (integer gaps only)
                let (min_abs, max_abs) = if lo.is_negative() && !hi.is_positive() {
                    (hi.abs(), lo.abs())
                } else {
                    (lo.abs(), hi.abs())
                };
                lower += min_abs * &m;
                upper += max_abs * &m;
            }
        }
    }
    let exact = all_exact.then(|| lower.clone());
    EnergyResult {
        lower,
        upper,
        exact,
    }
}

fn closed_form_report(lines: Vec<(i64, u64)>, n: u64) -> SpectrumReport {
    let mut merged: Vec<(i64, u64)> = Vec::new();
    for (v, m) in lines {
        if m == 0 {
            continue;
        }
        match merged.iter_mut().find(|(w, _)| *w == v) {
            Some((_, total)) => *total += m,
            None => merged.push((v, m)),
        }
    }
    merged.sort();
    SpectrumReport {
        entries: merged
            .into_iter()
            .map(|(v, m)| SpectrumEntry {
                location: Location::Exact(rational_from_i64(v)),
                mult: m as usize,
                certified: true,
            })
            .collect(),
        n: n as usize,
        residual_width: Rational::zero(),
    }
}

/// Closed-form spectrum of the `K_a` joined with `(a-1)(b-1)` copies of
/// `K_b` family: eigenvalues `-(a-1)(b-1), -1, b-1, ab-1` with
/// multiplicities `1, (a-1)[(b-1)^2+1], (a-1)(b-1)-1, 1`; coinciding lines
/// merge and empty lines drop.
pub fn spectrum_kab(a: u64, b: u64) -> Result<SpectrumReport, SpectraError> {
    if b < 2 || a < b {
        return Err(SpectraError::BadFamily(format!(
            "need a >= b >= 2, got a={a}, b={b}"
        )));
    }
    let (ai, bi) = (a as i64, b as i64);
    let q = (ai - 1) * (bi - 1);
    let n = a + b * (a - 1) * (b - 1);
    Ok(closed_form_report(
        vec![
            (-q, 1),
            (-1, (a - 1) * ((b - 1) * (b - 1) + 1)),
            (bi - 1, (q - 1) as u64),
            (ai * bi - 1, 1),
        ],
        n,
    ))
}

/// Closed-form spectrum of the `(p+1)K_2` joined with `(p+1)K_2` family:
/// eigenvalues `-(2p+1), -1, 1, 2p+3` with multiplicities
/// `1, 2(p+1), 2p, 1` on `n = 4p+4` vertices.
pub fn spectrum_pk2(p: u64) -> Result<SpectrumReport, SpectraError> {
    if p < 1 {
        return Err(SpectraError::BadFamily(format!("need p >= 1, got p={p}")));
    }
    let pi = p as i64;
    Ok(closed_form_report(
        vec![
            (-(2 * pi + 1), 1),
            (-1, 2 * (p + 1)),
            (1, 2 * p),
            (2 * pi + 3, 1),
        ],
        4 * p + 4,
    ))
}

const BORDERENERGETIC_EPSILON_LOG2: u32 = 20;

/// Whether the cograph's energy equals `2(n-1)`, the energy of the complete
/// graph on the same vertex count. The verdict requires an exact spectrum;
/// when the energy is only bracketed and the bracket straddles `2(n-1)` the
/// result is `IndeterminateEnergy`.
pub fn is_borderenergetic(tree: &Cotree) -> Result<(bool, EnergyResult, bool), SpectraError> {
    let eps = Rational::one() / rational_from_i64(1i64 << BORDERENERGETIC_EPSILON_LOG2);
    let report = full_spectrum(tree, &eps)?;
    let result = energy_of_report(&report);
    let n = tree.n_leaves();
    let target = rational_from_i64(2 * (n as i64 - 1));
    let verdict = match &result.exact {
        Some(e) => *e == target,
        None => {
            if result.lower <= target && target <= result.upper {
                return Err(SpectraError::IndeterminateEnergy {
                    lower: format_rational(&result.lower),
                    upper: format_rational(&result.upper),
                });
            }
            false
        }
    };
    let cospectral = {
        let complete: Vec<(Rational, usize)> = if n == 1 {
            vec![(Rational::zero(), 1)]
        } else {
            vec![
                (rational_from_i64(-1), n - 1),
                (rational_from_i64(n as i64 - 1), 1),
            ]
        };
        report.exact_entries().as_deref() == Some(&complete)
    };
    Ok((verdict, result, cospectral))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{
        build_balanced, build_family_kab, build_family_pk2, parse_expression, Cotree,
    };
    use crate::diagonalize::multiplicity;
    use crate::rational::{rational_from_i64 as q, rational_from_pair as qq};

    fn k(n: usize) -> Cotree {
        Cotree::join((0..n).map(|_| Cotree::leaf()).collect())
    }

    fn exact_pairs(r: &SpectrumReport) -> Vec<(Rational, usize)> {
        r.exact_entries().expect("report should be exact")
    }

    #[test]
    fn closed_forms_on_small_graphs() {
        assert_eq!(mult_minus_one(&k(5)), 4);
        let fig1 = parse_expression("((1+1)*1+1)*((1*1)*1+1)*1").unwrap();
        assert_eq!(mult_minus_one(&fig1), 2);
        assert_eq!(multiplicity(&fig1, &q(-1)), 2);
        assert_eq!(mult_zero(&fig1), 1);
        // K_{3,3}: m(0) = 4
        let k33 = build_balanced(&BalancedSpec::parse("T(2,0|0,3)").unwrap()).unwrap();
        assert_eq!(mult_zero(&k33), 4);
        // isolated vertices count fully at a union root
        let two_iso = Cotree::union(vec![Cotree::leaf(), Cotree::leaf()]);
        assert_eq!(mult_zero(&two_iso), 2);
        let mixed = parse_expression("1*1+2").unwrap(); // K_2 + 2 isolated
        assert_eq!(mult_zero(&mixed), 2);
        assert_eq!(multiplicity(&mixed, &q(0)), 2);
        assert_eq!(mult_zero(&Cotree::leaf()), 1);
    }

    #[test]
    fn counts_and_specials_for_regular_specs() {
        let s = BalancedSpec::parse("T(3,2,0|0,0,2)").unwrap();
        assert_eq!(count_excluding_special(&s).unwrap(), 6);
        assert_eq!(special_eigenvalue_regular(&s).unwrap(), (q(1), 3));
        let t = build_balanced(&s).unwrap();
        assert_eq!(multiplicity(&t, &q(1)), 3);
        assert_eq!(multiplicity(&t, &q(-1)), 6);

        let s = BalancedSpec::parse("T(2,0|0,3)").unwrap();
        assert_eq!(count_excluding_special(&s).unwrap(), 2);
        assert_eq!(special_eigenvalue_regular(&s).unwrap(), (q(-3), 1));

        let s = BalancedSpec::parse("T(2,2,0|0,0,2)").unwrap();
        assert_eq!(special_eigenvalue_regular(&s).unwrap(), (q(1), 2));

        let bad = BalancedSpec::parse("T(1,2,0|3,0,2)").unwrap();
        assert!(matches!(
            special_eigenvalue_regular(&bad),
            Err(SpectraError::NotRegular)
        ));
    }

    #[test]
    fn nonregular_special() {
        let s = BalancedSpec::parse("T(1,2,0|3,0,2)").unwrap();
        assert_eq!(special_eigenvalue_nonregular(&s).unwrap(), (q(1), 1));
        let t = build_balanced(&s).unwrap();
        assert_eq!(multiplicity(&t, &q(1)), 1);
        let bad = BalancedSpec::parse("T(2,0|4,3)@U").unwrap();
        assert!(matches!(
            special_eigenvalue_nonregular(&bad),
            Err(SpectraError::NotAdmissible)
        ));
    }

    #[test]
    fn upper_bound() {
        let s = BalancedSpec::parse("T(3,2,0|0,0,2)").unwrap();
        assert_eq!(mult_upper_bound(&s, &q(2)).unwrap(), 3);
        assert!(matches!(
            mult_upper_bound(&s, &q(-1)),
            Err(SpectraError::ExcludedLambda(_))
        ));
        assert!(matches!(
            mult_upper_bound(&s, &q(1)),
            Err(SpectraError::ExcludedLambda(_))
        ));
        let s = BalancedSpec::parse("T(2,0|0,3)").unwrap();
        assert_eq!(mult_upper_bound(&s, &q(3)).unwrap(), 1);
    }

    #[test]
    fn full_spectrum_exact_cases() {
        let r = full_spectrum(&k(5), &q(1)).unwrap();
        assert_eq!(exact_pairs(&r), vec![(q(-1), 4), (q(4), 1)]);
        assert!(r.is_exact());
        assert_eq!(r.residual_width, q(0));

        let t = build_family_pk2(1).unwrap();
        let r = full_spectrum(&t, &qq(1, 1000)).unwrap();
        assert_eq!(
            exact_pairs(&r),
            vec![(q(-3), 1), (q(-1), 4), (q(1), 2), (q(5), 1)]
        );
    }

    #[test]
    fn full_spectrum_brackets_irrationals() {
        // P_3: eigenvalues -sqrt(2), 0, sqrt(2)
        let p3 = Cotree::join(vec![
            Cotree::union(vec![Cotree::leaf(), Cotree::leaf()]),
            Cotree::leaf(),
        ]);
        let eps = qq(1, 1024);
        let r = full_spectrum(&p3, &eps).unwrap();
        assert!(!r.is_exact());
        assert!(r.residual_width <= eps);
        let total: usize = r.entries.iter().map(|e| e.mult).sum();
        assert_eq!(total, 3);
        let sqrt2 = 2f64.sqrt();
        for e in &r.entries {
            match &e.location {
                Location::Exact(v) => {
                    assert_eq!(*v, q(0));
                    assert_eq!(e.mult, 1);
                }
                Location::Interval { lo, hi } => {
                    let lof: f64 = crate::diagonalize::Scalar::from_rational(lo);
                    let hif: f64 = crate::diagonalize::Scalar::from_rational(hi);
                    let target = if lof > 0.0 { sqrt2 } else { -sqrt2 };
                    assert!(lof < target && target < hif, "{lof} {target} {hif}");
                    assert_eq!(e.mult, 1);
                }
            }
        }
        assert!(matches!(
            full_spectrum(&p3, &q(0)),
            Err(SpectraError::NonPositiveEpsilon)
        ));
    }

    #[test]
    fn energy_cases() {
        for n in 2..7usize {
            let e = energy(&k(n), &q(1)).unwrap();
            assert_eq!(e.exact, Some(q(2 * n as i64 - 2)));
        }
        let t = build_family_pk2(2).unwrap();
        let e = energy(&t, &q(1)).unwrap();
        assert_eq!(e.exact, Some(q(22)));
        // P_3: energy 2*sqrt(2), interval of width <= n*eps
        let p3 = Cotree::join(vec![
            Cotree::union(vec![Cotree::leaf(), Cotree::leaf()]),
            Cotree::leaf(),
        ]);
        let eps = qq(1, 1 << 20);
        let e = energy(&p3, &eps).unwrap();
        assert!(e.exact.is_none());
        assert!(&e.upper - &e.lower <= q(3) * &eps);
        let twosqrt2 = 2.0 * 2f64.sqrt();
        let lo: f64 = crate::diagonalize::Scalar::from_rational(&e.lower);
        let hi: f64 = crate::diagonalize::Scalar::from_rational(&e.upper);
        assert!(lo <= twosqrt2 && twosqrt2 <= hi);
    }

    #[test]
    fn kab_spectra() {
        let r = spectrum_kab(2, 2).unwrap();
        assert_eq!(exact_pairs(&r), vec![(q(-1), 3), (q(3), 1)]);
        let r = spectrum_kab(3, 2).unwrap();
        assert_eq!(
            exact_pairs(&r),
            vec![(q(-2), 1), (q(-1), 4), (q(1), 1), (q(5), 1)]
        );
        assert_eq!(r.n, 7);
        let r = spectrum_kab(3, 3).unwrap();
        assert_eq!(
            exact_pairs(&r),
            vec![(q(-4), 1), (q(-1), 10), (q(2), 3), (q(8), 1)]
        );
        assert_eq!(r.n, 15);
        assert!(spectrum_kab(2, 3).is_err());
    }

    #[test]
    fn pk2_spectra() {
        let r = spectrum_pk2(1).unwrap();
        assert_eq!(
            exact_pairs(&r),
            vec![(q(-3), 1), (q(-1), 4), (q(1), 2), (q(5), 1)]
        );
        let r = spectrum_pk2(2).unwrap();
        assert_eq!(
            exact_pairs(&r),
            vec![(q(-5), 1), (q(-1), 6), (q(1), 4), (q(7), 1)]
        );
        let r = spectrum_pk2(3).unwrap();
        let total: usize = r.entries.iter().map(|e| e.mult).sum();
        assert_eq!(total, 16);
        assert!(spectrum_pk2(0).is_err());
    }

    #[test]
    fn trace_zero_for_families() {
        for (a, b) in [(2, 2), (3, 2), (4, 3), (5, 5)] {
            let r = spectrum_kab(a, b).unwrap();
            let trace: Rational = exact_pairs(&r)
                .iter()
                .map(|(v, m)| v * q(*m as i64))
                .sum();
            assert_eq!(trace, q(0), "kab({a},{b})");
        }
        for p in 1..=5 {
            let r = spectrum_pk2(p).unwrap();
            let trace: Rational = exact_pairs(&r)
                .iter()
                .map(|(v, m)| v * q(*m as i64))
                .sum();
            assert_eq!(trace, q(0), "pk2({p})");
        }
    }

    #[test]
    fn borderenergetic_verdicts() {
        let (verdict, e, cospectral) = is_borderenergetic(&build_family_kab(3, 2).unwrap()).unwrap();
        assert!(verdict);
        assert_eq!(e.exact, Some(q(12)));
        assert!(!cospectral);

        let (verdict, e, cospectral) = is_borderenergetic(&build_family_pk2(1).unwrap()).unwrap();
        assert!(verdict);
        assert_eq!(e.exact, Some(q(14)));
        assert!(!cospectral);

        let (verdict, e, cospectral) = is_borderenergetic(&k(6)).unwrap();
        assert!(verdict);
        assert_eq!(e.exact, Some(q(10)));
        assert!(cospectral);

        // P_3 energy 2*sqrt(2) != 4 and the bracket excludes it
        let p3 = Cotree::join(vec![
            Cotree::union(vec![Cotree::leaf(), Cotree::leaf()]),
            Cotree::leaf(),
        ]);
        let (verdict, e, cospectral) = is_borderenergetic(&p3).unwrap();
        assert!(!verdict);
        assert!(e.exact.is_none());
        assert!(!cospectral);
    }

    #[test]
    fn json_shapes() {
        let r = spectrum_pk2(1).unwrap();
        let v = r.to_json();
        assert_eq!(v["n"], 8);
        assert_eq!(v["entries"][0]["value"], "-3");
        assert_eq!(v["entries"][0]["mult"], 1);
        assert_eq!(v["residual_width"], "0");
        let e = energy_of_report(&r);
        let ej = e.to_json();
        assert_eq!(ej["exact"], "14");
        assert_eq!(ej["lower"], "14");
    }
}
