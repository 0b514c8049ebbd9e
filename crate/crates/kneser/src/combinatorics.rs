//! Exact combinatorial primitives: subset types, enumeration, uniform seeded
//! sampling, stable subsets, and closed-form bounds on intersecting families.
//!
//! Everything here is exact. Counts are [`BigUint`], probabilities and bound
//! values are [`BigRational`], and no operation involves floating point.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use thiserror::Error;

/// Largest element label for which subsets cache a bit mask for O(1)
/// disjointness tests. Subsets with larger elements fall back to a merge scan.
pub const MASK_WIDTH: u32 = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("elements must form a strictly increasing sequence of positive integers")]
    MalformedSubset,
    #[error("element {element} lies outside the ground set [1, {n}]")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("cannot draw a {k}-subset from a pool of {available} elements")]
    SampleTooLarge { k: usize, available: usize },
    #[error("requires n >= 2k, got n={n}, k={k}")]
    GroundTooSmall { n: u64, k: u64 },
    #[error("requires k >= {min}, got k={k}")]
    CardinalityTooSmall { k: u64, min: u64 },
    #[error("base set must have exactly k elements")]
    BaseSizeMismatch,
    #[error("anchor element {element} must lie outside the base set")]
    AnchorInsideBase { element: u32 },
}

/// A k-element subset of a ground set, stored as a strictly increasing
/// sequence of 1-based labels. When every element is at most [`MASK_WIDTH`],
/// a bit mask is cached so disjointness checks cost a single AND.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSubset {
    elems: Vec<u32>,
    mask: Option<u128>,
}

impl KSubset {
    /// Builds a subset from a strictly increasing sequence of positive labels.
    pub fn new(elems: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if elems.first().is_some_and(|&e| e == 0) || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CombinatoricsError::MalformedSubset);
        }
        Ok(Self::from_sorted_unchecked(elems))
    }

    /// Convenience constructor from a slice literal.
    pub fn from_slice(elems: &[u32]) -> Result<Self, CombinatoricsError> {
        Self::new(elems.to_vec())
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<u32>) -> Self {
        let mask = mask_of(&elems);
        Self { elems, mask }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    /// Cardinality of the subset.
    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, element: u32) -> bool {
        self.elems.binary_search(&element).is_ok()
    }

    /// The cached bit mask (bit `e - 1` per element `e`), when available.
    pub fn bitmask(&self) -> Option<u128> {
        self.mask
    }

    /// True when every element lies in `[1, n]`.
    pub fn fits_within(&self, n: u32) -> bool {
        self.elems.last().is_none_or(|&last| last <= n)
    }

    /// Renders the elements as `1,4,7` (the CLI wire form).
    pub fn comma_list(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    /// Parses the `1,4,7` wire form. The empty string is the empty subset.
    pub fn parse_comma_list(text: &str) -> Result<Self, CombinatoricsError> {
        if text.is_empty() {
            return Self::new(Vec::new());
        }
        let elems = text
            .split(',')
            .map(|p| p.parse::<u32>().map_err(|_| CombinatoricsError::MalformedSubset))
            .collect::<Result<Vec<u32>, _>>()?;
        Self::new(elems)
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.comma_list())
    }
}

fn mask_of(elems: &[u32]) -> Option<u128> {
    if elems.last().is_some_and(|&last| last > MASK_WIDTH) {
        return None;
    }
    let mut mask = 0u128;
    for &e in elems {
        mask |= 1u128 << (e - 1);
    }
    Some(mask)
}

/// True iff the two subsets share no element.
pub fn are_disjoint(a: &KSubset, b: &KSubset) -> bool {
    match (a.mask, b.mask) {
        (Some(ma), Some(mb)) => ma & mb == 0,
        _ => slices_disjoint(&a.elems, &b.elems),
    }
}

/// Merge scan over two strictly increasing slices.
pub(crate) fn slices_disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// A subset of the ground set `[1, n]`, used for the surviving ground set of
/// elimination rounds and for item sets of utility profiles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset {
    elems: Vec<u32>,
    n: u32,
}

impl GroundSubset {
    /// The full ground set `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        Self { elems: (1..=n).collect(), n }
    }

    pub fn new(elems: Vec<u32>, n: u32) -> Result<Self, CombinatoricsError> {
        if elems.first().is_some_and(|&e| e == 0) || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CombinatoricsError::MalformedSubset);
        }
        if let Some(&last) = elems.last() {
            if last > n {
                return Err(CombinatoricsError::ElementOutOfRange { element: last, n });
            }
        }
        Ok(Self { elems, n })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Size of the ambient universe this set lives in.
    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn contains(&self, element: u32) -> bool {
        self.elems.binary_search(&element).is_ok()
    }

    /// A copy with one element removed. Panics if the element is absent.
    pub fn remove(&self, element: u32) -> Self {
        let pos = self
            .elems
            .binary_search(&element)
            .unwrap_or_else(|_| panic!("element {element} not present in {self}"));
        let mut elems = self.elems.clone();
        elems.remove(pos);
        Self { elems, n: self.n }
    }

    /// The complement within `[1, n]`.
    pub fn complement(&self) -> Self {
        let elems = (1..=self.n).filter(|e| !self.contains(*e)).collect();
        Self { elems, n: self.n }
    }

    pub fn comma_list(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} within [{}]", self.comma_list(), self.n)
    }
}

/// Exact binomial coefficient, with `binomial(n, k) = 0` whenever `k > n`.
///
/// ```
/// use kneser::binomial;
/// use num::BigUint;
/// assert_eq!(binomial(5, 2), BigUint::from(10u32));
/// assert_eq!(binomial(3, 7), BigUint::from(0u32));
/// ```
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        // exact at every step: a product of i+1 consecutive integers is
        // divisible by (i+1)!
        acc /= i + 1;
    }
    acc
}

/// Lexicographic stream of all k-subsets of a fixed pool of labels.
///
/// The pool must be strictly increasing; subsets are then emitted in
/// lexicographic order of their element sequences, `binomial(|pool|, k)` of
/// them in total (the stream is empty when `k > |pool|`).
pub struct KSubsets {
    pool: Vec<u32>,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl KSubsets {
    fn new(pool: Vec<u32>, k: usize) -> Self {
        let done = k > pool.len();
        Self { pool, idx: (0..k).collect(), started: false, done }
    }

    fn current(&self) -> KSubset {
        KSubset::from_sorted_unchecked(self.idx.iter().map(|&i| self.pool[i]).collect())
    }

    fn advance(&mut self) -> bool {
        let k = self.idx.len();
        let n = self.pool.len();
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.idx[i] != i + n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        true
    }
}

impl Iterator for KSubsets {
    type Item = KSubset;

    fn next(&mut self) -> Option<KSubset> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All k-subsets of `x`, in lexicographic order.
///
/// ```
/// use kneser::{enumerate_ksubsets, GroundSubset};
/// let x = GroundSubset::full(3);
/// let pairs: Vec<String> = enumerate_ksubsets(&x, 2).map(|s| s.to_string()).collect();
/// assert_eq!(pairs, ["{1,2}", "{1,3}", "{2,3}"]);
/// ```
pub fn enumerate_ksubsets(x: &GroundSubset, k: usize) -> KSubsets {
    KSubsets::new(x.elements().to_vec(), k)
}

/// All k-subsets of an explicit strictly increasing pool.
pub(crate) fn ksubsets_of_pool(pool: Vec<u32>, k: usize) -> KSubsets {
    debug_assert!(pool.windows(2).all(|w| w[0] < w[1]));
    KSubsets::new(pool, k)
}

/// Draws k-subsets uniformly from a fixed pool without reallocating.
///
/// Each draw runs a partial Fisher-Yates pass over the pool and then undoes
/// its swaps, so the pool is intact for the next draw and each sample costs
/// exactly `k` bounded-range rng draws.
pub(crate) struct PoolSampler {
    pool: Vec<u32>,
    swaps: Vec<usize>,
}

impl PoolSampler {
    pub(crate) fn new(pool: Vec<u32>) -> Self {
        Self { pool, swaps: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.pool.len()
    }

    /// Writes a uniform k-subset (sorted ascending) into `out`.
    pub(crate) fn sample_into<R: Rng>(&mut self, k: usize, rng: &mut R, out: &mut Vec<u32>) {
        debug_assert!(k <= self.pool.len());
        out.clear();
        self.swaps.clear();
        for t in 0..k {
            let j = rng.random_range(t..self.pool.len());
            self.pool.swap(t, j);
            self.swaps.push(j);
            out.push(self.pool[t]);
        }
        for t in (0..k).rev() {
            self.pool.swap(t, self.swaps[t]);
        }
        out.sort_unstable();
    }
}

/// Draws one k-subset uniformly from all `binomial(|x|, k)` k-subsets of `x`.
///
/// Consumes exactly `k` bounded-range draws from `rng`, so a fixed seed always
/// yields the same subset and streams stay aligned across runs.
pub fn sample_uniform_ksubset<R: Rng>(
    x: &GroundSubset,
    k: usize,
    rng: &mut R,
) -> Result<KSubset, CombinatoricsError> {
    if k > x.len() {
        return Err(CombinatoricsError::SampleTooLarge { k, available: x.len() });
    }
    let mut sampler = PoolSampler::new(x.elements().to_vec());
    let mut out = Vec::with_capacity(k);
    sampler.sample_into(k, rng, &mut out);
    Ok(KSubset::from_sorted_unchecked(out))
}

/// True iff the subset has no two consecutive elements modulo `n`
/// (`1` and `n` count as consecutive).
pub fn is_stable(a: &KSubset, n: u32) -> bool {
    debug_assert!(a.fits_within(n));
    let elems = a.elements();
    if elems.windows(2).any(|w| w[1] == w[0] + 1) {
        return false;
    }
    match (elems.first(), elems.last()) {
        (Some(&first), Some(&last)) => !(first == 1 && last == n),
        _ => true,
    }
}

/// All stable k-subsets of `[n]` (the Schrijver graph's vertices), in
/// lexicographic order. Requires `n >= 2k` and `k >= 1`.
pub fn enumerate_stable_ksubsets(
    n: u32,
    k: u32,
) -> Result<impl Iterator<Item = KSubset>, CombinatoricsError> {
    if k < 1 {
        return Err(CombinatoricsError::CardinalityTooSmall { k: k as u64, min: 1 });
    }
    if u64::from(n) < 2 * u64::from(k) {
        return Err(CombinatoricsError::GroundTooSmall { n: n as u64, k: k as u64 });
    }
    Ok(ksubsets_of_pool((1..=n).collect(), k as usize).filter(move |a| is_stable(a, n)))
}

/// Number of stable k-subsets of `[n]`:
/// `binomial(n-k+1, k) - binomial(n-k-1, k-2)`. Requires `k >= 2`, `n >= 2k`.
pub fn schrijver_vertex_count(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    if k < 2 {
        return Err(CombinatoricsError::CardinalityTooSmall { k: k as u64, min: 2 });
    }
    if u64::from(n) < 2 * u64::from(k) {
        return Err(CombinatoricsError::GroundTooSmall { n: n as u64, k: k as u64 });
    }
    let (n, k) = (u64::from(n), u64::from(k));
    Ok(binomial(n - k + 1, k) - binomial(n - k - 1, k - 2))
}

/// Largest size of an intersecting family of k-subsets of `[n]`:
/// `binomial(n-1, k-1)`. Requires `n >= 2k` and `k >= 1`.
pub fn ekr_bound(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    if k < 1 {
        return Err(CombinatoricsError::CardinalityTooSmall { k: k as u64, min: 1 });
    }
    if u64::from(n) < 2 * u64::from(k) {
        return Err(CombinatoricsError::GroundTooSmall { n: n as u64, k: k as u64 });
    }
    Ok(binomial(u64::from(n) - 1, u64::from(k) - 1))
}

/// Largest size of a *non-trivial* intersecting family of k-subsets of `[n]`
/// (no element common to all members):
/// `binomial(n-1, k-1) - binomial(n-k-1, k-1) + 1`. Requires `k >= 2`, `n >= 2k`.
pub fn hilton_milner_bound(n: u32, k: u32) -> Result<BigUint, CombinatoricsError> {
    if k < 2 {
        return Err(CombinatoricsError::CardinalityTooSmall { k: k as u64, min: 2 });
    }
    if u64::from(n) < 2 * u64::from(k) {
        return Err(CombinatoricsError::GroundTooSmall { n: n as u64, k: k as u64 });
    }
    let (n, k) = (u64::from(n), u64::from(k));
    Ok(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + BigUint::one())
}

/// The extremal non-trivial intersecting family meeting the Hilton-Milner
/// bound: every k-subset that contains `anchor` and meets `base`, plus `base`
/// itself. Requires `|base| = k`, `anchor` outside `base`, `k >= 2`, `n >= 2k`.
pub fn hilton_milner_extremal_family(
    n: u32,
    k: u32,
    base: &KSubset,
    anchor: u32,
) -> Result<Vec<KSubset>, CombinatoricsError> {
    if k < 2 {
        return Err(CombinatoricsError::CardinalityTooSmall { k: k as u64, min: 2 });
    }
    if u64::from(n) < 2 * u64::from(k) {
        return Err(CombinatoricsError::GroundTooSmall { n: n as u64, k: k as u64 });
    }
    if base.k() != k as usize {
        return Err(CombinatoricsError::BaseSizeMismatch);
    }
    if !base.fits_within(n) {
        return Err(CombinatoricsError::ElementOutOfRange {
            element: *base.elements().last().expect("k >= 2"),
            n,
        });
    }
    if anchor == 0 || anchor > n {
        return Err(CombinatoricsError::ElementOutOfRange { element: anchor, n });
    }
    if base.contains(anchor) {
        return Err(CombinatoricsError::AnchorInsideBase { element: anchor });
    }

    let rest: Vec<u32> = (1..=n).filter(|&e| e != anchor).collect();
    let mut family = Vec::new();
    for partial in ksubsets_of_pool(rest, k as usize - 1) {
        if partial.elements().iter().any(|&e| base.contains(e)) {
            let mut elems = partial.elements().to_vec();
            let pos = elems.partition_point(|&e| e < anchor);
            elems.insert(pos, anchor);
            family.push(KSubset::from_sorted_unchecked(elems));
        }
    }
    family.push(base.clone());
    family.sort();
    Ok(family)
}

/// Result of evaluating one of the closed-form family bounds: the exact value,
/// whether the bound's stated preconditions held, and the named intermediate
/// quantities the expression is built from.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub value: BigRational,
    pub preconditions_met: bool,
    pub terms: BTreeMap<&'static str, BigRational>,
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Lower bound on the probability that two sets drawn uniformly and
/// independently from a family of k-subsets of `[n]` are disjoint:
///
/// `1/2 * (1 - gamma - (k/|F|) * C(n-2, k-2)) * (1 - (k^2/|F|) * C(n-2, k-2))`
///
/// where `gamma` bounds the fraction of members containing any single element.
/// The stated preconditions are `k >= 3`, `n >= 2k`,
/// `|F| >= k^2 * C(n-2, k-2)`, and `0 < gamma <= 1`; the value is computed
/// either way and the report's flag records whether they held.
pub fn edge_density_lower_bound(
    n: u64,
    k: u64,
    family_size: &BigUint,
    max_element_fraction: &BigRational,
) -> BoundReport {
    assert!(!family_size.is_zero(), "family must be non-empty");
    let reach = if k >= 2 { binomial(n - 2, k - 2) } else { BigUint::zero() };
    let single = ratio(&reach * k, family_size.clone());
    let pair = ratio(&reach * (k * k), family_size.clone());
    let matching_factor = BigRational::one() - max_element_fraction - &single;
    let degree_factor = BigRational::one() - &pair;
    let value = &matching_factor * &degree_factor / BigRational::from_integer(BigInt::from(2));

    let preconditions_met = k >= 3
        && n >= 2 * k
        && *family_size >= &reach * (k * k)
        && *max_element_fraction > BigRational::zero()
        && *max_element_fraction <= BigRational::one();

    let mut terms = BTreeMap::new();
    terms.insert("single_overlap_correction", single);
    terms.insert("pair_overlap_correction", pair);
    terms.insert("matching_factor", matching_factor);
    terms.insert("degree_factor", degree_factor);
    BoundReport { value, preconditions_met, terms }
}

/// Lower bound on the probability that a set drawn uniformly from a family of
/// k-subsets of a ground set `X` is disjoint from a fixed k-set avoiding the
/// family's popular element:
///
/// `gamma - (k/|F|) * C(|X|-2, k-2)`
///
/// where `gamma` is a fraction of members containing the popular element.
/// Stated preconditions: `k >= 2` and `|X| >= 2k`. The report also carries
/// the simplified floor `gamma - 1/4`, which is at most the value whenever
/// `|X| >= 8k^3` and `|F| >= C(|X|, k) / (2|X|)`.
pub fn disjoint_probability_lower_bound(
    x_size: u64,
    k: u64,
    family_size: &BigUint,
    popular_fraction: &BigRational,
) -> BoundReport {
    assert!(!family_size.is_zero(), "family must be non-empty");
    let reach = if k >= 2 { binomial(x_size - 2, k - 2) } else { BigUint::zero() };
    let correction = ratio(&reach * k, family_size.clone());
    let value = popular_fraction - &correction;
    let preconditions_met = k >= 2 && x_size >= 2 * k;

    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut terms = BTreeMap::new();
    terms.insert("intersecting_correction", correction);
    terms.insert("simplified_floor", popular_fraction - quarter);
    BoundReport { value, preconditions_met, terms }
}
