//! The black-box input model: point-query coloring oracles, subset-query
//! oracles, built-in instance families, and query counting.
//!
//! An instance is a coloring of the k-subsets of `[n]`; algorithms only ever
//! see it through [`KneserInstance::color`] (point queries) or a
//! [`SubsetColorOracle`] (subset queries), and experiments account for both
//! through [`QueryTranscript`].

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num::bigint::BigUint;
use thiserror::Error;

use crate::combinatorics::{
    are_disjoint, binomial, ksubsets_of_pool, GroundSubset, KSubset, KSubsets,
};

/// Default cap on the number of k-subsets an emulated subset query may
/// enumerate. Callers that need more raise it explicitly.
pub const DEFAULT_SUBSET_QUERY_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance requires n >= 2k >= 2, got n={n}, k={k}")]
    InvalidDimensions { n: u32, k: u32 },
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("vertex {vertex} is not a {k}-subset of [1, {n}]")]
    InvalidVertex { vertex: String, k: u32, n: u32 },
    #[error("color {color} outside the declared palette [1, {palette}]")]
    ColorOutOfPalette { color: u32, palette: u32 },
    #[error("query set contains element {element} outside [1, {n}]")]
    QuerySetOutOfRange { element: u32, n: u32 },
    #[error(
        "subset query for color {color} on a {set_size}-element set needs {required} vertex \
         enumerations, over the budget of {budget}"
    )]
    SubsetBudgetExceeded { color: u32, set_size: usize, required: BigUint, budget: u64 },
}

/// A 1-based palette color.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u32);

impl Color {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "color {}", self.0)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The raw coloring behind an instance. Implementations must be deterministic:
/// equal vertices always map to equal colors. The vertex slice handed in is
/// guaranteed to be a strictly increasing k-subset of `[1, n]`.
pub trait VertexColoring: Send + Sync {
    fn color_of(&self, vertex: &[u32]) -> u32;
}

pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stateless seed-keyed hash of a sorted vertex, used by the hard and random
/// instance families so arbitrarily large instances need no color tables.
fn vertex_hash(seed: u64, vertex: &[u32]) -> u64 {
    let mut h = splitmix64(seed ^ 0xD6E8_FEB8_6659_FD93);
    for &e in vertex {
        h = splitmix64(h ^ u64::from(e));
    }
    h
}

struct CanonicalColoring {
    threshold: u32, // n - 2k + 1
}

impl VertexColoring for CanonicalColoring {
    fn color_of(&self, vertex: &[u32]) -> u32 {
        let min = vertex[0];
        if min <= self.threshold {
            min
        } else {
            self.threshold + 1
        }
    }
}

struct HardColoring {
    threshold: u32,
    seed: u64,
}

impl VertexColoring for HardColoring {
    fn color_of(&self, vertex: &[u32]) -> u32 {
        let min = vertex[0];
        if min <= self.threshold {
            min
        } else {
            1 + (vertex_hash(self.seed, vertex) % u64::from(self.threshold)) as u32
        }
    }
}

struct UniformRandomColoring {
    palette: u32,
    seed: u64,
}

impl VertexColoring for UniformRandomColoring {
    fn color_of(&self, vertex: &[u32]) -> u32 {
        1 + (vertex_hash(self.seed, vertex) % u64::from(self.palette)) as u32
    }
}

/// A coloring backed by an explicit vertex table. Querying a vertex absent
/// from the table is a hard error.
pub struct ExplicitColoring {
    table: HashMap<Vec<u32>, u32>,
}

impl VertexColoring for ExplicitColoring {
    fn color_of(&self, vertex: &[u32]) -> u32 {
        *self
            .table
            .get(vertex)
            .unwrap_or_else(|| panic!("vertex {vertex:?} missing from explicit color table"))
    }
}

/// A Kneser problem instance: dimensions, a declared palette size, and the
/// coloring oracle handle. For valid problem inputs the palette size is
/// `n - 2k + 1`; the canonical coloring declares `n - 2k + 2` and serves as a
/// building block rather than a problem instance.
#[derive(Clone)]
pub struct KneserInstance {
    n: u32,
    k: u32,
    palette_size: u32,
    coloring: Arc<dyn VertexColoring>,
    description: String,
}

impl KneserInstance {
    pub fn new(
        n: u32,
        k: u32,
        palette_size: u32,
        coloring: Arc<dyn VertexColoring>,
        description: impl Into<String>,
    ) -> Result<Self, OracleError> {
        if k == 0 || u64::from(n) < 2 * u64::from(k) {
            return Err(OracleError::InvalidDimensions { n, k });
        }
        if palette_size == 0 {
            return Err(OracleError::EmptyPalette);
        }
        Ok(Self { n, k, palette_size, coloring, description: description.into() })
    }

    /// The proper (n-2k+2)-coloring that assigns each vertex its minimum
    /// element when that is at most `n - 2k + 1` and a shared final color to
    /// the vertices inside the last `2k - 1` elements.
    pub fn canonical(n: u32, k: u32) -> Result<Self, OracleError> {
        if k == 0 || u64::from(n) < 2 * u64::from(k) {
            return Err(OracleError::InvalidDimensions { n, k });
        }
        let threshold = n - 2 * k + 1;
        Self::new(
            n,
            k,
            threshold + 1,
            Arc::new(CanonicalColoring { threshold }),
            format!("canonical(n={n},k={k})"),
        )
    }

    /// The adversarial family: the canonical coloring with its final color
    /// class recolored into `[n - 2k + 1]` by a seed-keyed hash, so that every
    /// monochromatic edge touches one of the `binomial(2k-1, k)` recolored
    /// vertices.
    pub fn hard(n: u32, k: u32, seed: u64) -> Result<Self, OracleError> {
        if k == 0 || u64::from(n) < 2 * u64::from(k) {
            return Err(OracleError::InvalidDimensions { n, k });
        }
        let threshold = n - 2 * k + 1;
        Self::new(
            n,
            k,
            threshold,
            Arc::new(HardColoring { threshold, seed }),
            format!("hard(n={n},k={k},seed={seed})"),
        )
    }

    /// Every vertex gets an independent-looking uniform color from
    /// `[n - 2k + 1]`, keyed by the seed. Stateless and O(1) memory.
    pub fn random_uniform(n: u32, k: u32, seed: u64) -> Result<Self, OracleError> {
        if k == 0 || u64::from(n) < 2 * u64::from(k) {
            return Err(OracleError::InvalidDimensions { n, k });
        }
        let palette = n - 2 * k + 1;
        Self::new(
            n,
            k,
            palette,
            Arc::new(UniformRandomColoring { palette, seed }),
            format!("random(n={n},k={k},seed={seed})"),
        )
    }

    /// An instance backed by an explicit vertex-to-color table.
    pub fn from_table(
        n: u32,
        k: u32,
        palette_size: u32,
        table: HashMap<Vec<u32>, u32>,
        description: impl Into<String>,
    ) -> Result<Self, OracleError> {
        Self::new(n, k, palette_size, Arc::new(ExplicitColoring { table }), description)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The palette size this instance declares.
    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    /// The palette size of a valid problem input, `n - 2k + 1`.
    pub fn problem_palette(&self) -> u32 {
        self.n - 2 * self.k + 1
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn check_vertex(&self, a: &KSubset) -> Result<(), OracleError> {
        if a.k() != self.k as usize || !a.fits_within(self.n) {
            return Err(OracleError::InvalidVertex {
                vertex: a.to_string(),
                k: self.k,
                n: self.n,
            });
        }
        Ok(())
    }

    /// One point query. Out-of-range queries are a hard error (panic), which
    /// catches solver index bugs at the boundary where the ground set shrinks.
    pub fn color(&self, a: &KSubset) -> Color {
        if let Err(e) = self.check_vertex(a) {
            panic!("{e}");
        }
        Color(self.coloring.color_of(a.elements()))
    }

    /// Point query on a raw sorted slice; the hot path for sampling loops.
    pub(crate) fn color_slice(&self, vertex: &[u32]) -> u32 {
        debug_assert!(vertex.len() == self.k as usize);
        debug_assert!(vertex.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(vertex.first().is_none_or(|&e| e >= 1));
        debug_assert!(vertex.last().is_none_or(|&e| e <= self.n));
        self.coloring.color_of(vertex)
    }

    /// True iff `a` and `b` are valid vertices, disjoint, and equal-colored.
    /// Issues exactly two point queries on valid vertices and none otherwise.
    pub fn verify_edge(&self, a: &KSubset, b: &KSubset) -> bool {
        if self.check_vertex(a).is_err() || self.check_vertex(b).is_err() {
            return false;
        }
        let ca = self.color(a);
        let cb = self.color(b);
        ca == cb && are_disjoint(a, b)
    }

    /// Subset query answered by enumeration under the default budget.
    pub fn contains_color(&self, color: Color, set: &GroundSubset) -> Result<bool, OracleError> {
        self.subset_oracle(DEFAULT_SUBSET_QUERY_BUDGET).contains_color(color, set)
    }

    /// An enumeration-backed subset oracle with an explicit per-query budget.
    pub fn subset_oracle(&self, budget: u64) -> EnumeratingSubsetOracle {
        EnumeratingSubsetOracle {
            instance: self.clone(),
            budget,
            transcript: Arc::new(QueryTranscript::default()),
        }
    }

    /// All vertices of the instance, in lexicographic order.
    pub fn vertices(&self) -> KSubsets {
        ksubsets_of_pool((1..=self.n).collect(), self.k as usize)
    }

    pub fn vertex_count(&self) -> BigUint {
        binomial(u64::from(self.n), u64::from(self.k))
    }
}

impl fmt::Debug for KneserInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KneserInstance({}, palette {})", self.description, self.palette_size)
    }
}

/// Monotone counters for the three query kinds an experiment spends.
/// Increments are atomic so concurrently running solves may share one.
#[derive(Debug, Default)]
pub struct QueryTranscript {
    point: AtomicU64,
    subset: AtomicU64,
    samples: AtomicU64,
}

impl QueryTranscript {
    pub fn point_queries(&self) -> u64 {
        self.point.load(Ordering::Relaxed)
    }

    pub fn subset_queries(&self) -> u64 {
        self.subset.load(Ordering::Relaxed)
    }

    pub fn samples_drawn(&self) -> u64 {
        self.samples.load(Ordering::Relaxed)
    }

    pub fn record_point(&self, count: u64) {
        self.point.fetch_add(count, Ordering::Relaxed);
    }

    pub fn record_subset(&self, count: u64) {
        self.subset.fetch_add(count, Ordering::Relaxed);
    }

    pub fn record_samples(&self, count: u64) {
        self.samples.fetch_add(count, Ordering::Relaxed);
    }

    /// Folds another transcript into this one (used at run-merge barriers).
    pub fn absorb(&self, other: &QueryTranscript) {
        self.record_point(other.point_queries());
        self.record_subset(other.subset_queries());
        self.record_samples(other.samples_drawn());
    }

    /// The fixed wire form used by determinism checks.
    pub fn serialize_line(&self) -> String {
        format!(
            "point_queries={} subset_queries={} samples_drawn={}",
            self.point_queries(),
            self.subset_queries(),
            self.samples_drawn()
        )
    }
}

impl Clone for QueryTranscript {
    fn clone(&self) -> Self {
        let t = QueryTranscript::default();
        t.absorb(self);
        t
    }
}

/// A counting view over an instance: every point query made through it is
/// recorded on the attached transcript.
pub struct CountingOracle<'a> {
    instance: &'a KneserInstance,
    transcript: &'a QueryTranscript,
}

impl<'a> CountingOracle<'a> {
    pub fn new(instance: &'a KneserInstance, transcript: &'a QueryTranscript) -> Self {
        Self { instance, transcript }
    }

    pub fn instance(&self) -> &KneserInstance {
        self.instance
    }

    pub fn transcript(&self) -> &QueryTranscript {
        self.transcript
    }

    pub fn color(&self, a: &KSubset) -> Color {
        self.transcript.record_point(1);
        self.instance.color(a)
    }

    pub(crate) fn color_slice(&self, vertex: &[u32]) -> u32 {
        self.transcript.record_point(1);
        self.instance.color_slice(vertex)
    }

    /// Counted variant of [`KneserInstance::verify_edge`]: exactly two point
    /// queries on valid vertices.
    pub fn verify_edge(&self, a: &KSubset, b: &KSubset) -> bool {
        if self.instance.check_vertex(a).is_err() || self.instance.check_vertex(b).is_err() {
            return false;
        }
        let ca = self.color(a);
        let cb = self.color(b);
        ca == cb && are_disjoint(a, b)
    }
}

/// Subset-query access to a coloring: does `set` contain a vertex of the
/// given color?
pub trait SubsetColorOracle: Send + Sync {
    fn contains_color(&self, color: Color, set: &GroundSubset) -> Result<bool, OracleError>;
}

/// Subset oracle emulated by enumerating the k-subsets of the queried set and
/// point-querying each one. The enumeration happens inside the oracle, so only
/// the subset-query counter moves; a query whose set needs more enumerations
/// than the budget fails with the offending color and set size.
#[derive(Clone)]
pub struct EnumeratingSubsetOracle {
    instance: KneserInstance,
    budget: u64,
    transcript: Arc<QueryTranscript>,
}

impl EnumeratingSubsetOracle {
    pub fn instance(&self) -> &KneserInstance {
        &self.instance
    }

    pub fn transcript(&self) -> &QueryTranscript {
        &self.transcript
    }
}

impl SubsetColorOracle for EnumeratingSubsetOracle {
    fn contains_color(&self, color: Color, set: &GroundSubset) -> Result<bool, OracleError> {
        let inst = &self.instance;
        if color.0 == 0 || color.0 > inst.palette_size {
            return Err(OracleError::ColorOutOfPalette {
                color: color.0,
                palette: inst.palette_size,
            });
        }
        if let Some(&last) = set.elements().last() {
            if last > inst.n {
                return Err(OracleError::QuerySetOutOfRange { element: last, n: inst.n });
            }
        }
        self.transcript.record_subset(1);
        let k = inst.k as usize;
        if set.len() < k {
            return Ok(false);
        }
        let required = binomial(set.len() as u64, k as u64);
        if required > BigUint::from(self.budget) {
            return Err(OracleError::SubsetBudgetExceeded {
                color: color.0,
                set_size: set.len(),
                required,
                budget: self.budget,
            });
        }
        for vertex in ksubsets_of_pool(set.elements().to_vec(), k) {
            if inst.color_slice(vertex.elements()) == color.0 {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Closed-form subset oracle for the canonical coloring, used to cross-check
/// the enumeration-backed one.
pub struct CanonicalSubsetOracle {
    n: u32,
    k: u32,
}

impl CanonicalSubsetOracle {
    pub fn new(n: u32, k: u32) -> Result<Self, OracleError> {
        if k == 0 || u64::from(n) < 2 * u64::from(k) {
            return Err(OracleError::InvalidDimensions { n, k });
        }
        Ok(Self { n, k })
    }
}

impl SubsetColorOracle for CanonicalSubsetOracle {
    fn contains_color(&self, color: Color, set: &GroundSubset) -> Result<bool, OracleError> {
        let threshold = self.n - 2 * self.k + 1;
        let palette = threshold + 1;
        if color.0 == 0 || color.0 > palette {
            return Err(OracleError::ColorOutOfPalette { color: color.0, palette });
        }
        if let Some(&last) = set.elements().last() {
            if last > self.n {
                return Err(OracleError::QuerySetOutOfRange { element: last, n: self.n });
            }
        }
        let k = self.k as usize;
        if color.0 <= threshold {
            // a vertex with minimum exactly `color` needs the element itself
            // plus k-1 larger ones
            let above = set.elements().iter().filter(|&&e| e > color.0).count();
            Ok(set.contains(color.0) && above >= k - 1)
        } else {
            let tail = set.elements().iter().filter(|&&e| e > threshold).count();
            Ok(tail >= k)
        }
    }
}
