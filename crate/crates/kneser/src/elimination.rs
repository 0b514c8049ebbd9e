//! One randomized element-elimination round.
//!
//! Given a surviving ground set `X` and surviving palette `C` with
//! `|C| = |X| - 2k + 1`, a round either finds a monochromatic edge among
//! sampled vertices, finds a sampled vertex whose color fell outside `C`, or
//! nominates a popular (color, element) pair for removal. The nominated pair
//! carries a quantitative promise: any k-set avoiding the element meets the
//! color class often enough that a later uniform search over this round's
//! ground set finds a partner with probability at least `1/(16n)` per draw.
//! [`verify_popular_pair`] checks that promise exactly by enumeration at desk
//! scale.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use thiserror::Error;

use crate::combinatorics::{
    binomial, ksubsets_of_pool, slices_disjoint, GroundSubset, KSubset, PoolSampler,
};
use crate::oracle::{Color, CountingOracle};

/// Above this many candidate pairs, the post-sampling edge scan switches from
/// the full quadratic scan to disjoint consecutive pairs (still enough pairs
/// for the success guarantee, which only counts m/2 independent trials).
pub const DEFAULT_PAIR_SCAN_BUDGET: u64 = 1 << 23;

/// Work cap for the exact popular-pair verifier.
pub const DEFAULT_VERIFY_BUDGET: u64 = 200_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EliminationError {
    #[error("exact verification needs {required} enumeration steps, over the budget of {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("element {element} is not in the surviving ground set")]
    ElementOutsideGround { element: u32 },
}

/// The three round outcomes.
#[derive(Debug, Clone)]
pub enum EliminationOutcome {
    /// Two disjoint, equal-colored vertices inside the surviving ground set.
    Edge { a: KSubset, b: KSubset },
    /// A vertex whose color is not in the surviving palette.
    OffPalette { a: KSubset, color: Color },
    /// A surviving color and a ground element nominated for elimination.
    PopularPair { color: Color, element: u32 },
}

#[derive(Debug, Clone)]
pub struct EliminationParams {
    /// Samples per round; `None` means the default m = n³ (ambient n). Runs
    /// that override it lose the high-probability guarantee and are labeled
    /// heuristic by the harness.
    pub sample_count_override: Option<u64>,
    /// For k <= 2, enumerate all vertices of the surviving subgraph instead of
    /// sampling; an edge or off-palette vertex always exists there.
    pub exhaustive_small_k: bool,
    /// Full lexicographic pair scan while m² stays within this budget,
    /// consecutive disjoint pairs beyond it.
    pub pair_scan_budget: u64,
}

impl Default for EliminationParams {
    fn default() -> Self {
        Self {
            sample_count_override: None,
            exhaustive_small_k: true,
            pair_scan_budget: DEFAULT_PAIR_SCAN_BUDGET,
        }
    }
}

/// Exact sample statistics of one round, returned with every outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalStats {
    /// Fraction of queried vertices per surviving color.
    pub color_fractions: BTreeMap<Color, BigRational>,
    /// The most frequent surviving color, when the round got as far as
    /// computing one (ties break toward the smallest color index).
    pub leading_color: Option<Color>,
    /// For the leading color: fraction of queried vertices carrying that color
    /// and containing each surviving ground element.
    pub element_fractions: BTreeMap<u32, BigRational>,
    /// Vertices queried this round (sampled, or enumerated on the small-k path).
    pub samples: u64,
}

fn fraction(count: u64, total: u64) -> BigRational {
    BigRational::new(BigInt::from(count), BigInt::from(total))
}

/// Runs one elimination round over the coloring restricted to the k-subsets
/// of `x`.
///
/// Requires `|C| = |X| - 2k + 1` (asserted). The `1 - 2^(-Omega(n))` success
/// guarantee additionally needs `|X| >= 8k^4` and the default sample count;
/// callers may relax both, at the cost of the guarantee. Edge and off-palette
/// outcomes are re-verified against the oracle before they are returned.
pub fn eliminate<R: Rng>(
    n: u32,
    k: u32,
    x: &GroundSubset,
    colors: &BTreeSet<Color>,
    oracle: &CountingOracle<'_>,
    rng: &mut R,
    params: &EliminationParams,
) -> (EliminationOutcome, EmpiricalStats) {
    assert!(k >= 1, "k must be positive");
    assert_eq!(
        colors.len() as u64 + 2 * u64::from(k),
        x.len() as u64 + 1,
        "surviving palette must have |X| - 2k + 1 colors (got |C|={}, |X|={}, k={k})",
        colors.len(),
        x.len(),
    );
    if k <= 2 && params.exhaustive_small_k {
        eliminate_exhaustive(k, x, colors, oracle)
    } else {
        eliminate_sampling(n, k, x, colors, oracle, rng, params)
    }
}

/// Small-k route: enumerate every vertex, complete the monochromatic-edge scan
/// over all color classes, then the off-palette scan. One of the two must
/// succeed, because |C| colors cannot properly color a subgraph of chromatic
/// number |X| - 2k + 2.
fn eliminate_exhaustive(
    k: u32,
    x: &GroundSubset,
    colors: &BTreeSet<Color>,
    oracle: &CountingOracle<'_>,
) -> (EliminationOutcome, EmpiricalStats) {
    let vertices: Vec<KSubset> =
        ksubsets_of_pool(x.elements().to_vec(), k as usize).collect();
    let vertex_colors: Vec<u32> =
        vertices.iter().map(|v| oracle.color_slice(v.elements())).collect();
    let total = vertices.len() as u64;

    let stats = |leading: Option<Color>, gamma: BTreeMap<u32, BigRational>| {
        let mut color_fractions = BTreeMap::new();
        for &c in colors {
            let count = vertex_colors.iter().filter(|&&vc| vc == c.0).count() as u64;
            color_fractions.insert(c, fraction(count, total));
        }
        EmpiricalStats { color_fractions, leading_color: leading, element_fractions: gamma, samples: total }
    };

    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, &c) in vertex_colors.iter().enumerate() {
        classes.entry(c).or_default().push(idx);
    }
    for members in classes.values() {
        for (i, &ia) in members.iter().enumerate() {
            for &ib in &members[i + 1..] {
                if slices_disjoint(vertices[ia].elements(), vertices[ib].elements()) {
                    let a = vertices[ia].clone();
                    let b = vertices[ib].clone();
                    assert!(oracle.verify_edge(&a, &b), "enumerated edge failed re-verification");
                    return (EliminationOutcome::Edge { a, b }, stats(None, BTreeMap::new()));
                }
            }
        }
    }
    for (idx, &c) in vertex_colors.iter().enumerate() {
        if !colors.contains(&Color(c)) {
            let a = vertices[idx].clone();
            let recheck = oracle.color(&a);
            assert_eq!(recheck.0, c, "oracle returned inconsistent colors for {a}");
            return (
                EliminationOutcome::OffPalette { a, color: recheck },
                stats(None, BTreeMap::new()),
            );
        }
    }
    unreachable!(
        "a proper coloring with {} colors of a subgraph of chromatic number {} cannot exist",
        colors.len(),
        x.len() as i64 - 2 * i64::from(k) + 2
    )
}

fn eliminate_sampling<R: Rng>(
    n: u32,
    k: u32,
    x: &GroundSubset,
    colors: &BTreeSet<Color>,
    oracle: &CountingOracle<'_>,
    rng: &mut R,
    params: &EliminationParams,
) -> (EliminationOutcome, EmpiricalStats) {
    let m = params.sample_count_override.unwrap_or_else(|| u64::from(n).pow(3));
    assert!(m >= 1, "sample count must be positive");
    let k_us = k as usize;
    let m_us = usize::try_from(m).expect("sample count fits a usize");

    let mut flat: Vec<u32> = Vec::with_capacity(m_us * k_us);
    let mut sample_colors: Vec<u32> = Vec::with_capacity(m_us);
    let mut sampler = PoolSampler::new(x.elements().to_vec());
    let mut buf: Vec<u32> = Vec::with_capacity(k_us);
    for _ in 0..m {
        sampler.sample_into(k_us, rng, &mut buf);
        sample_colors.push(oracle.color_slice(&buf));
        flat.extend_from_slice(&buf);
    }
    oracle.transcript().record_samples(m);

    let vertex = |t: usize| &flat[t * k_us..(t + 1) * k_us];
    let stats = |leading: Option<Color>, gamma: BTreeMap<u32, BigRational>| {
        let mut color_fractions = BTreeMap::new();
        for &c in colors {
            let count = sample_colors.iter().filter(|&&vc| vc == c.0).count() as u64;
            color_fractions.insert(c, fraction(count, m));
        }
        EmpiricalStats { color_fractions, leading_color: leading, element_fractions: gamma, samples: m }
    };

    // monochromatic-edge scan over the samples
    let full_scan = (m as u128) * (m as u128) <= u128::from(params.pair_scan_budget);
    let mut hit: Option<(usize, usize)> = None;
    if full_scan {
        'outer: for t in 0..m_us {
            for t2 in t + 1..m_us {
                if sample_colors[t] == sample_colors[t2]
                    && slices_disjoint(vertex(t), vertex(t2))
                {
                    hit = Some((t, t2));
                    break 'outer;
                }
            }
        }
    } else {
        let mut t = 0;
        while t + 1 < m_us {
            if sample_colors[t] == sample_colors[t + 1]
                && slices_disjoint(vertex(t), vertex(t + 1))
            {
                hit = Some((t, t + 1));
                break;
            }
            t += 2;
        }
    }
    if let Some((t, t2)) = hit {
        let a = KSubset::from_slice(vertex(t)).expect("samples are sorted");
        let b = KSubset::from_slice(vertex(t2)).expect("samples are sorted");
        assert!(oracle.verify_edge(&a, &b), "sampled edge failed re-verification");
        let s = stats(None, BTreeMap::new());
        return (EliminationOutcome::Edge { a, b }, s);
    }

    // off-palette scan
    for t in 0..m_us {
        if !colors.contains(&Color(sample_colors[t])) {
            let a = KSubset::from_slice(vertex(t)).expect("samples are sorted");
            let recheck = oracle.color(&a);
            assert_eq!(recheck.0, sample_colors[t], "oracle returned inconsistent colors for {a}");
            let s = stats(None, BTreeMap::new());
            return (EliminationOutcome::OffPalette { a, color: recheck }, s);
        }
    }

    // every sample colored inside C: nominate the most popular color, then the
    // element most popular within it
    let mut class_counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &c in &sample_colors {
        *class_counts.entry(c).or_default() += 1;
    }
    let mut leading = *colors.iter().next().expect("palette is non-empty");
    let mut best = 0u64;
    for &c in colors {
        let count = class_counts.get(&c.0).copied().unwrap_or(0);
        if count > best {
            best = count;
            leading = c;
        }
    }

    let mut element_counts: BTreeMap<u32, u64> = BTreeMap::new();
    for t in 0..m_us {
        if sample_colors[t] == leading.0 {
            for &e in vertex(t) {
                *element_counts.entry(e).or_default() += 1;
            }
        }
    }
    let mut popular_element = x.elements()[0];
    let mut best_element = 0u64;
    let mut gamma = BTreeMap::new();
    for &e in x.elements() {
        let count = element_counts.get(&e).copied().unwrap_or(0);
        gamma.insert(e, fraction(count, m));
        if count > best_element {
            best_element = count;
            popular_element = e;
        }
    }

    let s = stats(Some(leading), gamma);
    (EliminationOutcome::PopularPair { color: leading, element: popular_element }, s)
}

/// Exact check of the popular-pair promise: the minimum, over all k-subsets
/// `A` of `[n]` avoiding `element`, of the probability that a uniform vertex
/// `B` of the k-subsets of `x` has the given color and is disjoint from `A`.
///
/// Only the intersection `A ∩ X` matters, so the minimization enumerates
/// intersection patterns inside `X` instead of all of `C([n], k)`. Work is
/// capped by `budget` elementary steps.
pub fn verify_popular_pair(
    n: u32,
    k: u32,
    x: &GroundSubset,
    oracle: &CountingOracle<'_>,
    color: Color,
    element: u32,
    budget: u64,
) -> Result<BigRational, EliminationError> {
    if !x.contains(element) {
        return Err(EliminationError::ElementOutsideGround { element });
    }
    let k_us = k as usize;
    let x_len = x.len() as u64;
    let vertex_total = binomial(x_len, u64::from(k));
    if vertex_total > BigUint::from(budget) {
        return Err(EliminationError::BudgetExceeded { required: vertex_total, budget });
    }

    // positions inside X (1-based) double as bit indices, so |X| <= 128 gets
    // mask-based disjointness even when element labels run higher
    let use_masks = x.len() <= 128;
    let position_of = |e: u32| x.elements().partition_point(|&y| y < e) as u32 + 1;

    let mut class_slices: Vec<Vec<u32>> = Vec::new();
    let mut class_masks: Vec<u128> = Vec::new();
    for v in ksubsets_of_pool(x.elements().to_vec(), k_us) {
        if oracle.color_slice(v.elements()) == color.0 {
            if use_masks {
                let mut mask = 0u128;
                for &e in v.elements() {
                    mask |= 1u128 << (position_of(e) - 1);
                }
                class_masks.push(mask);
            } else {
                class_slices.push(v.elements().to_vec());
            }
        }
    }
    let class_size =
        if use_masks { class_masks.len() as u64 } else { class_slices.len() as u64 };

    // realizable intersection patterns: p elements inside X \ {element}, the
    // remaining k - p outside X
    let outside = u64::from(n) - x_len;
    let p_min = u64::from(k).saturating_sub(outside);
    let pool: Vec<u32> =
        x.elements().iter().copied().filter(|&e| e != element).collect();
    let mut pattern_total = BigUint::zero();
    for p in p_min..=u64::from(k).min(pool.len() as u64) {
        pattern_total += binomial(pool.len() as u64, p);
    }
    let scan_work = &pattern_total * class_size + vertex_total.clone();
    if scan_work > BigUint::from(budget) {
        return Err(EliminationError::BudgetExceeded { required: scan_work, budget });
    }

    let mut min_count: Option<u64> = None;
    for p in p_min..=u64::from(k).min(pool.len() as u64) {
        for pattern in ksubsets_of_pool(pool.clone(), p as usize) {
            let count = if use_masks {
                let mut mask = 0u128;
                for &e in pattern.elements() {
                    mask |= 1u128 << (position_of(e) - 1);
                }
                class_masks.iter().filter(|&&m| m & mask == 0).count() as u64
            } else {
                class_slices
                    .iter()
                    .filter(|s| slices_disjoint(s, pattern.elements()))
                    .count() as u64
            };
            if min_count.is_none_or(|m| count < m) {
                min_count = Some(count);
            }
        }
    }
    let min_count = min_count.expect("some pattern is always realizable when n > k");
    Ok(BigRational::new(BigInt::from(min_count), BigInt::from(vertex_total)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{are_disjoint, enumerate_ksubsets};
    use crate::oracle::{KneserInstance, QueryTranscript};
    use num::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn palette_set(colors: impl IntoIterator<Item = u32>) -> BTreeSet<Color> {
        colors.into_iter().map(Color).collect()
    }

    fn constant_instance(n: u32, k: u32) -> KneserInstance {
        let full = GroundSubset::full(n);
        let mut table = HashMap::new();
        for v in enumerate_ksubsets(&full, k as usize) {
            table.insert(v.elements().to_vec(), 1u32);
        }
        KneserInstance::from_table(n, k, n - 2 * k + 1, table, format!("constant(n={n},k={k})"))
            .unwrap()
    }

    #[test]
    fn constant_coloring_yields_an_edge() {
        let inst = constant_instance(9, 3);
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(9);
        let colors = palette_set(1..=4);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (outcome, stats) =
            eliminate(9, 3, &x, &colors, &oracle, &mut rng, &EliminationParams::default());
        match outcome {
            EliminationOutcome::Edge { a, b } => {
                assert!(inst.verify_edge(&a, &b));
            }
            other => panic!("expected an edge, got {other:?}"),
        }
        assert_eq!(stats.color_fractions[&Color(1)], BigRational::one());
    }

    #[test]
    fn canonical_overflow_color_is_reported_off_palette() {
        // the canonical coloring restricted to the problem palette leaves the
        // vertices inside the last 2k-1 elements off-palette
        let inst = KneserInstance::canonical(14, 3).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(14);
        let colors = palette_set(1..=9);
        for seed in 0..5u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (outcome, stats) =
                eliminate(14, 3, &x, &colors, &oracle, &mut rng, &EliminationParams::default());
            match outcome {
                EliminationOutcome::OffPalette { a, color } => {
                    assert_eq!(color, Color(10));
                    assert!(a.elements().iter().all(|&e| e >= 10));
                }
                other => panic!("seed {seed}: expected off-palette, got {other:?}"),
            }
            let total: BigRational = stats.color_fractions.values().sum();
            assert!(total < BigRational::one(), "off-palette samples exist");
        }
    }

    #[test]
    fn hard_instance_small_samples_nominate_the_popular_pair() {
        // the hard family's color classes are min-classes, so the nominated
        // element coincides with the nominated color
        let inst = KneserInstance::hard(20, 3, 11).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(20);
        let colors = palette_set(1..=15);
        let params = EliminationParams {
            sample_count_override: Some(500),
            ..EliminationParams::default()
        };
        let mut popular_seen = 0;
        for seed in 0..10u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (outcome, stats) = eliminate(20, 3, &x, &colors, &oracle, &mut rng, &params);
            match outcome {
                EliminationOutcome::PopularPair { color, element } => {
                    popular_seen += 1;
                    assert_eq!(element, color.0, "min-class popular element");
                    let alpha = &stats.color_fractions[&color];
                    for gamma in stats.element_fractions.values() {
                        assert!(gamma <= alpha, "element fraction exceeds class fraction");
                    }
                    let total: BigRational = stats.color_fractions.values().sum();
                    assert_eq!(total, BigRational::one());
                }
                EliminationOutcome::Edge { a, b } => {
                    assert!(inst.verify_edge(&a, &b));
                }
                EliminationOutcome::OffPalette { .. } => {
                    panic!("hard instances color everything inside the palette")
                }
            }
        }
        assert!(popular_seen >= 5, "only {popular_seen} popular-pair outcomes in 10 seeds");
    }

    #[test]
    fn elimination_is_deterministic() {
        let inst = KneserInstance::hard(18, 3, 4).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(18);
        let colors = palette_set(1..=13);
        let params = EliminationParams {
            sample_count_override: Some(300),
            ..EliminationParams::default()
        };
        let run = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            eliminate(18, 3, &x, &colors, &oracle, &mut rng, &params)
        };
        let (o1, s1) = run(9);
        let (o2, s2) = run(9);
        assert_eq!(format!("{o1:?}"), format!("{o2:?}"));
        assert_eq!(s1, s2);
    }

    #[test]
    #[should_panic(expected = "surviving palette")]
    fn palette_size_mismatch_panics() {
        let inst = KneserInstance::hard(10, 2, 0).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(10);
        let colors = palette_set(1..=3); // should be 7
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let _ = eliminate(10, 2, &x, &colors, &oracle, &mut rng, &EliminationParams::default());
    }

    #[test]
    fn exhaustive_small_k_finds_the_deterministic_edge() {
        let inst = KneserInstance::hard(12, 2, 3).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(12);
        let colors = palette_set(1..=9);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (o1, _) =
            eliminate(12, 2, &x, &colors, &oracle, &mut rng, &EliminationParams::default());
        let (o2, _) =
            eliminate(12, 2, &x, &colors, &oracle, &mut rng, &EliminationParams::default());
        match (&o1, &o2) {
            (EliminationOutcome::Edge { a, b }, EliminationOutcome::Edge { a: a2, b: b2 }) => {
                assert!(inst.verify_edge(a, b));
                assert_eq!((a, b), (a2, b2), "exhaustive path is deterministic");
            }
            other => panic!("expected deterministic edges, got {other:?}"),
        }
    }

    #[test]
    fn matching_class_without_popular_element_yields_edges() {
        // color 1 paints the endpoints of a greedily built near-perfect
        // matching, so no element covers more than half of the class
        let n = 12u32;
        let k = 3u32;
        let full = GroundSubset::full(n);
        let vertices: Vec<KSubset> = enumerate_ksubsets(&full, k as usize).collect();
        let mut matched = vec![false; vertices.len()];
        let mut table: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut class_one = 0u64;
        for i in 0..vertices.len() {
            if matched[i] {
                continue;
            }
            if let Some(j) = (i + 1..vertices.len())
                .find(|&j| !matched[j] && are_disjoint(&vertices[i], &vertices[j]))
            {
                matched[i] = true;
                matched[j] = true;
                table.insert(vertices[i].elements().to_vec(), 1);
                table.insert(vertices[j].elements().to_vec(), 1);
                class_one += 2;
            }
        }
        let mut filler = 2u32;
        let palette = n - 2 * k + 1;
        for (i, v) in vertices.iter().enumerate() {
            if !matched[i] {
                table.insert(v.elements().to_vec(), filler);
                filler = if filler == palette { 2 } else { filler + 1 };
            }
        }
        for e in 1..=n {
            let covering = vertices
                .iter()
                .filter(|v| table[v.elements()] == 1 && v.contains(e))
                .count() as u64;
            assert!(2 * covering <= class_one, "element {e} too popular");
        }

        let inst = KneserInstance::from_table(n, k, palette, table, "matching-class").unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let colors = palette_set(1..=palette);
        let mut edges = 0;
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (outcome, _) =
                eliminate(n, k, &full, &colors, &oracle, &mut rng, &EliminationParams::default());
            if matches!(outcome, EliminationOutcome::Edge { .. }) {
                edges += 1;
            }
        }
        assert!(edges >= 99, "only {edges}/100 runs returned an edge");
    }

    #[test]
    fn verifier_reports_zero_for_a_killable_class() {
        // exactly one vertex carries color 1; patterns hitting it drive the
        // minimum to zero
        let n = 6u32;
        let full = GroundSubset::full(n);
        let mut table = HashMap::new();
        for v in enumerate_ksubsets(&full, 2) {
            let c = if v.elements() == [1, 2] { 1u32 } else { 2 };
            table.insert(v.elements().to_vec(), c);
        }
        let inst = KneserInstance::from_table(n, 2, 3, table, "unique-class").unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let p = verify_popular_pair(n, 2, &full, &oracle, Color(1), 3, DEFAULT_VERIFY_BUDGET)
            .unwrap();
        assert_eq!(p, BigRational::zero());
    }

    #[test]
    fn verifier_matches_direct_count_for_a_star_class() {
        // class 1 is the star at element 1; every pattern avoiding 1 removes
        // exactly two of its seven members
        let n = 8u32;
        let full = GroundSubset::full(n);
        let mut table = HashMap::new();
        for v in enumerate_ksubsets(&full, 2) {
            let c = if v.contains(1) { 1u32 } else { 2 };
            table.insert(v.elements().to_vec(), c);
        }
        let inst = KneserInstance::from_table(n, 2, 5, table, "star-class").unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let p = verify_popular_pair(n, 2, &full, &oracle, Color(1), 1, DEFAULT_VERIFY_BUDGET)
            .unwrap();
        assert_eq!(p, BigRational::new(BigInt::from(5), BigInt::from(28)));
    }

    #[test]
    fn verifier_budget_is_enforced() {
        let inst = KneserInstance::hard(16, 2, 0).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let full = GroundSubset::full(16);
        assert!(matches!(
            verify_popular_pair(16, 2, &full, &oracle, Color(1), 1, 10),
            Err(EliminationError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            verify_popular_pair(16, 2, &full, &oracle, Color(1), 99, DEFAULT_VERIFY_BUDGET),
            Err(EliminationError::ElementOutsideGround { element: 99 })
        ));
    }

    #[test]
    fn sampled_popular_pair_meets_the_promise_at_pair_scale() {
        let n = 30u32;
        let inst = KneserInstance::hard(n, 2, 21).unwrap();
        let transcript = QueryTranscript::default();
        let oracle = CountingOracle::new(&inst, &transcript);
        let x = GroundSubset::full(n);
        let colors = palette_set(1..=27);
        let params = EliminationParams {
            sample_count_override: Some(1000),
            exhaustive_small_k: false,
            pair_scan_budget: 0,
        };
        let floor = BigRational::new(BigInt::one(), BigInt::from(16 * i64::from(n)));
        let mut checked = 0;
        for seed in 0..8u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (outcome, _) = eliminate(n, 2, &x, &colors, &oracle, &mut rng, &params);
            if let EliminationOutcome::PopularPair { color, element } = outcome {
                let p = verify_popular_pair(
                    n,
                    2,
                    &x,
                    &oracle,
                    color,
                    element,
                    DEFAULT_VERIFY_BUDGET,
                )
                .unwrap();
                assert!(p >= floor, "seed {seed}: min probability {p} below 1/(16n)");
                checked += 1;
            }
        }
        assert!(checked >= 3, "only {checked} popular pairs across 8 seeds");
    }
}
