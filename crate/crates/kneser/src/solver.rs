//! The three complete solvers for a Kneser instance.
//!
//! [`solve_fpt`] runs the randomized fixed-parameter algorithm: up to
//! `n - n_stop` element-elimination rounds shrink the ground set and palette in
//! lockstep, then the surviving subgraph (whose size depends only on k) is
//! enumerated outright. A vertex found wearing an eliminated color is walked
//! back to the round that eliminated it, where uniform sampling finds its
//! partner with high probability.
//!
//! [`solve_schrijver`] enumerates only the stable k-subsets (the Schrijver
//! subgraph, which has the same chromatic number), and [`solve_bruteforce`]
//! enumerates everything; both are deterministic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::combinatorics::{
    is_stable, ksubsets_of_pool, slices_disjoint, GroundSubset, KSubset, PoolSampler,
};
use crate::elimination::{eliminate, EliminationOutcome, EliminationParams};
use crate::oracle::{Color, CountingOracle, KneserInstance, QueryTranscript};

/// Vertex-enumeration cap for the brute-force reference solver.
pub const DEFAULT_BRUTE_FORCE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("instance has {vertices} vertices, over the enumeration budget of {budget}")]
    BudgetExceeded { vertices: BigUint, budget: u64 },
    #[error("malformed result line: {reason}")]
    MalformedResultLine { reason: String },
}

/// Which solver to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Fpt,
    Schrijver,
    Brute,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Strategy::Fpt => "fpt",
            Strategy::Schrijver => "schrijver",
            Strategy::Brute => "brute",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fpt" => Ok(Strategy::Fpt),
            "schrijver" => Ok(Strategy::Schrijver),
            "brute" => Ok(Strategy::Brute),
            other => Err(format!("unknown strategy `{other}` (expected fpt|schrijver|brute)")),
        }
    }
}

/// What a solve run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverOutcome {
    /// A verified monochromatic edge.
    Solution { a: KSubset, b: KSubset },
    /// The randomized back-reference search exhausted its trials.
    Failure,
    /// A vertex wore a color that was never part of the declared problem
    /// palette nor eliminated in any round: the instance broke its contract.
    PaletteViolation { a: KSubset, color: Color },
}

/// Outcome plus run metadata. `serialize_line` is the fixed wire form the
/// harness parses; it deliberately excludes wall-clock time.
#[derive(Debug, Clone)]
pub struct SolverResult {
    pub outcome: SolverOutcome,
    pub seed: u64,
    pub iterations: u64,
    pub point_queries: u64,
    pub subset_queries: u64,
    pub samples_drawn: u64,
    pub phase2_vertices: u64,
    pub elapsed: Duration,
}

impl SolverResult {
    pub fn is_solution(&self) -> bool {
        matches!(self.outcome, SolverOutcome::Solution { .. })
    }

    /// `result=<solution|failure|palette-violation> A=<comma-list> B=<comma-list>
    /// seed=<u64> queries=<int> iterations=<int>`
    pub fn serialize_line(&self) -> String {
        let (tag, a, b) = match &self.outcome {
            SolverOutcome::Solution { a, b } => ("solution", a.comma_list(), b.comma_list()),
            SolverOutcome::Failure => ("failure", String::new(), String::new()),
            SolverOutcome::PaletteViolation { a, .. } => {
                ("palette-violation", a.comma_list(), String::new())
            }
        };
        format!(
            "result={tag} A={a} B={b} seed={} queries={} iterations={}",
            self.seed, self.point_queries, self.iterations
        )
    }
}

/// The parsed form of a result line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedResultLine {
    pub result: String,
    pub a: KSubset,
    pub b: KSubset,
    pub seed: u64,
    pub queries: u64,
    pub iterations: u64,
}

pub fn parse_result_line(line: &str) -> Result<ParsedResultLine, SolverError> {
    let malformed = |reason: &str| SolverError::MalformedResultLine { reason: reason.into() };
    let mut fields = Vec::new();
    for token in line.split_whitespace() {
        let (key, value) =
            token.split_once('=').ok_or_else(|| malformed(&format!("token `{token}`")))?;
        fields.push((key, value));
    }
    let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    if keys != ["result", "A", "B", "seed", "queries", "iterations"] {
        return Err(malformed("expected fields result A B seed queries iterations"));
    }
    let value = |idx: usize| fields[idx].1;
    if !matches!(value(0), "solution" | "failure" | "palette-violation") {
        return Err(malformed(&format!("unknown result tag `{}`", value(0))));
    }
    Ok(ParsedResultLine {
        result: value(0).to_string(),
        a: KSubset::parse_comma_list(value(1)).map_err(|e| malformed(&e.to_string()))?,
        b: KSubset::parse_comma_list(value(2)).map_err(|e| malformed(&e.to_string()))?,
        seed: value(3).parse().map_err(|_| malformed("seed"))?,
        queries: value(4).parse().map_err(|_| malformed("queries"))?,
        iterations: value(5).parse().map_err(|_| malformed("iterations"))?,
    })
}

/// Knobs of the fixed-parameter solver.
#[derive(Debug, Clone, Default)]
pub struct SolverParams {
    /// Stop eliminating once the ground set would reach this size
    /// (default 8k^4, the threshold the analysis needs). Smaller values are
    /// heuristic.
    pub n_stop_override: Option<u32>,
    pub elimination: EliminationParams,
    /// Re-run the whole solve with a derived seed this many times on Failure.
    /// Query counters accumulate across attempts.
    pub retry_count: u32,
    /// Trials of the back-reference search (default n²).
    pub backref_sample_count_override: Option<u64>,
}

impl SolverParams {
    fn n_stop(&self, k: u32) -> u64 {
        match self.n_stop_override {
            Some(v) => u64::from(v),
            None => 8u64.saturating_mul(u64::from(k).saturating_pow(4)),
        }
    }

    fn backref_trials(&self, n: u32) -> u64 {
        self.backref_sample_count_override
            .unwrap_or_else(|| u64::from(n).saturating_pow(2))
    }
}

/// One elimination round's footprint: which color and element were removed,
/// and the ground set the round sampled from (needed to reproduce the
/// back-reference distribution).
#[derive(Debug, Clone)]
pub struct HistoryRecord {
    pub round: u64,
    pub color: Color,
    pub element: u32,
    pub ground_before: GroundSubset,
}

/// The surviving ground set and palette, plus the elimination history.
/// The palette invariant |C| = |X| - 2k + 1 holds after every transition.
#[derive(Debug, Clone)]
pub struct GroundState {
    k: u32,
    pub ground: GroundSubset,
    pub palette: BTreeSet<Color>,
    pub history: Vec<HistoryRecord>,
}

impl GroundState {
    pub fn initial(n: u32, k: u32) -> Self {
        let palette: BTreeSet<Color> = (1..=n - 2 * k + 1).map(Color).collect();
        let state = Self { k, ground: GroundSubset::full(n), palette, history: Vec::new() };
        state.assert_invariant();
        state
    }

    /// Removes one (color, element) pair, recording the snapshot needed to
    /// sample from this round's ground set later.
    pub fn apply_elimination(&mut self, round: u64, color: Color, element: u32) {
        assert!(self.palette.contains(&color), "eliminated color must be in the palette");
        assert!(self.ground.contains(element), "eliminated element must be in the ground set");
        self.history.push(HistoryRecord {
            round,
            color,
            element,
            ground_before: self.ground.clone(),
        });
        self.palette.remove(&color);
        self.ground = self.ground.remove(element);
        self.assert_invariant();
    }

    fn assert_invariant(&self) {
        assert_eq!(
            self.palette.len() as u64 + 2 * u64::from(self.k),
            self.ground.len() as u64 + 1,
            "palette invariant |C| = |X| - 2k + 1 broken"
        );
    }
}

/// The randomized fixed-parameter solver.
///
/// Phase 1 runs element elimination while the ground set is larger than
/// `n_stop`; phase 2 enumerates the rest. Every returned edge is verified.
/// Failure is a value (the Las-Vegas search may exhaust its trials), not an
/// error.
pub fn solve_fpt(instance: &KneserInstance, seed: u64, params: &SolverParams) -> SolverResult {
    let start = Instant::now();
    let transcript = QueryTranscript::default();
    let mut attempt_seed = seed;
    let mut attempts_left = params.retry_count;
    loop {
        let (outcome, iterations, phase2) =
            solve_fpt_attempt(instance, attempt_seed, params, &transcript);
        if !matches!(outcome, SolverOutcome::Failure) || attempts_left == 0 {
            return SolverResult {
                outcome,
                seed,
                iterations,
                point_queries: transcript.point_queries(),
                subset_queries: transcript.subset_queries(),
                samples_drawn: transcript.samples_drawn(),
                phase2_vertices: phase2,
                elapsed: start.elapsed(),
            };
        }
        attempts_left -= 1;
        attempt_seed = crate::oracle::splitmix64(attempt_seed);
    }
}

fn solve_fpt_attempt(
    instance: &KneserInstance,
    seed: u64,
    params: &SolverParams,
    transcript: &QueryTranscript,
) -> (SolverOutcome, u64, u64) {
    let counting = CountingOracle::new(instance, transcript);
    let n = instance.n();
    let k = instance.k();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rounds = u64::from(n).saturating_sub(params.n_stop(k));
    let mut state = GroundState::initial(n, k);
    let mut iterations = 0u64;

    for round in 0..rounds {
        let (outcome, _stats) = eliminate(
            n,
            k,
            &state.ground,
            &state.palette,
            &counting,
            &mut rng,
            &params.elimination,
        );
        iterations += 1;
        match outcome {
            EliminationOutcome::Edge { a, b } => {
                debug_assert!(instance.verify_edge(&a, &b));
                return (SolverOutcome::Solution { a, b }, iterations, 0);
            }
            EliminationOutcome::OffPalette { a, color } => {
                let outcome =
                    back_reference(&state, &counting, &mut rng, params, n, k, a, color);
                return (outcome, iterations, 0);
            }
            EliminationOutcome::PopularPair { color, element } => {
                state.apply_elimination(round, color, element);
            }
        }
    }

    // phase 2: enumerate the kernel-sized remainder
    let mut vertices: Vec<KSubset> = Vec::new();
    let mut vertex_colors: Vec<u32> = Vec::new();
    let mut off_palette: Option<(KSubset, Color)> = None;
    for v in ksubsets_of_pool(state.ground.elements().to_vec(), k as usize) {
        let c = counting.color_slice(v.elements());
        if off_palette.is_none() && !state.palette.contains(&Color(c)) {
            off_palette = Some((v.clone(), Color(c)));
        }
        vertices.push(v);
        vertex_colors.push(c);
    }
    let phase2 = vertices.len() as u64;

    if let Some((a, color)) = off_palette {
        let outcome = back_reference(&state, &counting, &mut rng, params, n, k, a, color);
        return (outcome, iterations, phase2);
    }

    // all colors survive in C_s, so the remainder is under-colored and must
    // span a monochromatic edge; scan classes smallest-first
    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, &c) in vertex_colors.iter().enumerate() {
        classes.entry(c).or_default().push(idx);
    }
    let mut order: Vec<(usize, u32)> =
        classes.iter().map(|(&c, members)| (members.len(), c)).collect();
    order.sort_unstable();
    for (_, color) in order {
        let members = &classes[&color];
        for (i, &ia) in members.iter().enumerate() {
            for &ib in &members[i + 1..] {
                if slices_disjoint(vertices[ia].elements(), vertices[ib].elements()) {
                    let a = vertices[ia].clone();
                    let b = vertices[ib].clone();
                    debug_assert!(instance.verify_edge(&a, &b));
                    return (SolverOutcome::Solution { a, b }, iterations, phase2);
                }
            }
        }
    }
    unreachable!(
        "{} colors cannot properly color a graph of chromatic number {}",
        state.palette.len(),
        state.ground.len() as i64 - 2 * i64::from(k) + 2
    )
}

/// Samples this round's ground set for a partner of an off-palette vertex.
/// The vertex cannot contain the eliminated element (it survived every later
/// ground set), which is exactly what makes a disjoint partner likely.
#[allow(clippy::too_many_arguments)]
fn back_reference<R: Rng>(
    state: &GroundState,
    counting: &CountingOracle<'_>,
    rng: &mut R,
    params: &SolverParams,
    n: u32,
    k: u32,
    a: KSubset,
    color: Color,
) -> SolverOutcome {
    let Some(record) = state.history.iter().find(|r| r.color == color) else {
        return SolverOutcome::PaletteViolation { a, color };
    };
    assert!(
        !a.contains(record.element),
        "vertex {a} colored {color} must avoid eliminated element {}",
        record.element
    );
    let trials = params.backref_trials(n);
    let mut sampler = PoolSampler::new(record.ground_before.elements().to_vec());
    let mut buf = Vec::with_capacity(k as usize);
    let mut drawn = 0u64;
    for _ in 0..trials {
        sampler.sample_into(k as usize, rng, &mut buf);
        drawn += 1;
        let c = counting.color_slice(&buf);
        if c == color.0 && slices_disjoint(&buf, a.elements()) {
            counting.transcript().record_samples(drawn);
            let b = KSubset::from_slice(&buf).expect("samples are sorted");
            debug_assert!(counting.instance().verify_edge(&a, &b));
            return SolverOutcome::Solution { a, b };
        }
    }
    counting.transcript().record_samples(drawn);
    SolverOutcome::Failure
}

/// Deterministic solver over the Schrijver subgraph: queries the color of
/// every stable k-subset (exactly `schrijver_vertex_count(n, k)` point
/// queries), then scans each color class for a disjoint pair. Cannot fail on
/// a valid problem instance, because the stable vertices alone need
/// `n - 2k + 2` colors.
pub fn solve_schrijver(instance: &KneserInstance) -> SolverResult {
    let start = Instant::now();
    let transcript = QueryTranscript::default();
    let counting = CountingOracle::new(instance, &transcript);
    let n = instance.n();
    let k = instance.k();

    let mut vertices: Vec<KSubset> = Vec::new();
    let mut vertex_colors: Vec<u32> = Vec::new();
    for v in ksubsets_of_pool((1..=n).collect(), k as usize) {
        if is_stable(&v, n) {
            let c = counting.color_slice(v.elements());
            vertices.push(v);
            vertex_colors.push(c);
        }
    }
    let enumerated = vertices.len() as u64;

    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, &c) in vertex_colors.iter().enumerate() {
        classes.entry(c).or_default().push(idx);
    }
    let mut outcome = SolverOutcome::Failure;
    'scan: for members in classes.values() {
        for (i, &ia) in members.iter().enumerate() {
            for &ib in &members[i + 1..] {
                if slices_disjoint(vertices[ia].elements(), vertices[ib].elements()) {
                    let a = vertices[ia].clone();
                    let b = vertices[ib].clone();
                    debug_assert!(instance.verify_edge(&a, &b));
                    outcome = SolverOutcome::Solution { a, b };
                    break 'scan;
                }
            }
        }
    }
    SolverResult {
        outcome,
        seed: 0,
        iterations: 0,
        point_queries: transcript.point_queries(),
        subset_queries: transcript.subset_queries(),
        samples_drawn: transcript.samples_drawn(),
        phase2_vertices: enumerated,
        elapsed: start.elapsed(),
    }
}

/// Enumerates every vertex and returns the lexicographically first disjoint
/// equal-colored pair. The reference oracle for the other solvers.
pub fn solve_bruteforce(instance: &KneserInstance) -> Result<SolverResult, SolverError> {
    solve_bruteforce_with_budget(instance, DEFAULT_BRUTE_FORCE_BUDGET)
}

pub fn solve_bruteforce_with_budget(
    instance: &KneserInstance,
    budget: u64,
) -> Result<SolverResult, SolverError> {
    let vertex_total = instance.vertex_count();
    if vertex_total > BigUint::from(budget) {
        return Err(SolverError::BudgetExceeded { vertices: vertex_total, budget });
    }
    let start = Instant::now();
    let transcript = QueryTranscript::default();
    let counting = CountingOracle::new(instance, &transcript);

    let vertices: Vec<KSubset> = instance.vertices().collect();
    let vertex_colors: Vec<u32> =
        vertices.iter().map(|v| counting.color_slice(v.elements())).collect();
    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, &c) in vertex_colors.iter().enumerate() {
        classes.entry(c).or_default().push(idx);
    }

    let mut outcome = SolverOutcome::Failure;
    'scan: for (ia, a) in vertices.iter().enumerate() {
        let members = &classes[&vertex_colors[ia]];
        let pos = members.partition_point(|&m| m <= ia);
        for &ib in &members[pos..] {
            if slices_disjoint(a.elements(), vertices[ib].elements()) {
                let b = vertices[ib].clone();
                debug_assert!(instance.verify_edge(a, &b));
                outcome = SolverOutcome::Solution { a: a.clone(), b };
                break 'scan;
            }
        }
    }
    Ok(SolverResult {
        outcome,
        seed: 0,
        iterations: 0,
        point_queries: transcript.point_queries(),
        subset_queries: transcript.subset_queries(),
        samples_drawn: transcript.samples_drawn(),
        phase2_vertices: vertices.len() as u64,
        elapsed: start.elapsed(),
    })
}

/// Dispatch helper used by the harness and the CLI.
pub fn solve_with_strategy(
    instance: &KneserInstance,
    strategy: Strategy,
    seed: u64,
    params: &SolverParams,
) -> Result<SolverResult, SolverError> {
    match strategy {
        Strategy::Fpt => Ok(solve_fpt(instance, seed, params)),
        Strategy::Schrijver => Ok(solve_schrijver(instance)),
        Strategy::Brute => solve_bruteforce(instance),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_ksubsets, schrijver_vertex_count};
    use std::collections::HashMap;

    fn assert_solution(instance: &KneserInstance, result: &SolverResult) {
        match &result.outcome {
            SolverOutcome::Solution { a, b } => {
                assert!(instance.verify_edge(a, b), "unverified edge {a} {b}");
            }
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn fpt_phase_two_only_matches_brute_force_existence() {
        for seed in 0..50u64 {
            let inst = KneserInstance::random_uniform(10, 2, seed).unwrap();
            let fpt = solve_fpt(&inst, seed, &SolverParams::default());
            assert_solution(&inst, &fpt);
            assert_eq!(fpt.iterations, 0, "n=10 < n_stop=128 means no elimination rounds");
            let brute = solve_bruteforce(&inst).unwrap();
            assert_solution(&inst, &brute);
        }
    }

    #[test]
    fn fpt_hard_instance_with_elimination_rounds() {
        let inst = KneserInstance::hard(132, 2, 7).unwrap();
        let result = solve_fpt(&inst, 1, &SolverParams::default());
        assert_solution(&inst, &result);
        // k = 2 defaults to the exhaustive elimination route, which finds the
        // adversarial edge in the very first round
        assert_eq!(result.iterations, 1);
    }

    #[test]
    fn fpt_constant_coloring_returns_an_edge_immediately() {
        let full = GroundSubset::full(14);
        let mut table = HashMap::new();
        for v in enumerate_ksubsets(&full, 3) {
            table.insert(v.elements().to_vec(), 1u32);
        }
        let inst = KneserInstance::from_table(14, 3, 9, table, "constant").unwrap();
        let params = SolverParams {
            n_stop_override: Some(10),
            ..SolverParams::default()
        };
        let result = solve_fpt(&inst, 0, &params);
        assert_solution(&inst, &result);
        assert_eq!(result.iterations, 1);
    }

    #[test]
    fn fpt_reports_palette_violation_on_canonical_coloring() {
        let inst = KneserInstance::canonical(10, 2).unwrap();
        let result = solve_fpt(&inst, 3, &SolverParams::default());
        match result.outcome {
            SolverOutcome::PaletteViolation { color, .. } => {
                assert_eq!(color, Color(8), "the overflow color is the violation witness");
            }
            other => panic!("expected palette violation, got {other:?}"),
        }
    }

    #[test]
    fn fpt_heuristic_rounds_at_k3_still_solve() {
        for seed in 0..10u64 {
            let inst = KneserInstance::hard(20, 3, seed).unwrap();
            let params = SolverParams {
                n_stop_override: Some(17),
                elimination: EliminationParams {
                    sample_count_override: Some(2000),
                    ..EliminationParams::default()
                },
                ..SolverParams::default()
            };
            let result = solve_fpt(&inst, seed.wrapping_mul(31).wrapping_add(5), &params);
            assert_solution(&inst, &result);
            assert!(result.iterations <= 3);
        }
    }

    #[test]
    fn schrijver_forced_instance() {
        let inst = KneserInstance::random_uniform(4, 2, 99).unwrap();
        let result = solve_schrijver(&inst);
        match &result.outcome {
            SolverOutcome::Solution { a, b } => {
                assert_eq!(a.elements(), [1, 3]);
                assert_eq!(b.elements(), [2, 4]);
            }
            other => panic!("expected the antipodal pair, got {other:?}"),
        }
        assert_eq!(result.point_queries, 2);
    }

    #[test]
    fn schrijver_solves_random_instances_with_stable_endpoints() {
        for seed in 0..100u64 {
            let inst = KneserInstance::random_uniform(6, 2, seed).unwrap();
            let result = solve_schrijver(&inst);
            match &result.outcome {
                SolverOutcome::Solution { a, b } => {
                    assert!(inst.verify_edge(a, b));
                    assert!(is_stable(a, 6) && is_stable(b, 6));
                }
                other => panic!("seed {seed}: {other:?}"),
            }
        }
    }

    #[test]
    fn schrijver_query_count_equals_vertex_count() {
        use num::ToPrimitive;
        let inst = KneserInstance::random_uniform(12, 3, 5).unwrap();
        let result = solve_schrijver(&inst);
        let expected = schrijver_vertex_count(12, 3).unwrap().to_u64().unwrap();
        assert_eq!(result.point_queries, expected);
        assert_eq!(result.phase2_vertices, expected);
    }

    #[test]
    fn bruteforce_reference_properties() {
        for seed in 0..100u64 {
            let inst = KneserInstance::random_uniform(5, 2, seed).unwrap();
            let result = solve_bruteforce(&inst).unwrap();
            assert_solution(&inst, &result);
        }
        // proper canonical coloring: no edge to find
        let proper = KneserInstance::canonical(8, 2).unwrap();
        let result = solve_bruteforce(&proper).unwrap();
        assert_eq!(result.outcome, SolverOutcome::Failure);
        // budget enforcement
        let big = KneserInstance::hard(64, 4, 0).unwrap();
        assert!(matches!(
            solve_bruteforce_with_budget(&big, 1000),
            Err(SolverError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn bruteforce_returns_the_lexicographically_first_pair() {
        let inst = KneserInstance::random_uniform(7, 2, 3).unwrap();
        let result = solve_bruteforce(&inst).unwrap();
        let SolverOutcome::Solution { a, b } = &result.outcome else {
            panic!("expected a solution");
        };
        // independent oracle: scan all ordered pairs lexicographically
        let vertices: Vec<KSubset> = inst.vertices().collect();
        let mut first: Option<(KSubset, KSubset)> = None;
        'outer: for x in &vertices {
            for y in &vertices {
                if y > x && inst.verify_edge(x, y) {
                    first = Some((x.clone(), y.clone()));
                    break 'outer;
                }
            }
        }
        let (fa, fb) = first.expect("an edge exists");
        assert_eq!((a, b), (&fa, &fb));
    }

    #[test]
    fn results_are_deterministic_and_round_trip() {
        let inst = KneserInstance::hard(132, 2, 9).unwrap();
        let r1 = solve_fpt(&inst, 5, &SolverParams::default());
        let r2 = solve_fpt(&inst, 5, &SolverParams::default());
        assert_eq!(r1.serialize_line(), r2.serialize_line());

        let parsed = parse_result_line(&r1.serialize_line()).unwrap();
        assert_eq!(parsed.seed, 5);
        assert_eq!(parsed.queries, r1.point_queries);
        assert_eq!(parsed.result, "solution");

        assert!(parse_result_line("result=solution A=1,2").is_err());
        assert!(parse_result_line("result=maybe A= B= seed=0 queries=0 iterations=0").is_err());
    }
}
