//! Solvers for the computational Kneser problem and the Agreeable-Set problem.
//!
//! The Kneser graph `K(n, k)` has one vertex per k-subset of `{1, ..., n}` and an
//! edge between every pair of disjoint subsets; its chromatic number is `n - 2k + 2`.
//! An instance of the Kneser problem is an oracle that colors the vertices with only
//! `n - 2k + 1` colors, so a monochromatic edge (two disjoint, equal-colored subsets)
//! always exists. The goal is to find one while querying the oracle as little as
//! possible.
//!
//! This crate provides:
//!
//! - [`combinatorics`] — exact subset primitives: enumeration, uniform seeded
//!   sampling, stable (Schrijver) subsets, and closed-form bounds on intersecting
//!   families, all in arbitrary-precision arithmetic.
//! - [`oracle`] — the black-box input model: point-query and subset-query coloring
//!   oracles, built-in instance families (canonical / hard / random), and
//!   query-counting wrappers.
//! - [`elimination`] — one randomized element-elimination round: it either finds a
//!   monochromatic edge, finds a vertex colored outside the surviving palette, or
//!   nominates a (color, element) pair whose removal shrinks the instance.
//! - [`solver`] — three complete solvers: the randomized fixed-parameter solver
//!   built on repeated element elimination, a deterministic solver that enumerates
//!   the Schrijver subgraph, and a brute-force reference.
//! - [`agreeable`] — the Agreeable-Set problem for monotone utility oracles and the
//!   reductions between it and the Kneser problem, in both directions.
//! - [`descriptor`] / [`harness`] — the instance file format, the experiment
//!   runner, and report rendering used by the `kneser` binary.
//! - [`acceptance`] — the self-contained acceptance suite (also run by
//!   `kneser acceptance` and the `acceptance` integration test).
//!
//! Every algorithm works over exact integers and rationals; no floating point
//! participates in any decision. Randomized runs are reproducible from a `u64`
//! seed.

pub mod acceptance;
pub mod agreeable;
pub mod combinatorics;
pub mod descriptor;
pub mod elimination;
pub mod harness;
pub mod oracle;
pub mod solver;

pub use agreeable::{
    map_agreeable_solution_back, map_kneser_solution, reduce_kneser_to_agreeable,
    reduce_to_kneser, solve_agreeable, solve_agreeable_exhaustive, AgreeableResult,
    AgreeableSolution, UtilityProfile, ViolationCertificate,
};
pub use combinatorics::{
    are_disjoint, binomial, ekr_bound, enumerate_ksubsets, enumerate_stable_ksubsets,
    hilton_milner_bound, hilton_milner_extremal_family, is_stable, sample_uniform_ksubset,
    schrijver_vertex_count, BoundReport, GroundSubset, KSubset,
};
pub use elimination::{
    eliminate, verify_popular_pair, EliminationOutcome, EliminationParams, EmpiricalStats,
};
pub use oracle::{Color, CountingOracle, KneserInstance, QueryTranscript};
pub use solver::{
    solve_bruteforce, solve_fpt, solve_schrijver, SolverOutcome, SolverParams, SolverResult,
    Strategy,
};
