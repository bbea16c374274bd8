//! Acceptance battery: one test per criterion, each printing a pass/fail
//! line and enforcing its runtime budget. Run with
//! `cargo test -p weylhom --test acceptance -- --nocapture` to see the
//! matrix.

use std::time::{Duration, Instant};

use weylhom::suite;

fn check(id: usize, budget: Duration) {
    let start = Instant::now();
    let result = suite::run_criterion(id, 0).expect("criterion id exists");
    let elapsed = start.elapsed();
    let verdict = if result.passed { "PASS" } else { "FAIL" };
    println!(
        "{verdict}  criterion {id:2}: {} — {} [{elapsed:?}]",
        result.name, result.details
    );
    assert!(result.passed, "criterion {id} failed: {}", result.details);
    assert!(
        elapsed <= budget,
        "criterion {id} took {elapsed:?}, budget {budget:?}"
    );
}

/// For every family in {A, C}, rank <= 5, every s with sum <= 4 and
/// k in {0, 1, 2}, the Hom-rank table is exactly the single entry
/// {sum s_i omega_i : 1}. Exact equality, under 5 s.
#[test]
fn criterion_01_hom_rank_collapse_for_a_and_c() {
    check(1, Duration::from_secs(5));
}

/// The fundamental invariant character tables: B_3 node 2 at k = 1 and
/// k = 2, D_6 node 4 at k = 1, and the rank >= 6 node-4 nonvanishing
/// counterexample for both B_6 and D_6. Exact, under 1 s.
#[test]
fn criterion_02_fundamental_character_tables() {
    check(2, Duration::from_secs(1));
}

/// det C(N, K) = (-1)^{N(N+1)/2} for all 0 <= N, K <= 8: 81 exact integer
/// determinants, under 1 s.
#[test]
fn criterion_03_binomial_determinant_identity() {
    check(3, Duration::from_secs(1));
}

/// For type A (rank <= 3, including sl_2) distinct-point configurations of
/// at most 3 fundamental evaluation factors, the loop-invariant dimension at
/// every dominant weight equals the Hom-rank coefficient. At least 30
/// (configuration, weight) pairs, exact equality, under 30 s.
#[test]
fn criterion_04_module_engine_oracle_agreement() {
    check(4, Duration::from_secs(30));
}

/// The same-point sl_2 pair gains a loop-invariant singlet at weight 0
/// (dimension 1 against the predicted 0), witnessing that the
/// distinct-point condition cannot be dropped. Exact, under 1 s.
#[test]
fn criterion_05_distinct_point_necessity() {
    check(5, Duration::from_secs(1));
}

/// Coassociativity, the counit law, multiplicativity and the cross-term
/// degree bookkeeping of the comultiplication hold on 200 randomized
/// monomials with k, l <= 2 and u-degree <= 6. Exact, under 5 s.
#[test]
fn criterion_06_bialgebra_laws() {
    check(6, Duration::from_secs(5));
}

/// Window-scale reconstruction of fundamental global Weyl modules over
/// both one-variable rings (windows within D, T <= 4): highest-vector
/// relations pass, the cyclic span fills dim V x |sub-window|, the right
/// translates have full rank dim V x |window|, and the window invariants
/// equal (base invariants) x (window). Exact, under 30 s.
#[test]
fn criterion_07_reconstruction_at_window_scale() {
    check(7, Duration::from_secs(30));
}

/// Stabilization: the Laurent tail criterion holds for K in 0..=4 on the
/// distinct-point pair and the single factor, and the u-degree detection
/// band [K, K+N] cuts out exactly the invariants for the one- and
/// two-factor base modules. Exact, under 10 s.
#[test]
fn criterion_08_stabilization_criteria() {
    check(8, Duration::from_secs(10));
}

/// d_lambda = 2^2 = 4 for the sl_2 pair at lambda = 2 omega: the tensor
/// dimension matches, and the loop invariants across dominant weights sum
/// to exactly 1. Exact, under 1 s.
#[test]
fn criterion_09_free_rank_consistency() {
    check(9, Duration::from_secs(1));
}

/// Symmetrizer elements are block-invariant and multiplicatively closed for
/// all block shapes with at most 4 slots over at least 50 random ring
/// elements, and single-slot blocks embed the ring identically. Exact,
/// under 5 s.
#[test]
fn criterion_10_symmetrizer_algebra() {
    check(10, Duration::from_secs(5));
}
