//! The acceptance gate: every criterion runs at its stated tolerance
//! (exact equality everywhere) and prints one pass/fail line.
//!
//! Run with `cargo test -p coconvex --test acceptance -- --nocapture` to
//! see the lines; each criterion is its own #[test] so failures are
//! attributable.

use std::time::{Duration, Instant};

use coconvex::acceptance;
use coconvex::report::Status;

const SEED: u64 = 7;

fn run(id: &str, f: fn(u64) -> coconvex::Result<coconvex::report::Check>, budget: Duration) {
    let start = Instant::now();
    let check = f(SEED).expect("criterion execution");
    let elapsed = start.elapsed();
    let mut line = format!("{} {}", check.id, check.status.word());
    for (k, v) in &check.details {
        line.push_str(&format!(" {k}={v}"));
    }
    println!("{line} elapsed={elapsed:.2?}");
    assert_eq!(check.status, Status::Pass, "{id}: {:?}", check.details);
    assert!(
        elapsed <= budget,
        "{id} exceeded its time budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn criterion_01_quadrant_staircase() {
    run(
        "01-quadrant-staircase",
        acceptance::criterion_01_staircase,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_toy_1d() {
    run("02-toy-1d", acceptance::criterion_02_toy_1d, Duration::from_secs(1));
}

#[test]
fn criterion_03_coconvex_af_suite() {
    run(
        "03-coconvex-af-suite",
        acceptance::criterion_03_coconvex_af,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_04_convex_af_signature() {
    run(
        "04-convex-af-signature",
        acceptance::criterion_04_convex_af,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_05_truncation_identities() {
    run(
        "05-truncation-identities",
        acceptance::criterion_05_truncation_identities,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_chain_identities() {
    run(
        "06-chain-identities",
        acceptance::criterion_06_chain_identities,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_07_vertex_cone_expansion() {
    run(
        "07-vertex-cone-expansion",
        acceptance::criterion_07_vertex_cone_expansion,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_wedge_sos() {
    run("08-wedge-sos", acceptance::criterion_08_wedge_sos, Duration::from_secs(60));
}

#[test]
fn criterion_09_reversed_minkowski() {
    run(
        "09-reversed-minkowski",
        acceptance::criterion_09_reversed_minkowski,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_cone_orthogonality() {
    run(
        "10-cone-orthogonality",
        acceptance::criterion_10_cone_orthogonality,
        Duration::from_secs(60),
    );
}

#[test]
fn suite_reports_are_deterministic() {
    let a = acceptance::run_all(SEED).expect("suite");
    let b = acceptance::run_all(SEED).expect("suite");
    assert_eq!(a.render_lines(), b.render_lines());
    assert_eq!(a.exit_code(), 0);
}
