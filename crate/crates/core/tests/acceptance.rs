//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`). Sample counts, universes, and
//! tolerances are pinned here.

use std::time::Instant;

use schreier_core::suites::{run, SuiteConfig, SuiteReport};

fn cfg(samples: Option<usize>) -> SuiteConfig {
    SuiteConfig {
        seed: 0xC0FFEE,
        samples,
        jobs: 4,
    }
}

fn report_line(criterion: usize, description: &str, reports: &[SuiteReport]) {
    let ok = reports.iter().all(|r| r.ok);
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    println!(
        "criterion {criterion:02}: {} — {description} ({cases} cases)",
        if ok { "PASS" } else { "FAIL" }
    );
    for r in reports {
        for v in r.violations.iter().take(5) {
            println!("    [{}] {v}", r.suite);
        }
    }
    assert!(ok, "criterion {criterion} failed");
}

#[test]
fn criterion_01_membership_oracle_equivalence() {
    let start = Instant::now();
    let r = run("member-oracle", &cfg(None)).unwrap();
    let elapsed = start.elapsed();
    report_line(
        1,
        "fast membership equals brute-force oracle on every subset of {1..12} for the seven pinned orders",
        &[r],
    );
    assert!(
        elapsed.as_secs() <= 120,
        "membership sweep took {elapsed:.2?}, budget is 2 minutes"
    );
}

#[test]
fn criterion_02_s1_closed_form() {
    let r = run("s1-closed-form", &cfg(None)).unwrap();
    report_line(
        2,
        "order-1 membership matches the closed form (empty or size at most the minimum) on {1..16}",
        &[r],
    );
}

#[test]
fn criterion_03_structural_invariants() {
    let reports: Vec<SuiteReport> = [
        "heredity",
        "spreading",
        "monotonicity",
        "singleton-pair",
        "fact-max",
        "fact3",
    ]
    .iter()
    .map(|name| run(name, &cfg(None)).unwrap())
    .collect();
    report_line(
        3,
        "heredity, spreading, monotonicity, singleton/pair rules, one-element extension, and the pair-insertion fact on the enumerated universe",
        &reports,
    );
}

#[test]
fn criterion_04_decompose_roundtrip() {
    let r = run("decompose-roundtrip", &cfg(None)).unwrap();
    report_line(
        4,
        "every maximal set within {1..14} at orders 2 and 3 splits into min-many maximal blocks that concatenate back",
        &[r],
    );
}

#[test]
fn criterion_05_norm_oracle_equivalence() {
    let r = run("norm-oracle", &cfg(Some(500))).unwrap();
    report_line(
        5,
        "norm search equals full-enumeration oracle on 500 random vectors at orders {1,2,w} and exponents {1,2,3}",
        &[r],
    );
}

#[test]
fn criterion_06_norm_attainment() {
    let r = run("norm-attainment", &cfg(Some(300))).unwrap();
    report_line(
        6,
        "norming sets of 300 constructed sphere vectors are nonempty and attain the unit p-th-power sum exactly",
        &[r],
    );
}

#[test]
fn criterion_07_diagonal_isometry_exactness() {
    let r = run("diagonal-isometry", &cfg(Some(1000))).unwrap();
    report_line(
        7,
        "1000 random sign/vector triples: diagonal maps preserve distances exactly (and within 1e-12 at p = 1.5)",
        &[r],
    );
}

#[test]
fn criterion_08_l1_biconditional() {
    let r = run("l1", &cfg(Some(500))).unwrap();
    report_line(
        8,
        "norm-2 biconditional holds on 500 instances at p in {2,3}; the pinned p = 1 instance reports it false",
        &[r],
    );
}

#[test]
fn criterion_09_imp_identity() {
    let r = run("imp", &cfg(Some(200))).unwrap();
    report_line(
        9,
        "200 random configurations satisfy the one-coordinate perturbation identity with exact rational equality",
        &[r],
    );
}

#[test]
fn criterion_10_fact1_inequality() {
    let r = run("fact1", &cfg(Some(300))).unwrap();
    report_line(
        10,
        "300 sphere instances with both shifted norms above 1 keep the sum of squares at most 4",
        &[r],
    );
}

#[test]
fn criterion_11_witness_generators() {
    let l3 = run("l3-witness", &cfg(Some(200))).unwrap();
    let fact4 = run("fact4-witness", &cfg(None)).unwrap();
    report_line(
        11,
        "perturbation witnesses validate on 200 vectors; tail witnesses validate on the full (i, j) grid at orders 1 and 2",
        &[l3, fact4],
    );
}

#[test]
fn criterion_12_tingley_roundtrip() {
    let r = run("tingley-roundtrip", &cfg(Some(50))).unwrap();
    report_line(
        12,
        "planted signs are recovered from 10 basis pairs plus 50 sphere samples; all 100 sign corruptions are detected",
        &[r],
    );
}

#[test]
fn criterion_13_p1_analysis() {
    let reports: Vec<SuiteReport> = [
        ("one-sets", Some(300)),
        ("lemma7", Some(200)),
        ("lemma20", Some(200)),
        ("lemma23", Some(200)),
        ("lemma1-p1", Some(200)),
    ]
    .iter()
    .map(|(name, samples)| run(name, &cfg(*samples)).unwrap())
    .collect();
    report_line(
        13,
        "1-sets, gaps, the tail-interval non-maximal 1-set, and the p = 1 lemma checks hold with zero violations",
        &reports,
    );
}
