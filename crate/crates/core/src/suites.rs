//! Named property sweeps: randomized and exhaustive checks of the
//! structural invariants, exposed both to the test suite and to the CLI
//! (`property run <name>`).
//!
//! Sweeps are deterministic: per-sample generators are seeded from the
//! configured seed and the sample index, so the report is identical for
//! any job count.

use std::cmp::Ordering;

use num::{BigRational, One, Signed, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::Error;
use crate::family::{decompose_maximal, enumerate, enumerate_with_budget, is_maximal, is_member};
use crate::finset::FinSet;
use crate::gen::{random_signs, random_vector, sample_rng, unit_magnitudes, SphereSampler};
use crate::norm::{
    apply_diagonal, distance, is_on_sphere, member_subsets_with_sums, norm, norming_sets,
    Exponent,
};
use crate::one_sets::{gap, nonmaximal_one_set, one_sets};
use crate::oracle::{member_bruteforce, norm_bruteforce};
use crate::ordinal::{Ordinal, OrdinalClass};
use crate::rational::{abs_pow, int, ratio};

use crate::tingley::{
    check_fact1, check_imp_identity, check_l1, check_lemma1_p1, check_lemma20, check_lemma23,
    check_lemma7, extract_signs, fact4_witness, l3_witness, verify_diagonal, verify_isometry,
    MapTable,
};
use crate::vector::FinVector;

/// Configuration of one sweep run.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the suite's default sample count when set. Exhaustive
    /// suites ignore it.
    pub samples: Option<usize>,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0xC0FFEE,
            samples: None,
            jobs: 1,
        }
    }
}

/// Outcome of a sweep: `ok` iff no violations were recorded.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub ok: bool,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, cases: usize, violations: Vec<String>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            cases,
            ok: violations.is_empty(),
            violations,
        }
    }
}

/// Every registered sweep name.
pub fn names() -> &'static [&'static str] {
    &[
        "member-oracle",
        "s1-closed-form",
        "heredity",
        "spreading",
        "monotonicity",
        "singleton-pair",
        "fact-max",
        "fact3",
        "decompose-roundtrip",
        "norm-oracle",
        "norm-attainment",
        "norm-axioms",
        "diagonal-isometry",
        "l1",
        "imp",
        "fact1",
        "l3-witness",
        "fact4-witness",
        "tingley-roundtrip",
        "one-sets",
        "lemma7",
        "lemma20",
        "lemma23",
        "lemma1-p1",
    ]
}

/// Runs a sweep by name.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    match name {
        "member-oracle" => member_oracle(cfg),
        "s1-closed-form" => s1_closed_form(cfg),
        "heredity" => heredity(cfg),
        "spreading" => spreading(cfg),
        "monotonicity" => monotonicity(cfg),
        "singleton-pair" => singleton_pair(cfg),
        "fact-max" => fact_max(cfg),
        "fact3" => fact3(cfg),
        "decompose-roundtrip" => decompose_roundtrip(cfg),
        "norm-oracle" => norm_oracle(cfg),
        "norm-attainment" => norm_attainment(cfg),
        "norm-axioms" => norm_axioms(cfg),
        "diagonal-isometry" => diagonal_isometry(cfg),
        "l1" => l1_suite(cfg),
        "imp" => imp_suite(cfg),
        "fact1" => fact1_suite(cfg),
        "l3-witness" => l3_suite(cfg),
        "fact4-witness" => fact4_suite(cfg),
        "tingley-roundtrip" => tingley_roundtrip(cfg),
        "one-sets" => one_sets_suite(cfg),
        "lemma7" => lemma7_suite(cfg),
        "lemma20" => lemma20_suite(cfg),
        "lemma23" => lemma23_suite(cfg),
        "lemma1-p1" => lemma1_p1_suite(cfg),
        other => Err(Error::Parse(format!("unknown property suite {other:?}"))),
    }
}

fn ordv(s: &str) -> Ordinal {
    s.parse().expect("valid ordinal literal")
}

fn samples_or(cfg: &SuiteConfig, default: usize) -> usize {
    cfg.samples.unwrap_or(default)
}

/// Runs `f` over `0..n`, splitting across `jobs` threads; violation
/// messages are merged in index order regardless of the job count.
fn run_indexed<F>(jobs: usize, n: usize, f: F) -> Vec<String>
where
    F: Fn(usize) -> Vec<String> + Sync,
{
    let jobs = jobs.max(1).min(n.max(1));
    if jobs <= 1 {
        return (0..n).flat_map(f).collect();
    }
    let chunk = n.div_ceil(jobs);
    let mut per_job: Vec<Vec<String>> = Vec::with_capacity(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let f = &f;
                scope.spawn(move || {
                    let lo = j * chunk;
                    let hi = ((j + 1) * chunk).min(n);
                    let mut acc = Vec::new();
                    for i in lo..hi {
                        acc.extend(f(i));
                    }
                    acc
                })
            })
            .collect();
        per_job = handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect();
    });
    per_job.into_iter().flatten().collect()
}

fn subsets_of_universe(n: u32) -> impl Iterator<Item = FinSet> {
    (0u64..(1u64 << n)).map(move |mask| {
        let elems: Vec<u32> = (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
        FinSet::new(elems).expect("ascending")
    })
}

fn mask_to_set(mask: u64, n: u32) -> FinSet {
    let elems: Vec<u32> = (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
    FinSet::new(elems).expect("ascending")
}

const ORACLE_ORDERS: &[&str] = &["0", "1", "2", "3", "w", "w+1", "w+2"];
const STRUCT_ORDERS: &[&str] = &["0", "1", "2", "3", "w", "w+1"];

/// Fast membership agrees with the brute-force oracle on every subset of
/// `{1..12}` for the seven pinned orders.
fn member_oracle(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let n: u32 = 12;
    let total = ORACLE_ORDERS.len() << n;
    let violations = run_indexed(cfg.jobs, total, |idx| {
        let alpha = ordv(ORACLE_ORDERS[idx >> n]);
        let f = mask_to_set((idx as u64) & ((1 << n) - 1), n);
        let fast = is_member(&f, alpha);
        match member_bruteforce(&f, alpha) {
            Ok(slow) if slow == fast => Vec::new(),
            Ok(slow) => vec![format!(
                "membership of {f} at {alpha}: fast {fast}, oracle {slow}"
            )],
            Err(e) => vec![format!("oracle failed on {f} at {alpha}: {e}")],
        }
    });
    Ok(SuiteReport::new("member-oracle", total, violations))
}

/// The order-1 family is exactly `{F : F empty or |F| <= min F}` on
/// subsets of `{1..16}`.
fn s1_closed_form(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let n: u32 = 16;
    let total = 1usize << n;
    let violations = run_indexed(cfg.jobs, total, |mask| {
        let f = mask_to_set(mask as u64, n);
        let expected = f.is_empty() || f.len() as u32 <= f.min_elem().unwrap();
        if is_member(&f, Ordinal::ONE) == expected {
            Vec::new()
        } else {
            vec![format!("closed form disagrees on {f}")]
        }
    });
    Ok(SuiteReport::new("s1-closed-form", total, violations))
}

/// Members stay members after removing any one element (which implies
/// closure under arbitrary subsets).
fn heredity(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    for alpha_s in STRUCT_ORDERS {
        let alpha = ordv(alpha_s);
        for f in enumerate(alpha, 12)? {
            for drop in 0..f.len() {
                cases += 1;
                let mut elems = f.elements().to_vec();
                elems.remove(drop);
                let sub = FinSet::new(elems).expect("ascending");
                if !is_member(&sub, alpha) {
                    violations.push(format!("{sub} lost membership below {f} at {alpha}"));
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("heredity", cases, violations))
}

fn spread_images(f: &[u32], max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(f.len());
    fn rec(f: &[u32], k: usize, prev: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == f.len() {
            out.push(current.clone());
            return;
        }
        let lo = f[k].max(prev + 1);
        let remaining = (f.len() - 1 - k) as u32;
        for v in lo..=max.saturating_sub(remaining) {
            current.push(v);
            rec(f, k + 1, v, max, current, out);
            current.pop();
        }
    }
    rec(f, 0, 0, max, &mut current, &mut out);
    out
}

/// Every pointwise right-shift of a member inside `{1..12}` is again a
/// member.
fn spreading(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    for alpha_s in STRUCT_ORDERS {
        let alpha = ordv(alpha_s);
        for f in enumerate(alpha, 12)? {
            if f.is_empty() {
                continue;
            }
            for image in spread_images(f.elements(), 12) {
                cases += 1;
                let img = FinSet::new(image).expect("ascending");
                if !is_member(&img, alpha) {
                    violations.push(format!("spread {img} of {f} not a member at {alpha}"));
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("spreading", cases, violations))
}

/// Families grow along successors and along the approximant chain of a
/// limit (restricted universe).
fn monotonicity(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    let mut check_inclusion = |a: Ordinal, b: Ordinal| -> Result<(), Error> {
        for f in enumerate(a, 12)? {
            cases += 1;
            if !is_member(&f, b) {
                violations.push(format!("{f} in S_{a} but not in S_{b}"));
            }
        }
        Ok(())
    };
    for pair in [("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("w", "w+1")] {
        check_inclusion(ordv(pair.0), ordv(pair.1))?;
    }
    for limit in [Ordinal::OMEGA, Ordinal::new(2, 0)] {
        for n in 1..=6 {
            check_inclusion(
                limit.approximant(n).expect("limit"),
                limit.approximant(n + 1).expect("limit"),
            )?;
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("monotonicity", cases, violations))
}

/// Singletons belong to every family; pairs `{m, n}` with `2 <= m < n`
/// belong to every family of order at least 1.
fn singleton_pair(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    let all_orders = ["0", "1", "2", "3", "w", "w+1", "w+2", "w*2", "w*2+5"];
    for alpha_s in all_orders {
        let alpha = ordv(alpha_s);
        for k in 1..=40 {
            cases += 1;
            if !is_member(&FinSet::singleton(k), alpha) {
                violations.push(format!("singleton {{{k}}} missing at {alpha}"));
            }
        }
    }
    for alpha_s in &all_orders[1..] {
        let alpha = ordv(alpha_s);
        for m in 2..=12u32 {
            for n in (m + 1)..=13 {
                cases += 1;
                let pair = FinSet::new(vec![m, n]).expect("ascending");
                if !is_member(&pair, alpha) {
                    violations.push(format!("pair {pair} missing at {alpha}"));
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("singleton-pair", cases, violations))
}

/// Non-maximal members absorb any strictly larger element (tested for
/// the four next indices).
fn fact_max(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    for alpha_s in STRUCT_ORDERS {
        let alpha = ordv(alpha_s);
        for f in enumerate(alpha, 12)? {
            if f.is_empty() || is_maximal(&f, alpha)? {
                continue;
            }
            let max = f.max_elem().unwrap();
            for l in (max + 1)..=(max + 4) {
                cases += 1;
                let extended = f.with_element(l)?;
                if !is_member(&extended, alpha) {
                    violations.push(format!(
                        "non-maximal {f} does not absorb {l} at {alpha}"
                    ));
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("fact-max", cases, violations))
}

/// If `m < n < p < F` and `{m} + F` is a member, so is `{n, p} + F`.
fn fact3(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    for alpha_s in STRUCT_ORDERS {
        let alpha = ordv(alpha_s);
        for f in subsets_of_universe(12) {
            let Some(min) = f.min_elem() else { continue };
            if min < 4 {
                continue;
            }
            for m in 1..min {
                let with_m = f.with_element(m)?;
                if !is_member(&with_m, alpha) {
                    continue;
                }
                for n in (m + 1)..min {
                    for p in (n + 1)..min {
                        cases += 1;
                        let with_np = f.with_element(n)?.with_element(p)?;
                        if !is_member(&with_np, alpha) {
                            violations.push(format!(
                                "{{{m}}}+{f} member but {{{n},{p}}}+{f} is not, at {alpha}"
                            ));
                        }
                    }
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("fact3", cases, violations))
}

/// Decomposition of maximal sets round-trips: blocks maximal one order
/// below, block count equal to the minimum, concatenation equal to the
/// input.
fn decompose_roundtrip(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    let budget = Budget {
        max_subsets: 1 << 15,
        ..Budget::default()
    };
    for alpha_s in ["2", "3"] {
        let alpha = ordv(alpha_s);
        let OrdinalClass::Successor(beta) = alpha.classify() else {
            unreachable!("finite successor")
        };
        for g in enumerate_with_budget(alpha, 14, &budget)? {
            if g.is_empty() || !is_maximal(&g, alpha)? {
                continue;
            }
            cases += 1;
            match decompose_maximal(&g, alpha) {
                Ok(blocks) => {
                    let concat: Vec<u32> = blocks
                        .iter()
                        .flat_map(|b| b.elements().iter().copied())
                        .collect();
                    if concat != g.elements() {
                        violations.push(format!("blocks of {g} do not concatenate back"));
                    }
                    if blocks.len() != g.min_elem().unwrap() as usize {
                        violations.push(format!(
                            "{g} split into {} blocks, expected {}",
                            blocks.len(),
                            g.min_elem().unwrap()
                        ));
                    }
                    for b in &blocks {
                        if !matches!(is_maximal(b, beta), Ok(true)) {
                            violations.push(format!("block {b} of {g} not maximal at {beta}"));
                        }
                    }
                }
                Err(e) => violations.push(format!("decomposition of {g} failed: {e}")),
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("decompose-roundtrip", cases, violations))
}

/// The branch-and-bound norm agrees with full subset enumeration.
fn norm_oracle(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 500);
    let orders = ["1", "2", "w"];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let x = random_vector(&mut rng, 10, 10, 20);
        let mut local = Vec::new();
        for alpha_s in orders {
            let alpha = ordv(alpha_s);
            for pe in [1u32, 2, 3] {
                let p = Exponent::Exact(pe);
                let fast = norm(&x, alpha, &p);
                let slow = norm_bruteforce(&x, alpha, &p);
                match (fast, slow) {
                    (Ok(a), Ok(b)) if a.pth_power() == b.pth_power() => {}
                    (Ok(a), Ok(b)) => local.push(format!(
                        "norm of {x} at ({alpha}, p={pe}): fast {:?}, oracle {:?}",
                        a.pth_power(),
                        b.pth_power()
                    )),
                    (a, b) => local.push(format!(
                        "norm of {x} at ({alpha}, p={pe}) errored: {a:?} vs {b:?}"
                    )),
                }
            }
        }
        local
    });
    Ok(SuiteReport::new("norm-oracle", samples * 9, violations))
}

/// Norming sets are nonempty and, for sphere vectors, attain the sum 1
/// exactly.
fn norm_attainment(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 300);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
        SphereSampler::new(ordv("w"), 12)?,
    ];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let pe = [1u32, 2, 3][(s / samplers.len()) % 3];
        let p = Exponent::Exact(pe);
        let x = sampler.sample(&mut rng, pe);
        let one = BigRational::one();
        let mut local = Vec::new();
        match norming_sets(&x, sampler.alpha(), &p) {
            Ok(sets) if sets.is_empty() => {
                local.push(format!("no norming set for {x}"));
            }
            Ok(sets) => {
                for f in sets {
                    let sum: BigRational = f.iter().map(|i| abs_pow(&x.coord(i), pe)).sum();
                    if sum != one {
                        local.push(format!("norming set {f} of {x} sums to {sum}, not 1"));
                    }
                }
            }
            Err(e) => local.push(format!("norming sets of {x} failed: {e}")),
        }
        local
    });
    Ok(SuiteReport::new("norm-attainment", samples, violations))
}

/// Exact absolute homogeneity, plus the triangle inequality checked in
/// floating point with slack.
fn norm_axioms(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let pe = [1u32, 2][s % 2];
        let p = Exponent::Exact(pe);
        let alpha = ordv(["1", "2", "w"][s % 3]);
        let x = random_vector(&mut rng, 10, 8, 9);
        let y = random_vector(&mut rng, 10, 8, 9);
        let lambda = ratio(
            rng.random_range(-9..=9i64),
            rng.random_range(1..=9i64),
        );
        let mut local = Vec::new();
        let scaled = FinVector::from_pairs(x.iter().map(|(i, v)| (i, v * &lambda)))
            .expect("distinct indices");
        let nx = norm(&x, alpha, &p).expect("within budget");
        let ns = norm(&scaled, alpha, &p).expect("within budget");
        let expected = abs_pow(&lambda, pe) * nx.pth_power().expect("exact").clone();
        if ns.pth_power() != Some(&expected) {
            local.push(format!("homogeneity failed for lambda={lambda}, x={x}"));
        }
        let nsum = norm(&(&x + &y), alpha, &p).expect("within budget");
        let ny = norm(&y, alpha, &p).expect("within budget");
        if nsum.approx() > nx.approx() + ny.approx() + 1e-9 {
            local.push(format!("triangle inequality failed for {x} and {y}"));
        }
        local
    });
    Ok(SuiteReport::new("norm-axioms", samples * 2, violations))
}

/// Diagonal maps preserve norms and distances exactly (and within
/// tolerance at a non-integer exponent).
fn diagonal_isometry(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 1000);
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let alpha = ordv(["1", "2", "w"][s % 3]);
        let pe = [1u32, 2, 3][s % 3];
        let p = Exponent::Exact(pe);
        let theta = random_signs(&mut rng, 12);
        let x = random_vector(&mut rng, 12, 8, 9);
        let y = random_vector(&mut rng, 12, 8, 9);
        let tx = apply_diagonal(&theta, &x).expect("theta covers the universe");
        let ty = apply_diagonal(&theta, &y).expect("theta covers the universe");
        let mut local = Vec::new();

        let d = distance(&x, &y, alpha, &p).expect("within budget");
        let dt = distance(&tx, &ty, alpha, &p).expect("within budget");
        if d.pth_power() != dt.pth_power() {
            local.push(format!("diagonal map distorted |x-y| for {x}, {y}"));
        }
        let nx = norm(&x, alpha, &p).expect("within budget");
        let ntx = norm(&tx, alpha, &p).expect("within budget");
        if nx.pth_power() != ntx.pth_power() {
            local.push(format!("diagonal map distorted the norm of {x}"));
        }

        let ap = Exponent::approx(1.5).expect("valid exponent");
        let da = distance(&x, &y, alpha, &ap).expect("within budget");
        let dta = distance(&tx, &ty, alpha, &ap).expect("within budget");
        if (da.approx() - dta.approx()).abs() > 1e-12 {
            local.push(format!("approx-mode distance drifted for {x}, {y}"));
        }
        local
    });
    Ok(SuiteReport::new("diagonal-isometry", samples * 2, violations))
}

/// The norm-2 biconditional holds at p > 1; the pinned p = 1 instance
/// reports it false.
fn l1_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 500);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let mut violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let pe = [2u32, 3][(s / 2) % 2];
        let x = sampler.sample(&mut rng, pe);
        let n = if rng.random_bool(0.5) && !x.is_zero() {
            *x.support().elements().choose(&mut rng).expect("nonempty")
        } else {
            rng.random_range(1..=13)
        };
        match check_l1(&x, n, sampler.alpha(), &Exponent::Exact(pe)) {
            Ok(true) => Vec::new(),
            Ok(false) => vec![format!("biconditional failed for {x}, n={n}, p={pe}")],
            Err(e) => vec![format!("check failed for {x}, n={n}: {e}")],
        }
    });
    // The motivating p = 1 counterexample must report FALSE.
    let half = ratio(1, 2);
    let x = FinVector::from_pairs([(2, half.clone()), (3, half)]).expect("distinct");
    match check_l1(&x, 2, ordv("1"), &Exponent::Exact(1)) {
        Ok(false) => {}
        Ok(true) => violations.push("p=1 instance unexpectedly satisfies the biconditional".into()),
        Err(e) => violations.push(format!("p=1 instance errored: {e}")),
    }
    Ok(SuiteReport::new("l1", samples + 1, violations))
}

/// The exact norm identity for one-coordinate perturbations on an
/// admissible set.
fn imp_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
        SphereSampler::new(ordv("w"), 12)?,
    ];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let pe = [1u32, 2, 3][s % 3];
        let indices = loop {
            let f = sampler.random_member(&mut rng);
            if pe != 3 || f.len() != 2 {
                break f.clone();
            }
        };
        let mags = unit_magnitudes(&mut rng, indices.len(), pe);
        let weights: Vec<BigRational> = mags.iter().map(|m| abs_pow(m, pe)).collect();
        let signs: Vec<i8> = (0..indices.len())
            .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
            .collect();
        let l = rng.random_range(1..=indices.len());
        match check_imp_identity(
            &indices,
            &weights,
            &signs,
            l,
            sampler.alpha(),
            &Exponent::Exact(pe),
        ) {
            Ok(true) => Vec::new(),
            Ok(false) => vec![format!(
                "identity failed on {indices} at p={pe}, l={l}"
            )],
            Err(e) => vec![format!("identity check errored on {indices}: {e}")],
        }
    });
    Ok(SuiteReport::new("imp", samples, violations))
}

/// Parallelogram-type bound at p = 2 on instances where both shifted
/// norms exceed 1.
fn fact1_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 300);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let p2 = Exponent::Exact(2);
    let one = BigRational::one();
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let sampler = &samplers[s % samplers.len()];
        let alpha = sampler.alpha();
        // Resample until the hypothesis (both norms > 1) holds.
        for attempt in 0..64u64 {
            let mut rng = sample_rng(cfg.seed, (s as u64) << 8 | attempt);
            let x = sampler.sample(&mut rng, 2);
            let i = rng.random_range(2..=13u32);
            let e = FinVector::basis(i);
            let plus = norm(&(&e + &x), alpha, &p2).expect("within budget");
            let minus = norm(&(&e - &x), alpha, &p2).expect("within budget");
            if plus.cmp_scalar(&one, &p2) != Ordering::Greater
                || minus.cmp_scalar(&one, &p2) != Ordering::Greater
            {
                continue;
            }
            return match check_fact1(&x, i, alpha) {
                Ok(true) => Vec::new(),
                Ok(false) => vec![format!("squares of {x} +/- e_{i} exceed 4 at {alpha}")],
                Err(e) => vec![format!("fact1 check errored: {e}")],
            };
        }
        vec![format!("no hypothesis-satisfying instance found for sample {s}")]
    });
    Ok(SuiteReport::new("fact1", samples, violations))
}

/// The two-sided perturbation witness validates for sphere vectors other
/// than the extreme basis vector.
fn l3_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let one = BigRational::one();
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let pe = [2u32, 3][(s / 2) % 2];
        let p = Exponent::Exact(pe);
        let e1 = FinVector::basis(1);
        let u = loop {
            let candidate = sampler.sample(&mut rng, pe);
            if candidate != e1 && candidate != -&e1 {
                break candidate;
            }
        };
        match l3_witness(&u, sampler.alpha(), &p) {
            Ok(w) => {
                let plus = norm(&(&u + &w), sampler.alpha(), &p).expect("within budget");
                let minus = norm(&(&u - &w), sampler.alpha(), &p).expect("within budget");
                if plus.cmp_scalar(&one, &p) == Ordering::Greater
                    && minus.cmp_scalar(&one, &p) == Ordering::Greater
                {
                    Vec::new()
                } else {
                    vec![format!("witness for {u} does not clear 1")]
                }
            }
            Err(e) => vec![format!("witness generation failed for {u}: {e}")],
        }
    });
    Ok(SuiteReport::new("l3-witness", samples, violations))
}

/// The tail witness validates all four norm conditions on the full
/// index grid.
fn fact4_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut cases = 0;
    let mut violations = Vec::new();
    let p2 = Exponent::Exact(2);
    let two = int(2);
    for alpha_s in ["1", "2"] {
        let alpha = ordv(alpha_s);
        for i in 3..=8u32 {
            for j in 2..i {
                cases += 1;
                match fact4_witness(i, j, alpha) {
                    Ok(x) => {
                        // Conditions are on squared norms. The generic
                        // engine re-checks small witnesses; the large
                        // order-2 tails are validated through the exact
                        // structural reduction (tail membership facts
                        // plus the unit square sum).
                        let all_ok = if x.support_len() <= 16 {
                            let ei = FinVector::basis(i);
                            let ej = FinVector::basis(j);
                            is_on_sphere(&x, alpha, &p2).unwrap_or(false)
                                && [&(&x + &ei), &(&x - &ei)].iter().all(|v| {
                                    norm(v, alpha, &p2)
                                        .map(|nv| nv.pth_power() == Some(&two))
                                        .unwrap_or(false)
                                })
                                && [&(&x + &ej), &(&x - &ej)].iter().all(|v| {
                                    norm(v, alpha, &p2)
                                        .map(|nv| nv.pth_power().is_some_and(|sq| *sq < two))
                                        .unwrap_or(false)
                                })
                        } else {
                            let tail = x.support();
                            let sum: BigRational =
                                tail.iter().map(|k| abs_pow(&x.coord(k), 2)).sum();
                            sum == BigRational::one()
                                && is_member(&tail, alpha)
                                && tail
                                    .with_element(i)
                                    .is_ok_and(|f| is_member(&f, alpha))
                                && tail
                                    .with_element(j)
                                    .is_ok_and(|f| !is_member(&f, alpha))
                        };
                        if !all_ok {
                            violations
                                .push(format!("witness for i={i}, j={j} at {alpha} invalid"));
                        }
                    }
                    Err(e) => {
                        violations.push(format!("construction failed for i={i}, j={j}: {e}"))
                    }
                }
            }
        }
    }
    let _ = cfg;
    Ok(SuiteReport::new("fact4-witness", cases, violations))
}

/// Planting a sign sequence, extracting it back, and detecting
/// single-coordinate corruptions.
fn tingley_roundtrip(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let n: u32 = 10;
    let sphere_samples = samples_or(cfg, 50);
    let corruption_trials = 100usize;
    let mut rng = sample_rng(cfg.seed, 7777);
    let sampler = SphereSampler::new(ordv("1"), 12)?;
    let p = Exponent::Exact(2);
    let theta = random_signs(&mut rng, 12);

    let mut inputs: Vec<FinVector> = (1..=n).map(FinVector::basis).collect();
    inputs.extend(sampler.sample_distinct(&mut rng, 2, sphere_samples));
    let table = MapTable::diagonal(&theta, inputs, sampler.alpha(), p)?;

    let mut violations = Vec::new();
    let mut cases = 0;

    cases += 1;
    match extract_signs(&table, n) {
        Ok(extracted) if extracted.signs() == &theta.signs()[..n as usize] => {}
        Ok(_) => violations.push("extracted signs differ from the planted sequence".into()),
        Err(e) => violations.push(format!("sign extraction failed: {e}")),
    }

    cases += 1;
    if !verify_isometry(&table)?.ok {
        violations.push("diagonal table failed isometry verification".into());
    }
    cases += 1;
    if !verify_diagonal(&table, &theta)?.ok {
        violations.push("diagonal table failed diagonal verification".into());
    }

    let corruption_violations = run_indexed(cfg.jobs, corruption_trials, |t| {
        let mut rng = sample_rng(cfg.seed, 31_000 + t as u64);
        // Corrupt one output coordinate sign in a random pair with
        // nonempty output support.
        let (k, coords) = loop {
            let k = rng.random_range(0..table.pairs.len());
            let supp = table.pairs[k].1.support();
            if !supp.is_empty() {
                break (k, supp);
            }
        };
        let &i = coords.elements().choose(&mut rng).expect("nonempty");
        let mut corrupted = table.clone();
        let old = corrupted.pairs[k].1.coord(i);
        corrupted.pairs[k].1 = corrupted.pairs[k].1.with_coord(i, -old);

        let diagonal_caught = !verify_diagonal(&corrupted, &theta)
            .map(|r| r.ok)
            .unwrap_or(false);
        let caught = diagonal_caught
            || !verify_isometry(&corrupted).map(|r| r.ok).unwrap_or(false);
        if caught {
            Vec::new()
        } else {
            vec![format!(
                "sign corruption at pair {k}, index {i} went undetected"
            )]
        }
    });
    cases += corruption_trials;
    violations.extend(corruption_violations);
    Ok(SuiteReport::new("tingley-roundtrip", cases, violations))
}

/// The p = 1 analysis invariants: nonempty finite 1-set lists, positive
/// gaps bounding every sub-unit sum, and the unique tail-interval
/// non-maximal 1-set at order 1.
fn one_sets_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 300);
    let sampler = SphereSampler::new(ordv("1"), 12)?;
    let one = BigRational::one();

    // Order-1 extension fact backing the tail-interval argument: a
    // non-maximal member absorbs any element above its minimum.
    let mut fact_cases = 0;
    let mut violations = Vec::new();
    let alpha1 = ordv("1");
    for f in enumerate(alpha1, 10)? {
        if f.is_empty() || is_maximal(&f, alpha1)? {
            continue;
        }
        let min = f.min_elem().expect("nonempty");
        for n in (min + 1)..=12 {
            if f.contains(n) {
                continue;
            }
            fact_cases += 1;
            if !is_member(&f.with_element(n)?, alpha1) {
                violations.push(format!("non-maximal {f} does not absorb {n} at order 1"));
            }
        }
    }

    let sample_violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let x = sampler.sample(&mut rng, 1);
        let alpha = sampler.alpha();
        let mut local = Vec::new();

        let sets = match one_sets(&x, alpha) {
            Ok(sets) => sets,
            Err(e) => return vec![format!("one_sets failed for {x}: {e}")],
        };
        if sets.is_empty() {
            local.push(format!("no 1-set for sphere vector {x}"));
        }
        for f in &sets {
            if f.iter().any(|i| x.coord(i).is_zero()) || x.abs_sum_on(f) != one {
                local.push(format!("reported 1-set {f} invalid for {x}"));
            }
        }

        let g = match gap(&x, alpha) {
            Ok(g) => g,
            Err(e) => return vec![format!("gap failed for {x}: {e}")],
        };
        if !g.is_positive() {
            local.push(format!("gap not positive for {x}"));
        }
        let cap = &one - &g;
        for (f, sum) in member_subsets_with_sums(&x, alpha, 1) {
            if sum < one && sum > cap {
                local.push(format!("non-1-set {f} sums above 1 - gap for {x}"));
            }
        }

        match nonmaximal_one_set(&x, alpha) {
            Ok(Some(f)) => {
                let min = f.min_elem().expect("1-sets are nonempty");
                let tail: Vec<u32> = x
                    .support()
                    .iter()
                    .filter(|&i| i >= min)
                    .collect();
                if tail != f.elements() {
                    local.push(format!("non-maximal 1-set {f} of {x} is not the tail"));
                }
            }
            Ok(None) => {}
            Err(e) => local.push(format!("non-maximal 1-set lookup failed for {x}: {e}")),
        }
        local
    });
    violations.extend(sample_violations);
    Ok(SuiteReport::new("one-sets", fact_cases + samples, violations))
}

/// Biconditional characterization of antipodal basis alignment at p = 1.
fn lemma7_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let n = rng.random_range(2..=13u32);
        let e1 = FinVector::basis(1);
        let x = if s % 5 == 0 {
            // Exercise the true-true branch.
            let e = FinVector::basis(n);
            if rng.random_bool(0.5) {
                e
            } else {
                -&e
            }
        } else {
            loop {
                let candidate = sampler.sample(&mut rng, 1);
                if candidate != e1 && candidate != -&e1 {
                    break candidate;
                }
            }
        };
        match check_lemma7(&x, n, sampler.alpha()) {
            Ok(true) => Vec::new(),
            Ok(false) => vec![format!("biconditional failed for {x}, n={n}")],
            Err(e) => vec![format!("check errored for {x}, n={n}: {e}")],
        }
    });
    Ok(SuiteReport::new("lemma7", samples, violations))
}

/// Propagation of the double norm-2 condition to larger indices at
/// p = 1.
fn lemma20_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let alpha = sampler.alpha();
        let (x, i, j) = if s % 2 == 0 {
            // Engineered hypothesis: mass on a tail block beyond i.
            let i = rng.random_range(2..=6u32);
            let m = rng.random_range(2..=i.min(4));
            let tail: Vec<u32> = (i + 2..=i + m).collect();
            let mags = unit_magnitudes(&mut rng, tail.len(), 1);
            let x = FinVector::from_pairs(
                tail.iter()
                    .zip(mags)
                    .map(|(&t, m)| (t, if rng.random_bool(0.5) { -m } else { m })),
            )
            .expect("distinct indices");
            let j = rng.random_range(i + 1..=i + 8);
            (x, i, j)
        } else {
            let x = sampler.sample(&mut rng, 1);
            let i = rng.random_range(2..=9u32);
            let j = rng.random_range(i + 1..=13);
            (x, i, j)
        };
        match check_lemma20(&x, i, j, alpha) {
            Ok(true) => Vec::new(),
            Ok(false) => vec![format!("implication failed for {x}, i={i}, j={j} at {alpha}")],
            Err(e) => vec![format!("check errored for {x}, i={i}, j={j}: {e}")],
        }
    });
    Ok(SuiteReport::new("lemma20", samples, violations))
}

/// The half-half characterization at orders >= 2, p = 1.
fn lemma23_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("2"), 12)?,
        SphereSampler::new(ordv("3"), 12)?,
        SphereSampler::new(ordv("w"), 12)?,
    ];
    let half = ratio(1, 2);
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let i = rng.random_range(2..=10u32);
        let j = loop {
            let j = rng.random_range(2..=12u32);
            if j != i {
                break j;
            }
        };
        let x = if s % 3 == 0 {
            FinVector::from_pairs([(i, half.clone()), (j, half.clone())]).expect("distinct")
        } else {
            loop {
                let candidate = sampler.sample(&mut rng, 1);
                if candidate.coord(1).is_zero() {
                    break candidate;
                }
            }
        };
        match check_lemma23(&x, i, j, sampler.alpha()) {
            Ok(true) => Vec::new(),
            Ok(false) => vec![format!("biconditional failed for {x}, i={i}, j={j}")],
            Err(e) => vec![format!("check errored for {x}, i={i}, j={j}: {e}")],
        }
    });
    Ok(SuiteReport::new("lemma23", samples, violations))
}

/// Witness sets of a norm-2 sum lie in both unit-sum families with
/// aligned signs.
fn lemma1_p1_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let samples = samples_or(cfg, 200);
    let samplers = [
        SphereSampler::new(ordv("1"), 12)?,
        SphereSampler::new(ordv("2"), 12)?,
    ];
    let violations = run_indexed(cfg.jobs, samples, |s| {
        let mut rng = sample_rng(cfg.seed, s as u64);
        let sampler = &samplers[s % samplers.len()];
        let alpha = sampler.alpha();
        let x = sampler.sample(&mut rng, 1);
        let y = match s % 3 {
            0 => x.clone(),
            1 => {
                // Renormalize x on one of its 1-sets: the sum then hits
                // norm 2 on that set.
                match one_sets(&x, alpha) {
                    Ok(sets) if !sets.is_empty() => {
                        let f = sets.choose(&mut rng).expect("nonempty");
                        x.restrict(f)
                    }
                    _ => x.clone(),
                }
            }
            _ => sampler.sample(&mut rng, 1),
        };
        match check_lemma1_p1(&x, &y, alpha) {
            Ok(report) if report.ok => Vec::new(),
            Ok(report) => vec![format!(
                "witness checks failed for {x} and {y}: {:?}",
                report.violations.first()
            )],
            Err(e) => vec![format!("check errored for {x} and {y}: {e}")],
        }
    });
    Ok(SuiteReport::new("lemma1-p1", samples, violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        let cfg = SuiteConfig {
            samples: Some(2),
            ..SuiteConfig::default()
        };
        // Every name dispatches; run the cheap randomized ones at a tiny
        // sample count to keep this a smoke test.
        for name in ["norm-oracle", "l1", "lemma7", "lemma23", "lemma1-p1"] {
            let report = run(name, &cfg).unwrap();
            assert!(report.ok, "{name}: {:?}", report.violations);
        }
        assert!(run("no-such-suite", &cfg).is_err());
    }

    #[test]
    fn jobs_do_not_change_reports() {
        let base = SuiteConfig {
            samples: Some(6),
            jobs: 1,
            ..SuiteConfig::default()
        };
        let parallel = SuiteConfig { jobs: 3, ..base };
        let a = run("norm-oracle", &base).unwrap();
        let b = run("norm-oracle", &parallel).unwrap();
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.violations, b.violations);
    }
}
