//! Command-line front door: family membership and structure, exact
//! norms, the p = 1 analysis, sphere-map verification, property sweeps,
//! and witness generators, all with JSON output suitable for scripting
//! and golden-file testing.
//!
//! Exit codes: 0 on success, 1 on domain errors (with a structured
//! error JSON on stdout), 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schreier_core::budget::Budget;
use schreier_core::error::Error;
use schreier_core::family::{
    decompose_maximal, enumerate_maximal_with_budget, enumerate_with_budget, is_maximal,
    is_member,
};
use schreier_core::norm::{
    norm_with_budget, norming_sets_with_budget, Exponent, DEFAULT_TOLERANCE,
};
use schreier_core::one_sets;
use schreier_core::oracle::{member_bruteforce, norm_bruteforce};
use schreier_core::suites::{self, SuiteConfig};
use schreier_core::tingley::{extract_signs, fact4_witness, l3_witness, verify_isometry, MapTable};
use schreier_core::{FinSet, FinVector, Ordinal, OrdinalClass};

#[derive(Parser)]
#[command(
    name = "schreier",
    version,
    about = "Schreier families, exact p-convexified norms, and sphere-isometry verification"
)]
struct Cli {
    /// Family order, e.g. 0, 1, 3, w, w+2, w*2+5.
    #[arg(long, global = true, default_value = "1")]
    alpha: String,
    /// Exponent: an integer selects exact arithmetic, a decimal such as
    /// 1.5 selects approximate mode.
    #[arg(long, global = true, default_value = "1")]
    p: String,
    /// Comparison tolerance in approximate mode.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Cap on enumerated subsets (also via SCHREIER_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Cross-check results against the brute-force oracle and fail
    /// loudly on disagreement.
    #[arg(long, global = true)]
    oracle: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for property sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Is the set a member of the family?
    Member {
        /// Comma-separated elements, e.g. 2,3,5.
        #[arg(long)]
        set: String,
    },
    /// Is the set maximal in the family?
    Maximal {
        #[arg(long)]
        set: String,
    },
    /// Split a maximal set into maximal blocks one order down.
    Decompose {
        #[arg(long)]
        set: String,
    },
    /// List the members inside {1..n}.
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Keep only the sets maximal in the full family.
        #[arg(long)]
        maximal: bool,
    },
    /// Norm of a vector, e.g. --vec '{"2":"1/2","3":"1/2"}'.
    Norm {
        #[arg(long)]
        vec: String,
    },
    /// All admissible sets attaining the norm.
    NormingSets {
        #[arg(long)]
        vec: String,
    },
    /// 1-sets, gap, and the non-maximal 1-set (exact p = 1).
    OneSets {
        #[arg(long)]
        vec: String,
    },
    /// The gap below 1 over non-unit admissible sums (exact p = 1).
    Gap {
        #[arg(long)]
        vec: String,
    },
    /// Verification of tabulated sphere maps.
    Isometry {
        #[command(subcommand)]
        action: IsometryCmd,
    },
    /// Named property sweeps.
    Property {
        #[command(subcommand)]
        action: PropertyCmd,
    },
    /// Witness generators.
    Witness {
        #[command(subcommand)]
        kind: WitnessCmd,
    },
}

#[derive(Subcommand)]
enum IsometryCmd {
    /// Check pairwise distance preservation on a table file.
    Verify {
        #[arg(long)]
        table: PathBuf,
    },
    /// Extract the sign sequence from basis pairs 1..=n.
    Extract {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        table: PathBuf,
    },
}

#[derive(Subcommand)]
enum PropertyCmd {
    /// List the registered sweeps.
    List,
    /// Run one sweep by name.
    Run {
        name: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// A sphere vector x with min(|u+x|, |u-x|) > 1, for u != +/-e_1.
    L3 {
        #[arg(long)]
        u: String,
    },
    /// A sphere vector with |x +/- e_i|^2 = 2 and |x +/- e_j|^2 < 2.
    Fact4 {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match dispatch(&cli) {
        Ok(value) => {
            emit(&value, format);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            emit(&error_json(&e), format);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit(value: &Value, format: Format) {
    let rendered = match format {
        Format::Json => value.to_string(),
        Format::Pretty => serde_json::to_string_pretty(value).expect("serializable"),
    };
    println!("{rendered}");
}

fn error_json(e: &Error) -> Value {
    let mut obj = json!({ "code": e.code(), "message": e.to_string() });
    match e {
        Error::NotDiagonal { index, .. }
        | Error::MissingBasisPair(index)
        | Error::SignsMissing(index) => {
            obj["i"] = json!(index);
        }
        _ => {}
    }
    obj
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn parse_alpha(cli: &Cli) -> Result<Ordinal, Failure> {
    cli.alpha
        .parse::<Ordinal>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_exponent(cli: &Cli) -> Result<Exponent, Failure> {
    if let Ok(p) = cli.p.parse::<u32>() {
        return Exponent::exact(p).map_err(|e| Failure::Usage(e.to_string()));
    }
    let p: f64 = cli
        .p
        .parse()
        .map_err(|_| Failure::Usage(format!("invalid exponent {:?}", cli.p)))?;
    Exponent::approx_with_tolerance(p, cli.tolerance.unwrap_or(DEFAULT_TOLERANCE))
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_set(raw: &str) -> Result<FinSet, Failure> {
    let elems: Result<Vec<u32>, _> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    let elems = elems.map_err(|e| Failure::Usage(format!("invalid set {raw:?}: {e}")))?;
    FinSet::from_elements(elems).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_vector(raw: &str) -> Result<FinVector, Failure> {
    serde_json::from_str(raw).map_err(|e| Failure::Usage(format!("invalid vector {raw:?}: {e}")))
}

fn read_table(path: &PathBuf) -> Result<MapTable, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid table {}: {e}", path.display())))
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::from_env();
    if let Some(cap) = cli.budget {
        b.max_subsets = cap;
    }
    b
}

fn cross_check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Domain(Error::InternalInconsistency(format!(
            "oracle disagrees with the fast path on {what}"
        ))))
    }
}

fn dispatch(cli: &Cli) -> Result<Value, Failure> {
    let alpha = parse_alpha(cli)?;
    let b = budget(cli);
    match &cli.command {
        Command::Member { set } => {
            let f = parse_set(set)?;
            let member = is_member(&f, alpha);
            if cli.oracle {
                cross_check(member_bruteforce(&f, alpha)? == member, "membership")?;
            }
            Ok(json!({ "member": member }))
        }
        Command::Maximal { set } => {
            let f = parse_set(set)?;
            let maximal = is_maximal(&f, alpha)?;
            if cli.oracle {
                let oracle_maximal = match f.max_elem() {
                    Some(max) => !member_bruteforce(&f.with_element(max + 1)?, alpha)?,
                    None => false,
                };
                cross_check(oracle_maximal == maximal, "maximality")?;
            }
            Ok(json!({ "maximal": maximal }))
        }
        Command::Decompose { set } => {
            let g = parse_set(set)?;
            let blocks = decompose_maximal(&g, alpha)?;
            if cli.oracle {
                let OrdinalClass::Successor(beta) = alpha.classify() else {
                    unreachable!("decomposition requires a successor order")
                };
                for block in &blocks {
                    let member = member_bruteforce(block, beta)?;
                    let max = block.max_elem().expect("blocks are nonempty");
                    let extended = member_bruteforce(&block.with_element(max + 1)?, beta)?;
                    cross_check(member && !extended, "block maximality")?;
                }
            }
            Ok(json!({ "blocks": to_value(&blocks) }))
        }
        Command::Enumerate { n, maximal } => {
            let sets = if *maximal {
                enumerate_maximal_with_budget(alpha, *n, &b)?
            } else {
                enumerate_with_budget(alpha, *n, &b)?
            };
            if cli.oracle {
                for f in &sets {
                    cross_check(member_bruteforce(f, alpha)?, "enumerated membership")?;
                }
            }
            Ok(json!({ "count": sets.len(), "sets": to_value(&sets) }))
        }
        Command::Norm { vec } => {
            let x = parse_vector(vec)?;
            let p = parse_exponent(cli)?;
            let nv = norm_with_budget(&x, alpha, &p, &b)?;
            if cli.oracle {
                let slow = norm_bruteforce(&x, alpha, &p)?;
                cross_check(nv.eq_norm(&slow, &p), "the norm")?;
            }
            Ok(to_value(&nv))
        }
        Command::NormingSets { vec } => {
            let x = parse_vector(vec)?;
            let p = parse_exponent(cli)?;
            let nv = norm_with_budget(&x, alpha, &p, &b)?;
            let sets = norming_sets_with_budget(&x, alpha, &p, &b)?;
            if cli.oracle {
                let slow = norm_bruteforce(&x, alpha, &p)?;
                cross_check(nv.eq_norm(&slow, &p), "the norm")?;
            }
            Ok(json!({ "norm": to_value(&nv), "sets": to_value(&sets) }))
        }
        Command::OneSets { vec } => {
            let x = parse_vector(vec)?;
            let report = one_sets::report(&x, alpha)?;
            if cli.oracle {
                let one = schreier_core::rational::int(1);
                for f in &report.one_sets {
                    cross_check(
                        member_bruteforce(f, alpha)? && x.abs_sum_on(f) == one,
                        "a reported 1-set",
                    )?;
                }
            }
            Ok(to_value(&report))
        }
        Command::Gap { vec } => {
            let x = parse_vector(vec)?;
            let g = one_sets::gap(&x, alpha)?;
            Ok(json!({ "gap": g.to_string() }))
        }
        Command::Isometry { action } => match action {
            IsometryCmd::Verify { table } => {
                let t = read_table(table)?;
                let report = verify_isometry(&t)?;
                if cli.oracle {
                    for (x, y) in &t.pairs {
                        for v in [x, y] {
                            let slow = norm_bruteforce(v, t.alpha, &t.p)?;
                            let fast = norm_with_budget(v, t.alpha, &t.p, &b)?;
                            cross_check(fast.eq_norm(&slow, &t.p), "a table entry norm")?;
                        }
                    }
                }
                Ok(to_value(&report))
            }
            IsometryCmd::Extract { n, table } => {
                let t = read_table(table)?;
                let signs = extract_signs(&t, *n)?;
                Ok(json!({ "signs": to_value(&signs) }))
            }
        },
        Command::Property { action } => match action {
            PropertyCmd::List => Ok(json!({ "suites": suites::names() })),
            PropertyCmd::Run {
                name,
                samples,
                seed,
            } => {
                let mut cfg = SuiteConfig {
                    samples: *samples,
                    jobs: cli.jobs,
                    ..SuiteConfig::default()
                };
                if let Some(seed) = seed {
                    cfg.seed = *seed;
                }
                let report = suites::run(name, &cfg)?;
                Ok(to_value(&report))
            }
        },
        Command::Witness { kind } => match kind {
            WitnessCmd::L3 { u } => {
                let u = parse_vector(u)?;
                let p = parse_exponent(cli)?;
                let w = l3_witness(&u, alpha, &p)?;
                if cli.oracle {
                    let slow = norm_bruteforce(&w, alpha, &p)?;
                    let fast = norm_with_budget(&w, alpha, &p, &b)?;
                    cross_check(fast.eq_norm(&slow, &p), "the witness norm")?;
                }
                Ok(json!({ "witness": to_value(&w) }))
            }
            WitnessCmd::Fact4 { i, j } => {
                let x = fact4_witness(*i, *j, alpha)?;
                if cli.oracle && x.support_len() <= 16 {
                    let p2 = Exponent::Exact(2);
                    let slow = norm_bruteforce(&x, alpha, &p2)?;
                    let fast = norm_with_budget(&x, alpha, &p2, &b)?;
                    cross_check(fast.eq_norm(&slow, &p2), "the witness norm")?;
                }
                Ok(json!({ "support": to_value(&x.support()), "witness": to_value(&x) }))
            }
        },
    }
}
