//! Definition-literal reference implementations used as ground truth in
//! tests.
//!
//! These are deliberately slow, unmemoized, and independent of the fast
//! paths: membership tries every block decomposition and, at limits,
//! every admissible approximant; the norm enumerates every subset of the
//! support. Nothing here is shared with `family` or `norm` beyond the
//! type definitions.

use num::{BigRational, Zero};

use crate::budget::Budget;
use crate::error::Error;
use crate::finset::FinSet;
use crate::norm::{Exponent, NormValue};
use crate::ordinal::{Ordinal, OrdinalClass};
use crate::rational::{abs_pow, to_f64};
use crate::vector::FinVector;

/// Membership in `S_alpha` by literal recursion over the definition:
/// every split into at most `min F` nonempty consecutive blocks is
/// tried at successors, and every `n <= min F` at limits.
pub fn member_bruteforce(f: &FinSet, alpha: Ordinal) -> Result<bool, Error> {
    let budget = Budget::default();
    if f.len() > budget.oracle_max_support {
        return Err(Error::ResourceLimit(format!(
            "oracle membership limited to sets of size {}",
            budget.oracle_max_support
        )));
    }
    Ok(member_rec(f.elements(), alpha))
}

fn member_rec(elems: &[u32], alpha: Ordinal) -> bool {
    if elems.is_empty() {
        return true;
    }
    match alpha.classify() {
        OrdinalClass::Zero => elems.len() <= 1,
        OrdinalClass::Successor(beta) => {
            let max_blocks = elems[0] as usize;
            splits_into_blocks(elems, beta, max_blocks)
        }
        OrdinalClass::Limit => {
            let m = elems[0];
            (1..=m).any(|n| member_rec(elems, alpha.approximant(n).expect("limit")))
        }
    }
}

fn splits_into_blocks(elems: &[u32], beta: Ordinal, blocks_left: usize) -> bool {
    if elems.is_empty() {
        return true;
    }
    if blocks_left == 0 {
        return false;
    }
    (1..=elems.len()).any(|l| {
        member_rec(&elems[..l], beta) && splits_into_blocks(&elems[l..], beta, blocks_left - 1)
    })
}

/// The norm by full subset enumeration over the support, filtering with
/// `member_bruteforce`.
pub fn norm_bruteforce(
    x: &FinVector,
    alpha: Ordinal,
    p: &Exponent,
) -> Result<NormValue, Error> {
    let budget = Budget::default();
    let supp: Vec<u32> = x.support().elements().to_vec();
    if supp.len() > budget.oracle_max_support {
        return Err(Error::ResourceLimit(format!(
            "oracle norm limited to supports of size {}",
            budget.oracle_max_support
        )));
    }
    match *p {
        Exponent::Exact(pe) => {
            let mut best: BigRational = Zero::zero();
            for subset in all_subsets(&supp) {
                if member_rec(&subset, alpha) {
                    let sum: BigRational =
                        subset.iter().map(|&i| abs_pow(&x.coord(i), pe)).sum();
                    if sum > best {
                        best = sum;
                    }
                }
            }
            Ok(NormValue::Exact {
                pth_power: best,
                p: pe,
            })
        }
        Exponent::Approx { p: pf, .. } => {
            let mut best = 0.0f64;
            for subset in all_subsets(&supp) {
                if member_rec(&subset, alpha) {
                    let sum: f64 = subset
                        .iter()
                        .map(|&i| to_f64(&x.coord(i)).abs().powf(pf))
                        .sum();
                    if sum > best {
                        best = sum;
                    }
                }
            }
            Ok(NormValue::Approx {
                value: best.powf(1.0 / pf),
                p: pf,
            })
        }
    }
}

fn all_subsets(supp: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let n = supp.len();
    (0u64..(1u64 << n)).map(move |mask| {
        (0..n)
            .filter(|&k| mask & (1 << k) != 0)
            .map(|k| supp[k])
            .collect()
    })
}
