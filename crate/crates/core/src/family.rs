//! Membership, maximality, enumeration, and structural decomposition for
//! the Schreier families `S_alpha`, `alpha < w^2`.
//!
//! The recursion follows the family definition directly:
//!
//! * `S_0` holds the sets of size at most 1;
//! * `S_{b+1}` holds the sets that split into at most `min F` consecutive
//!   nonempty blocks, each in `S_b` (empty blocks in the definition are
//!   vacuous and normalized away);
//! * at a limit, membership is decided at the `min F`-th approximant,
//!   which is valid because the approximant chain below `w^2` is
//!   increasing.
//!
//! The successor case peels greedy longest admissible prefixes. Heredity
//! makes admissible prefix lengths an initial segment, so the greedy
//! block count is minimal and comparing it against `min F` decides
//! membership. The brute-force oracle cross-checks this on the full
//! enumerated universe in the test suite.

use crate::budget::Budget;
use crate::error::Error;
use crate::finset::FinSet;
use crate::ordinal::{Ordinal, OrdinalClass};

/// Is `F` a member of `S_alpha`? The empty set is a member at every
/// order.
pub fn is_member(f: &FinSet, alpha: Ordinal) -> bool {
    member_slice(f.elements(), alpha)
}

fn member_slice(elems: &[u32], alpha: Ordinal) -> bool {
    if elems.is_empty() {
        return true;
    }
    match alpha.classify() {
        OrdinalClass::Zero => elems.len() <= 1,
        OrdinalClass::Successor(beta) => {
            let budget = elems[0] as usize;
            greedy_block_count(elems, beta, budget)
        }
        OrdinalClass::Limit => {
            let m = elems[0];
            let result = member_slice(elems, alpha.approximant(m).expect("limit"));
            // The approximant chain is increasing, so smaller n cannot
            // rescue a failure at n = min F.
            #[cfg(debug_assertions)]
            if !result {
                for n in 1..m {
                    debug_assert!(
                        !member_slice(elems, alpha.approximant(n).expect("limit")),
                        "approximant chain not increasing at {alpha}"
                    );
                }
            }
            result
        }
    }
}

/// Peels greedy longest prefixes in `S_beta`; returns whether the whole
/// slice is covered within `budget` blocks.
fn greedy_block_count(elems: &[u32], beta: Ordinal, budget: usize) -> bool {
    let mut rest = elems;
    let mut used = 0usize;
    while !rest.is_empty() {
        if used == budget {
            return false;
        }
        let l = longest_member_prefix(rest, beta);
        rest = &rest[l..];
        used += 1;
    }
    true
}

/// Largest `L >= 1` with `rest[..L]` in `S_beta`. Well-defined because
/// singletons belong to every family, and binary-searchable because
/// heredity makes admissible prefix lengths an initial segment.
fn longest_member_prefix(rest: &[u32], beta: Ordinal) -> usize {
    if member_slice(rest, beta) {
        return rest.len();
    }
    let mut lo = 1usize;
    let mut hi = rest.len();
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if member_slice(&rest[..mid], beta) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Has `F` no proper superset in `S_alpha`? Decided by the single
/// extension `F + {max F + 1}`: heredity, spreading, and the one-element
/// extension property of non-maximal members make that test complete.
///
/// The empty set is never maximal. Errors with `NotAMember` when `F` is
/// not in the family.
pub fn is_maximal(f: &FinSet, alpha: Ordinal) -> Result<bool, Error> {
    if !is_member(f, alpha) {
        return Err(Error::NotAMember);
    }
    let Some(max) = f.max_elem() else {
        return Ok(false);
    };
    let extended = f.with_element(max + 1)?;
    Ok(!is_member(&extended, alpha))
}

/// Splits a maximal `G` in `S_{b+1}` into consecutive blocks
/// `G_1 < ... < G_m`, each maximal in `S_b`, with `m = min G_1`.
///
/// Greedy longest-prefix peeling is tried first and post-validated; on
/// validation failure an exhaustive search over block decompositions
/// runs. Failure of both would contradict the decomposition property of
/// maximal sets and reports `InternalInconsistency`.
pub fn decompose_maximal(g: &FinSet, alpha: Ordinal) -> Result<Vec<FinSet>, Error> {
    let OrdinalClass::Successor(beta) = alpha.classify() else {
        return Err(Error::NotSuccessor);
    };
    if !is_member(g, alpha) {
        return Err(Error::NotAMember);
    }
    if !is_maximal(g, alpha)? {
        return Err(Error::NotMaximal);
    }
    let elems = g.elements();
    let m = elems[0] as usize;

    let greedy = peel_greedy(elems, beta);
    if greedy.len() == m && blocks_all_maximal(&greedy, beta) {
        return Ok(greedy);
    }

    // Exhaustive fallback: every split into exactly m nonempty blocks.
    let mut blocks = Vec::with_capacity(m);
    if search_maximal_blocks(elems, beta, m, &mut blocks) {
        return Ok(blocks);
    }
    Err(Error::InternalInconsistency(format!(
        "maximal set {g} at order {alpha} has no decomposition into {m} maximal blocks"
    )))
}

fn peel_greedy(elems: &[u32], beta: Ordinal) -> Vec<FinSet> {
    let mut rest = elems;
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let l = longest_member_prefix(rest, beta);
        blocks.push(FinSet::new(rest[..l].to_vec()).expect("sorted slice"));
        rest = &rest[l..];
    }
    blocks
}

fn blocks_all_maximal(blocks: &[FinSet], beta: Ordinal) -> bool {
    blocks
        .iter()
        .all(|b| matches!(is_maximal(b, beta), Ok(true)))
}

fn search_maximal_blocks(
    rest: &[u32],
    beta: Ordinal,
    blocks_left: usize,
    acc: &mut Vec<FinSet>,
) -> bool {
    if rest.is_empty() {
        return blocks_left == 0;
    }
    if blocks_left == 0 || rest.len() < blocks_left {
        return false;
    }
    for l in 1..=(rest.len() - (blocks_left - 1)) {
        let block = FinSet::new(rest[..l].to_vec()).expect("sorted slice");
        if matches!(is_maximal(&block, beta), Ok(true)) {
            acc.push(block);
            if search_maximal_blocks(&rest[l..], beta, blocks_left - 1, acc) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

/// All members of `S_alpha` inside `{1..n}`, the empty set included,
/// in lexicographic order.
pub fn enumerate(alpha: Ordinal, n: u32) -> Result<Vec<FinSet>, Error> {
    enumerate_with_budget(alpha, n, &Budget::default())
}

pub fn enumerate_with_budget(alpha: Ordinal, n: u32, budget: &Budget) -> Result<Vec<FinSet>, Error> {
    if n >= 63 || (1u64 << n) > budget.max_subsets {
        return Err(Error::ResourceLimit(format!(
            "2^{n} subsets exceed the budget of {}",
            budget.max_subsets
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let elems: Vec<u32> = (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
        let f = FinSet::new(elems).expect("ascending by construction");
        if is_member(&f, alpha) {
            out.push(f);
        }
    }
    out.sort();
    Ok(out)
}

/// The members of `S_alpha` inside `{1..n}` that are maximal in the full
/// family (not merely in the restriction).
pub fn enumerate_maximal(alpha: Ordinal, n: u32) -> Result<Vec<FinSet>, Error> {
    enumerate_maximal_with_budget(alpha, n, &Budget::default())
}

pub fn enumerate_maximal_with_budget(
    alpha: Ordinal,
    n: u32,
    budget: &Budget,
) -> Result<Vec<FinSet>, Error> {
    let mut out = enumerate_with_budget(alpha, n, budget)?;
    out.retain(|f| !f.is_empty() && matches!(is_maximal(f, alpha), Ok(true)));
    Ok(out)
}

/// Validates that `image` is a spread of `F` (same size, pointwise `>=`
/// after order-matching) and returns it. Spreading stability of the
/// families is the matching invariant: members spread to members.
pub fn spread(f: &FinSet, image: &FinSet) -> Result<FinSet, Error> {
    if f.len() != image.len() {
        return Err(Error::NotASpread);
    }
    let ok = f
        .elements()
        .iter()
        .zip(image.elements())
        .all(|(&a, &b)| b >= a);
    if ok {
        Ok(image.clone())
    } else {
        Err(Error::NotASpread)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[u32]) -> FinSet {
        FinSet::new(elems.to_vec()).unwrap()
    }

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&set(&[2, 5]), ord("1")));
        assert!(!is_member(&set(&[1, 2]), ord("1")));
        assert!(is_member(&set(&[2, 3, 4, 5]), ord("2")));
        assert!(!is_member(&set(&[2, 3, 4]), ord("1")));
        assert!(is_member(&FinSet::empty(), ord("w*2+5")));
    }

    #[test]
    fn s1_closed_form_small() {
        for mask in 0u32..(1 << 8) {
            let elems: Vec<u32> = (1..=8).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
            let f = set(&elems);
            let expected = f.is_empty() || f.len() as u32 <= f.min_elem().unwrap();
            assert_eq!(is_member(&f, ord("1")), expected, "{f}");
        }
    }

    #[test]
    fn maximality_examples() {
        assert_eq!(is_maximal(&set(&[1]), ord("2")), Ok(true));
        assert_eq!(is_maximal(&set(&[2, 3]), ord("1")), Ok(true));
        assert_eq!(is_maximal(&set(&[3, 4]), ord("1")), Ok(false));
        assert_eq!(is_maximal(&set(&[1, 2]), ord("1")), Err(Error::NotAMember));
        assert_eq!(is_maximal(&FinSet::empty(), ord("1")), Ok(false));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_maximal(&set(&[1]), ord("1")).unwrap(),
            vec![set(&[1])]
        );
        assert_eq!(
            decompose_maximal(&set(&[2, 3, 4, 5, 6, 7]), ord("2")).unwrap(),
            vec![set(&[2, 3]), set(&[4, 5, 6, 7])]
        );
        assert_eq!(
            decompose_maximal(&set(&[3, 4, 5]), ord("1")).unwrap(),
            vec![set(&[3]), set(&[4]), set(&[5])]
        );
        assert_eq!(
            decompose_maximal(&set(&[2, 3]), ord("w")),
            Err(Error::NotSuccessor)
        );
        assert_eq!(
            decompose_maximal(&set(&[3, 4]), ord("1")),
            Err(Error::NotMaximal)
        );
    }

    #[test]
    fn enumerate_examples() {
        let s0: Vec<FinSet> = enumerate(ord("0"), 3).unwrap();
        assert_eq!(
            s0,
            vec![FinSet::empty(), set(&[1]), set(&[2]), set(&[3])]
        );
        let s1 = enumerate(ord("1"), 4).unwrap();
        assert_eq!(s1.len(), 8);
        assert!(s1.contains(&set(&[3, 4])) && !s1.contains(&set(&[1, 2])));
        assert_eq!(
            enumerate(ord("1"), 1).unwrap(),
            vec![FinSet::empty(), set(&[1])]
        );
        let tight = Budget {
            max_subsets: 8,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_with_budget(ord("1"), 4, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn enumerate_maximal_examples() {
        // {3,4} extends to {3,4,5}, so it is not maximal.
        assert_eq!(
            enumerate_maximal(ord("1"), 4).unwrap(),
            vec![set(&[1]), set(&[2, 3]), set(&[2, 4])]
        );
        assert_eq!(
            enumerate_maximal(ord("0"), 2).unwrap(),
            vec![set(&[1]), set(&[2])]
        );
        // {2,3} is not maximal in S_2 ({2,3,4} still splits into two
        // admissible blocks), leaving {1} alone.
        assert_eq!(enumerate_maximal(ord("2"), 3).unwrap(), vec![set(&[1])]);
    }

    #[test]
    fn spread_examples() {
        assert_eq!(
            spread(&set(&[2, 3]), &set(&[2, 7])).unwrap(),
            set(&[2, 7])
        );
        assert_eq!(
            spread(&set(&[2, 3]), &set(&[1, 5])),
            Err(Error::NotASpread)
        );
        assert_eq!(
            spread(&set(&[3, 4, 5]), &set(&[3, 9, 11])).unwrap(),
            set(&[3, 9, 11])
        );
        assert_eq!(spread(&set(&[2, 3]), &set(&[2])), Err(Error::NotASpread));
    }

    #[test]
    fn singleton_and_pair_rules() {
        for alpha in ["0", "1", "2", "3", "w", "w+1", "w*2"] {
            for k in 1..=40 {
                assert!(is_member(&set(&[k]), ord(alpha)), "{{{k}}} at {alpha}");
            }
        }
        for alpha in ["1", "2", "3", "w", "w+1", "w*2"] {
            for m in 2..=10u32 {
                for n_ in (m + 1)..=12 {
                    assert!(is_member(&set(&[m, n_]), ord(alpha)));
                }
            }
        }
    }

    #[test]
    fn monotonicity_in_order() {
        // Successor steps only: passing a limit does not preserve
        // membership pointwise (a set with small minimum can sit in S_3
        // without sitting in the low approximant S_w selects for it).
        for (a, b) in [("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("w", "w+1")] {
            let (a, b) = (ord(a), ord(b));
            for f in enumerate(a, 10).unwrap() {
                assert!(is_member(&f, b), "{f} in S_{a} but not S_{b}");
            }
        }
    }

    #[test]
    fn goodness_hook_approximant_chain() {
        // Predecessors of the approximants of a limit give an increasing
        // chain of families.
        for alpha in [Ordinal::OMEGA, Ordinal::new(2, 0)] {
            for n in 1..=6u32 {
                let beta_n = match alpha.approximant(n).unwrap().classify() {
                    OrdinalClass::Successor(b) => b,
                    _ => unreachable!("approximants are successors"),
                };
                let beta_next = match alpha.approximant(n + 1).unwrap().classify() {
                    OrdinalClass::Successor(b) => b,
                    _ => unreachable!(),
                };
                for f in enumerate(beta_n, 12).unwrap() {
                    assert!(is_member(&f, beta_next));
                }
            }
        }
    }
}
