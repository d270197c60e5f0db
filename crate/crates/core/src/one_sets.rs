//! The p = 1 combinatorics: 1-sets, the gap below 1, and the non-maximal
//! 1-set structure at order 1.
//!
//! For a sphere vector `x` of `X_{S_alpha}` (p = 1), a 1-set is an
//! admissible `F` with `sum_{i in F} |x(i)| = 1` and no zero coordinate
//! on `F`. Every other admissible sum stays a positive gap below 1, and
//! at order 1 at most one 1-set is non-maximal; when it exists it is the
//! tail interval `[min F, inf) /\ supp(x)`.

use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::family::is_maximal;
use crate::finset::FinSet;
use crate::norm::{is_on_sphere, member_subsets_with_sums, Exponent};
use crate::ordinal::Ordinal;
use crate::vector::FinVector;

/// Aggregated p = 1 report for one vector, as produced by the CLI.
#[derive(Debug, Clone, PartialEq)]
pub struct OneSetReport {
    pub one_sets: Vec<FinSet>,
    pub gap: BigRational,
    pub nonmaximal_one_set: Option<FinSet>,
}

impl Serialize for OneSetReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("OneSetReport", 3)?;
        st.serialize_field("one_sets", &self.one_sets)?;
        st.serialize_field("gap", &self.gap.to_string())?;
        st.serialize_field("nonmaximal_one_set", &self.nonmaximal_one_set)?;
        st.end()
    }
}

fn require_sphere(x: &FinVector, alpha: Ordinal) -> Result<(), Error> {
    if is_on_sphere(x, alpha, &Exponent::Exact(1))? {
        Ok(())
    } else {
        Err(Error::NotOnSphere)
    }
}

/// All 1-sets of a sphere vector, sorted lexicographically. Restricting
/// the search to subsets of the support is lossless by heredity and
/// enforces the no-zero-coordinate condition.
pub fn one_sets(x: &FinVector, alpha: Ordinal) -> Result<Vec<FinSet>, Error> {
    require_sphere(x, alpha)?;
    let one = BigRational::one();
    Ok(member_subsets_with_sums(x, alpha, 1)
        .into_iter()
        .filter(|(_, sum)| *sum == one)
        .map(|(f, _)| f)
        .collect())
}

/// The gap `g`: every admissible set that is not a 1-set sums to at most
/// `1 - g`. When only the empty sum stays below 1 the gap is 1.
pub fn gap(x: &FinVector, alpha: Ordinal) -> Result<BigRational, Error> {
    require_sphere(x, alpha)?;
    let one = BigRational::one();
    let best_below: BigRational = member_subsets_with_sums(x, alpha, 1)
        .into_iter()
        .map(|(_, sum)| sum)
        .filter(|s| *s < one)
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(one - best_below)
}

/// The unique non-maximal 1-set at order 1, when it exists.
///
/// Uniqueness and the tail-interval form are only guaranteed at order 1;
/// other orders report `UnsupportedOrder` (their non-maximal 1-sets are
/// visible through `one_sets`).
pub fn nonmaximal_one_set(x: &FinVector, alpha: Ordinal) -> Result<Option<FinSet>, Error> {
    if alpha != Ordinal::ONE {
        return Err(Error::UnsupportedOrder);
    }
    let mut nonmax = Vec::new();
    for f in one_sets(x, alpha)? {
        if !is_maximal(&f, alpha)? {
            nonmax.push(f);
        }
    }
    match nonmax.len() {
        0 => Ok(None),
        1 => Ok(Some(nonmax.remove(0))),
        n => Err(Error::InternalInconsistency(format!(
            "{n} non-maximal 1-sets at order 1 for {x}"
        ))),
    }
}

/// One-call aggregation of the three analyses above.
pub fn report(x: &FinVector, alpha: Ordinal) -> Result<OneSetReport, Error> {
    let one_sets = one_sets(x, alpha)?;
    let gap = gap(x, alpha)?;
    let nonmaximal_one_set = if alpha == Ordinal::ONE {
        nonmaximal_one_set(x, alpha)?
    } else {
        None
    };
    Ok(OneSetReport {
        one_sets,
        gap,
        nonmaximal_one_set,
    })
}
