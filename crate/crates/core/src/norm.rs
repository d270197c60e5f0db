//! Exact evaluation of the `S_alpha` norms and their p-convexifications
//! on finitely supported vectors.
//!
//! The norm is `sup { (sum_{i in F} |x(i)|^p)^(1/p) ; F in S_alpha }`.
//! Heredity makes restricting `F` to the support lossless, so the
//! supremum is a finite maximum. For integer `p` everything is exact:
//! comparisons run on p-th powers, which are rational even when the norm
//! itself is not. Non-integer `p` runs in `f64` with a comparison
//! tolerance.

use std::cmp::Ordering;

use num::{BigRational, One, Zero};
use serde::ser::SerializeStruct;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::budget::Budget;
use crate::error::Error;
use crate::family::is_member;
use crate::finset::FinSet;
use crate::ordinal::Ordinal;
use crate::rational::{abs_pow, root_f64, to_f64};
use crate::signs::SignSeq;
use crate::vector::FinVector;

/// The exponent of a p-convexification.
///
/// `Exact(p)` selects fully exact rational arithmetic for integer
/// `p >= 1`; `Approx` covers non-integer `p > 1` with `f64` sums and a
/// comparison tolerance (default `1e-12`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Exact(u32),
    Approx { p: f64, tolerance: f64 },
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

impl Exponent {
    pub fn exact(p: u32) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::Parse("exponent must be >= 1".into()));
        }
        Ok(Exponent::Exact(p))
    }

    pub fn approx(p: f64) -> Result<Self, Error> {
        Exponent::approx_with_tolerance(p, DEFAULT_TOLERANCE)
    }

    pub fn approx_with_tolerance(p: f64, tolerance: f64) -> Result<Self, Error> {
        if !(p > 1.0) || !p.is_finite() {
            return Err(Error::Parse("approximate exponent must be > 1".into()));
        }
        if !(tolerance > 0.0) {
            return Err(Error::Parse("tolerance must be > 0".into()));
        }
        Ok(Exponent::Approx { p, tolerance })
    }

    /// The numeric value of `p`.
    pub fn value(&self) -> f64 {
        match self {
            Exponent::Exact(p) => f64::from(*p),
            Exponent::Approx { p, .. } => *p,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Exponent::Exact(_))
    }
}

#[derive(Serialize, Deserialize)]
struct ExponentRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match *self {
            Exponent::Exact(p) => ExponentRepr {
                exact: Some(p),
                approx: None,
                tolerance: None,
            },
            Exponent::Approx { p, tolerance } => ExponentRepr {
                exact: None,
                approx: Some(p),
                tolerance: Some(tolerance),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ExponentRepr::deserialize(deserializer)?;
        match (repr.exact, repr.approx) {
            (Some(p), None) => Exponent::exact(p).map_err(de::Error::custom),
            (None, Some(p)) => {
                Exponent::approx_with_tolerance(p, repr.tolerance.unwrap_or(DEFAULT_TOLERANCE))
                    .map_err(de::Error::custom)
            }
            _ => Err(de::Error::custom(
                "exponent needs exactly one of \"exact\" or \"approx\"",
            )),
        }
    }
}

/// A computed norm. In exact mode the p-th power of the norm is carried
/// as a rational (the norm itself may be irrational) together with a
/// decimal approximation; in approximate mode only the `f64` value.
#[derive(Debug, Clone, PartialEq)]
pub enum NormValue {
    Exact { pth_power: BigRational, p: u32 },
    Approx { value: f64, p: f64 },
}

impl NormValue {
    /// The norm as `f64`.
    pub fn approx(&self) -> f64 {
        match self {
            NormValue::Exact { pth_power, p } => root_f64(pth_power, *p),
            NormValue::Approx { value, .. } => *value,
        }
    }

    /// The exact p-th power, when available.
    pub fn pth_power(&self) -> Option<&BigRational> {
        match self {
            NormValue::Exact { pth_power, .. } => Some(pth_power),
            NormValue::Approx { .. } => None,
        }
    }

    /// Compares the norm against a non-negative rational scalar: exact
    /// mode compares p-th powers, approximate mode compares within the
    /// exponent tolerance (ties report `Equal`).
    pub fn cmp_scalar(&self, value: &BigRational, exp: &Exponent) -> Ordering {
        match (self, exp) {
            (NormValue::Exact { pth_power, p }, _) => {
                pth_power.cmp(&abs_pow(value, *p))
            }
            (NormValue::Approx { value: v, .. }, Exponent::Approx { tolerance, .. }) => {
                let w = to_f64(value);
                if (v - w).abs() <= *tolerance {
                    Ordering::Equal
                } else if v < &w {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (NormValue::Approx { value: v, .. }, Exponent::Exact(_)) => {
                v.partial_cmp(&to_f64(value)).unwrap_or(Ordering::Equal)
            }
        }
    }

    /// Whether two norms computed at the same exponent are equal.
    pub fn eq_norm(&self, other: &NormValue, exp: &Exponent) -> bool {
        match (self, other) {
            (NormValue::Exact { pth_power: a, .. }, NormValue::Exact { pth_power: b, .. }) => {
                a == b
            }
            (NormValue::Approx { value: a, .. }, NormValue::Approx { value: b, .. }) => {
                let tol = match exp {
                    Exponent::Approx { tolerance, .. } => *tolerance,
                    Exponent::Exact(_) => 0.0,
                };
                (a - b).abs() <= tol
            }
            _ => false,
        }
    }
}

impl Serialize for NormValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            NormValue::Exact { pth_power, p } => {
                let mut st = serializer.serialize_struct("NormValue", 3)?;
                st.serialize_field("pth_power", &pth_power.to_string())?;
                st.serialize_field("p", p)?;
                st.serialize_field("approx", &self.approx())?;
                st.end()
            }
            NormValue::Approx { value, p } => {
                let mut st = serializer.serialize_struct("NormValue", 2)?;
                st.serialize_field("value", value)?;
                st.serialize_field("p", p)?;
                st.end()
            }
        }
    }
}

/// Additive masses the subset search can maximize: exact rationals or
/// floats.
trait Mass: Clone + PartialOrd {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl Mass for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl Mass for f64 {
    fn zero() -> Self {
        0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

/// Branch-and-bound over the member subsets of `supp`: depth-first
/// include/exclude on each index, pruning branches whose partial set has
/// already left the family (heredity) and branches whose remaining mass
/// cannot reach the best sum. Returns the best sum together with every
/// member subset attaining it.
fn member_maximizers<M: Mass>(
    supp: &[u32],
    weights: &[M],
    alpha: Ordinal,
) -> (M, Vec<Vec<u32>>) {
    let n = supp.len();
    let mut suffix = vec![M::zero(); n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].plus(&weights[i]);
    }
    let mut best = M::zero();
    let mut argmax: Vec<Vec<u32>> = vec![Vec::new()];
    let mut current: Vec<u32> = Vec::new();
    let mut sum = M::zero();

    fn dfs<M: Mass>(
        i: usize,
        supp: &[u32],
        weights: &[M],
        suffix: &[M],
        alpha: Ordinal,
        current: &mut Vec<u32>,
        sum: &mut M,
        best: &mut M,
        argmax: &mut Vec<Vec<u32>>,
    ) {
        if sum.plus(&suffix[i]) < *best {
            return;
        }
        if i == supp.len() {
            if *sum > *best {
                *best = sum.clone();
                argmax.clear();
            }
            if *sum == *best {
                argmax.push(current.clone());
            }
            return;
        }
        current.push(supp[i]);
        let candidate = FinSet::new(current.clone()).expect("ascending");
        if is_member(&candidate, alpha) {
            let prev = sum.clone();
            *sum = sum.plus(&weights[i]);
            dfs(i + 1, supp, weights, suffix, alpha, current, sum, best, argmax);
            *sum = prev;
        }
        current.pop();
        dfs(i + 1, supp, weights, suffix, alpha, current, sum, best, argmax);
    }

    dfs(
        0,
        supp,
        weights,
        &suffix,
        alpha,
        &mut current,
        &mut sum,
        &mut best,
        &mut argmax,
    );
    (best, argmax)
}

/// Every member subset of the support together with its exact p-th-power
/// sum. Used by the p = 1 analysis, which needs all admissible sums, not
/// just the maximum.
pub(crate) fn member_subsets_with_sums(
    x: &FinVector,
    alpha: Ordinal,
    p: u32,
) -> Vec<(FinSet, BigRational)> {
    let supp: Vec<u32> = x.support().elements().to_vec();
    let weights: Vec<BigRational> = supp.iter().map(|&i| abs_pow(&x.coord(i), p)).collect();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();

    fn dfs(
        i: usize,
        supp: &[u32],
        weights: &[BigRational],
        alpha: Ordinal,
        current: &mut Vec<u32>,
        sum: BigRational,
        out: &mut Vec<(FinSet, BigRational)>,
    ) {
        if i == supp.len() {
            out.push((FinSet::new(current.clone()).expect("ascending"), sum));
            return;
        }
        current.push(supp[i]);
        let candidate = FinSet::new(current.clone()).expect("ascending");
        if is_member(&candidate, alpha) {
            dfs(
                i + 1,
                supp,
                weights,
                alpha,
                current,
                sum.clone() + &weights[i],
                out,
            );
        }
        current.pop();
        dfs(i + 1, supp, weights, alpha, current, sum, out);
    }

    dfs(0, &supp, &weights, alpha, &mut current, Zero::zero(), &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn check_support_budget(x: &FinVector, budget: &Budget) -> Result<(), Error> {
    if x.support_len() > budget.max_support {
        return Err(Error::ResourceLimit(format!(
            "support size {} exceeds the norm budget of {}",
            x.support_len(),
            budget.max_support
        )));
    }
    Ok(())
}

/// The norm of `x` in `X_{S_alpha, p}`. The zero vector has norm 0.
pub fn norm(x: &FinVector, alpha: Ordinal, p: &Exponent) -> Result<NormValue, Error> {
    norm_with_budget(x, alpha, p, &Budget::default())
}

pub fn norm_with_budget(
    x: &FinVector,
    alpha: Ordinal,
    p: &Exponent,
    budget: &Budget,
) -> Result<NormValue, Error> {
    check_support_budget(x, budget)?;
    let supp: Vec<u32> = x.support().elements().to_vec();
    match *p {
        Exponent::Exact(pe) => {
            let weights: Vec<BigRational> =
                supp.iter().map(|&i| abs_pow(&x.coord(i), pe)).collect();
            let (best, _) = member_maximizers(&supp, &weights, alpha);
            Ok(NormValue::Exact {
                pth_power: best,
                p: pe,
            })
        }
        Exponent::Approx { p: pf, .. } => {
            let weights: Vec<f64> = supp
                .iter()
                .map(|&i| to_f64(&x.coord(i)).abs().powf(pf))
                .collect();
            let (best, _) = member_maximizers(&supp, &weights, alpha);
            Ok(NormValue::Approx {
                value: best.powf(1.0 / pf),
                p: pf,
            })
        }
    }
}

/// All admissible sets attaining the norm, restricted to the support and
/// sorted lexicographically. Nonempty for every `x`; the zero vector
/// reports `{emptyset}`.
pub fn norming_sets(x: &FinVector, alpha: Ordinal, p: &Exponent) -> Result<Vec<FinSet>, Error> {
    norming_sets_with_budget(x, alpha, p, &Budget::default())
}

pub fn norming_sets_with_budget(
    x: &FinVector,
    alpha: Ordinal,
    p: &Exponent,
    budget: &Budget,
) -> Result<Vec<FinSet>, Error> {
    check_support_budget(x, budget)?;
    let supp: Vec<u32> = x.support().elements().to_vec();
    let mut sets: Vec<Vec<u32>> = match *p {
        Exponent::Exact(pe) => {
            let weights: Vec<BigRational> =
                supp.iter().map(|&i| abs_pow(&x.coord(i), pe)).collect();
            member_maximizers(&supp, &weights, alpha).1
        }
        Exponent::Approx { p: pf, .. } => {
            let weights: Vec<f64> = supp
                .iter()
                .map(|&i| to_f64(&x.coord(i)).abs().powf(pf))
                .collect();
            member_maximizers(&supp, &weights, alpha).1
        }
    };
    sets.sort();
    sets.dedup();
    Ok(sets
        .into_iter()
        .map(|v| FinSet::new(v).expect("ascending"))
        .collect())
}

/// Is `x` on the unit sphere? Exact mode tests `norm^p = 1` as
/// rationals; approximate mode tests `|norm - 1| <= tolerance`.
pub fn is_on_sphere(x: &FinVector, alpha: Ordinal, p: &Exponent) -> Result<bool, Error> {
    let nv = norm(x, alpha, p)?;
    Ok(nv.cmp_scalar(&BigRational::one(), p) == Ordering::Equal)
}

/// The distance `|| x - y ||` with exact coordinate subtraction.
pub fn distance(
    x: &FinVector,
    y: &FinVector,
    alpha: Ordinal,
    p: &Exponent,
) -> Result<NormValue, Error> {
    norm(&(x - y), alpha, p)
}

/// Applies the diagonal map `x -> (theta_i x(i))`. An exact isometry for
/// every order and exponent by 1-unconditionality of the basis.
pub fn apply_diagonal(theta: &SignSeq, x: &FinVector) -> Result<FinVector, Error> {
    if let Some(max) = x.max_support_index() {
        if theta.max_index() < max {
            return Err(Error::SignsMissing(max));
        }
    }
    FinVector::from_pairs(x.iter().map(|(i, v)| {
        let s = theta.sign(i).expect("coverage checked");
        (i, if s < 0 { -v } else { v.clone() })
    }))
}
