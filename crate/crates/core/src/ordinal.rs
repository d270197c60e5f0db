//! Ordinal notations below `w^2`.
//!
//! Every family index in this crate is an ordinal of the form `w*q + r`
//! with `q, r` finite. That is enough to express the classical families
//! `S_0, S_1, ...` together with the first limit levels `w, w+1, ...,
//! w*2, ...`, while keeping the approximating sequences at limits
//! canonical: the n-th approximant of `w*(q+1)` is `w*q + n`.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An ordinal `w*q + r` with `q = omega_coeff()` and `r = finite_part()`.
///
/// Equality and ordering are lexicographic on `(q, r)`, which matches the
/// ordinal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal {
    omega: u32,
    finite: u32,
}

/// Classification of an ordinal as zero, a successor, or a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdinalClass {
    Zero,
    Successor(Ordinal),
    Limit,
}

impl Ordinal {
    /// The ordinal `w*omega_coeff + finite`.
    pub const fn new(omega_coeff: u32, finite: u32) -> Self {
        Ordinal {
            omega: omega_coeff,
            finite,
        }
    }

    /// The finite ordinal `r`.
    pub const fn finite(r: u32) -> Self {
        Ordinal::new(0, r)
    }

    pub const ZERO: Ordinal = Ordinal::new(0, 0);
    pub const ONE: Ordinal = Ordinal::new(0, 1);
    pub const OMEGA: Ordinal = Ordinal::new(1, 0);

    pub const fn omega_coeff(self) -> u32 {
        self.omega
    }

    pub const fn finite_part(self) -> u32 {
        self.finite
    }

    pub const fn is_zero(self) -> bool {
        self.omega == 0 && self.finite == 0
    }

    pub const fn is_limit(self) -> bool {
        self.finite == 0 && self.omega >= 1
    }

    pub const fn is_successor(self) -> bool {
        self.finite >= 1
    }

    /// The successor `self + 1`.
    pub const fn succ(self) -> Ordinal {
        Ordinal::new(self.omega, self.finite + 1)
    }

    pub fn classify(self) -> OrdinalClass {
        if self.is_zero() {
            OrdinalClass::Zero
        } else if self.finite >= 1 {
            OrdinalClass::Successor(Ordinal::new(self.omega, self.finite - 1))
        } else {
            OrdinalClass::Limit
        }
    }

    /// The n-th member of the approximating sequence of a limit ordinal:
    /// for `w*(q+1)` this is `w*q + n`.
    ///
    /// Each approximant is a successor, the sequence is strictly
    /// increasing, stays below `self`, and has supremum `self`.
    pub fn approximant(self, n: u32) -> Result<Ordinal, Error> {
        if !self.is_limit() {
            return Err(Error::NotALimit);
        }
        debug_assert!(n >= 1);
        Ok(Ordinal::new(self.omega - 1, n))
    }
}

/// Choice of approximating sequences at limit ordinals.
///
/// The notation here stops below `w^2`, where the canonical rule is
/// provably good (successor approximants with increasing families). A
/// larger notation would plug in through this contract.
pub trait FundamentalSequence {
    /// The n-th approximant of a limit ordinal, `n >= 1`.
    fn approximant(&self, alpha: Ordinal, n: u32) -> Result<Ordinal, Error>;
}

/// The built-in rule `w*(q+1) -> w*q + n` used by every family
/// operation in this crate.
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonicalSequence;

impl FundamentalSequence for CanonicalSequence {
    fn approximant(&self, alpha: Ordinal, n: u32) -> Result<Ordinal, Error> {
        alpha.approximant(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.omega, self.finite) {
            (0, r) => write!(f, "{r}"),
            (1, 0) => write!(f, "w"),
            (1, r) => write!(f, "w+{r}"),
            (q, 0) => write!(f, "w*{q}"),
            (q, r) => write!(f, "w*{q}+{r}"),
        }
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// Grammar: `ord := digits | "w" ("*" digits)? ("+" digits)?`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid ordinal: {s:?}"));
        let digits = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix('w') {
            let (q, rest) = match rest.strip_prefix('*') {
                Some(tail) => {
                    let end = tail
                        .find(|c: char| !c.is_ascii_digit())
                        .unwrap_or(tail.len());
                    if end == 0 {
                        return Err(bad());
                    }
                    (digits(&tail[..end])?, &tail[end..])
                }
                None => (1, rest),
            };
            let r = match rest.strip_prefix('+') {
                Some(tail) => digits(tail)?,
                None if rest.is_empty() => 0,
                None => return Err(bad()),
            };
            Ok(Ordinal::new(q, r))
        } else {
            Ok(Ordinal::finite(digits(s)?))
        }
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
