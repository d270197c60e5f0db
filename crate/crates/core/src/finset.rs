//! Finite strictly increasing sets of positive integers.

use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A finite subset of `{1, 2, 3, ...}`, stored as a strictly increasing
/// sequence. May be empty. Serializes as an ascending integer array,
/// e.g. `[2,3,5]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet(Vec<u32>);

impl FinSet {
    /// Builds a set from an already strictly increasing sequence of
    /// integers `>= 1`.
    pub fn new(elements: Vec<u32>) -> Result<Self, Error> {
        if elements.first().is_some_and(|&e| e == 0) {
            return Err(Error::Parse("set elements must be >= 1".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(
                "set elements must be strictly increasing".into(),
            ));
        }
        Ok(FinSet(elements))
    }

    /// Builds a set from arbitrary elements, sorting and deduplicating.
    pub fn from_elements(mut elements: Vec<u32>) -> Result<Self, Error> {
        elements.sort_unstable();
        elements.dedup();
        FinSet::new(elements)
    }

    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn singleton(k: u32) -> Self {
        debug_assert!(k >= 1);
        FinSet(vec![k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_elem(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn max_elem(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, k: u32) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// The set with `k` added (no-op if already present).
    pub fn with_element(&self, k: u32) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::Parse("set elements must be >= 1".into()));
        }
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&k) {
            v.insert(pos, k);
        }
        Ok(FinSet(v))
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.0.iter().all(|&k| other.contains(k))
    }

    /// Union of two sets.
    pub fn union(&self, other: &FinSet) -> FinSet {
        let mut v: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        FinSet(v)
    }

    /// Intersection of two sets.
    pub fn intersection(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.iter().copied().filter(|&k| other.contains(k)).collect())
    }

    /// `true` when every element of `self` is below every element of
    /// `other`; vacuously true when either set is empty.
    pub fn entirely_before(&self, other: &FinSet) -> bool {
        match (self.max_elem(), other.min_elem()) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for FinSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(deserializer)?;
        FinSet::new(v).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FinSet::new(vec![2, 3, 5]).is_ok());
        assert!(FinSet::new(vec![]).is_ok());
        assert!(FinSet::new(vec![0, 1]).is_err());
        assert!(FinSet::new(vec![2, 2]).is_err());
        assert!(FinSet::new(vec![3, 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = FinSet::new(vec![2, 3, 5]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[2,3,5]");
        assert_eq!(serde_json::from_str::<FinSet>(&json).unwrap(), s);
        assert!(serde_json::from_str::<FinSet>("[3,2]").is_err());
    }

    #[test]
    fn ordering_helpers() {
        let a = FinSet::new(vec![2, 3]).unwrap();
        let b = FinSet::new(vec![4, 7]).unwrap();
        assert!(a.entirely_before(&b));
        assert!(!b.entirely_before(&a));
        assert!(FinSet::empty().entirely_before(&a));
        assert_eq!(a.union(&b).elements(), &[2, 3, 4, 7]);
        assert!(a.is_subset_of(&a.union(&b)));
    }
}
