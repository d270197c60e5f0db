//! Finitely supported vectors with exact rational coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigRational, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::finset::FinSet;
use crate::rational::parse_rational;

/// A vector with finitely many nonzero rational coordinates, indexed
/// from 1. Zero coordinates are never stored, so the stored key set is
/// exactly the support.
///
/// Serializes as an object of index to rational string, e.g.
/// `{"2":"1/2","3":"1/2"}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FinVector {
    coords: BTreeMap<u32, BigRational>,
}

impl FinVector {
    pub fn zero() -> Self {
        FinVector::default()
    }

    /// The basis vector `e_i`.
    pub fn basis(i: u32) -> Self {
        debug_assert!(i >= 1);
        let mut coords = BTreeMap::new();
        coords.insert(i, BigRational::from_integer(1.into()));
        FinVector { coords }
    }

    /// Builds a vector from `(index, value)` pairs; zero values are
    /// dropped, duplicate indices are rejected.
    pub fn from_pairs(
        pairs: impl IntoIterator<Item = (u32, BigRational)>,
    ) -> Result<Self, Error> {
        let mut coords = BTreeMap::new();
        for (i, v) in pairs {
            if i == 0 {
                return Err(Error::Parse("vector indices start at 1".into()));
            }
            if v.is_zero() {
                continue;
            }
            if coords.insert(i, v).is_some() {
                return Err(Error::Parse(format!("duplicate index {i}")));
            }
        }
        Ok(FinVector { coords })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The coordinate `x(i)`, zero when outside the support.
    pub fn coord(&self, i: u32) -> BigRational {
        self.coords.get(&i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> FinSet {
        FinSet::new(self.coords.keys().copied().collect()).expect("BTreeMap keys ascend")
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn max_support_index(&self) -> Option<u32> {
        self.coords.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.coords.iter().map(|(&i, v)| (i, v))
    }

    /// Sets one coordinate, keeping the no-stored-zero invariant.
    pub fn with_coord(&self, i: u32, v: BigRational) -> Self {
        let mut coords = self.coords.clone();
        if v.is_zero() {
            coords.remove(&i);
        } else {
            coords.insert(i, v);
        }
        FinVector { coords }
    }

    /// The vector restricted to an index set.
    pub fn restrict(&self, to: &FinSet) -> Self {
        FinVector {
            coords: self
                .coords
                .iter()
                .filter(|(&i, _)| to.contains(i))
                .map(|(&i, v)| (i, v.clone()))
                .collect(),
        }
    }

    /// Sum of `|x(i)|` over a set of indices.
    pub fn abs_sum_on(&self, set: &FinSet) -> BigRational {
        set.iter().map(|i| self.coord(i).abs()).sum()
    }
}

impl Add for &FinVector {
    type Output = FinVector;
    fn add(self, rhs: &FinVector) -> FinVector {
        let mut coords = self.coords.clone();
        for (&i, v) in &rhs.coords {
            let sum = self.coord(i) + v;
            if sum.is_zero() {
                coords.remove(&i);
            } else {
                coords.insert(i, sum);
            }
        }
        FinVector { coords }
    }
}

impl Sub for &FinVector {
    type Output = FinVector;
    fn sub(self, rhs: &FinVector) -> FinVector {
        self + &(-rhs)
    }
}

impl Neg for &FinVector {
    type Output = FinVector;
    fn neg(self) -> FinVector {
        FinVector {
            coords: self.coords.iter().map(|(&i, v)| (i, -v)).collect(),
        }
    }
}

impl fmt::Display for FinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, v)) in self.coords.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})e_{i}")?;
        }
        Ok(())
    }
}

impl Serialize for FinVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coords.len()))?;
        for (i, v) in &self.coords {
            map.serialize_entry(&i.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for FinVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct VecVisitor;

        impl<'de> Visitor<'de> for VecVisitor {
            type Value = FinVector;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map of index strings to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<FinVector, A::Error> {
                let mut pairs = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let i: u32 = k
                        .parse()
                        .map_err(|_| de::Error::custom(format!("invalid index {k:?}")))?;
                    let r = parse_rational(&v).map_err(de::Error::custom)?;
                    pairs.push((i, r));
                }
                FinVector::from_pairs(pairs).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_map(VecVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn construction_normalizes_zeros() {
        let v = FinVector::from_pairs([(2, ratio(1, 2)), (5, ratio(0, 1))]).unwrap();
        assert_eq!(v.support().elements(), &[2]);
        assert!(FinVector::from_pairs([(2, ratio(1, 2)), (2, ratio(1, 3))]).is_err());
        assert!(FinVector::from_pairs([(0, ratio(1, 2))]).is_err());
    }

    #[test]
    fn arithmetic() {
        let x = FinVector::from_pairs([(2, ratio(3, 5)), (3, ratio(4, 5))]).unwrap();
        let e2 = FinVector::basis(2);
        let d = &x - &e2;
        assert_eq!(d.coord(2), ratio(-2, 5));
        assert_eq!(d.coord(3), ratio(4, 5));
        assert_eq!((&x - &x), FinVector::zero());
        assert_eq!((&-&x).coord(3), ratio(-4, 5));
    }

    #[test]
    fn json_round_trip() {
        let x = FinVector::from_pairs([(2, ratio(1, 2)), (3, ratio(-1, 2))]).unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"2":"1/2","3":"-1/2"}"#);
        assert_eq!(serde_json::from_str::<FinVector>(&json).unwrap(), x);
        // Zero entries are dropped on input.
        let y: FinVector = serde_json::from_str(r#"{"4":"0","7":"2"}"#).unwrap();
        assert_eq!(y.support().elements(), &[7]);
    }
}
