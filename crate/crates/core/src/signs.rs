//! Finite sign sequences, the data of a diagonal isometry.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A finite sequence of signs `theta_1..theta_N`, each `+1` or `-1`,
/// indexed from 1. Serializes as an integer array, e.g. `[1,-1,1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSeq(Vec<i8>);

impl SignSeq {
    pub fn new(signs: Vec<i8>) -> Result<Self, Error> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("signs must be +1 or -1".into()));
        }
        Ok(SignSeq(signs))
    }

    /// All-plus sequence of the given length.
    pub fn plus(len: usize) -> Self {
        SignSeq(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sign at 1-based index `i`, if covered.
    pub fn sign(&self, i: u32) -> Option<i8> {
        if i == 0 {
            return None;
        }
        self.0.get((i - 1) as usize).copied()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Largest index covered by the sequence.
    pub fn max_index(&self) -> u32 {
        self.0.len() as u32
    }

    /// Returns a copy with the sign at 1-based index `i` flipped.
    pub fn flipped(&self, i: u32) -> Self {
        let mut v = self.0.clone();
        if i >= 1 {
            if let Some(s) = v.get_mut((i - 1) as usize) {
                *s = -*s;
            }
        }
        SignSeq(v)
    }
}

impl Serialize for SignSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<i8>::deserialize(deserializer)?;
        SignSeq::new(v).map_err(de::Error::custom)
    }
}
