//! Error type shared by every operation in the crate.

use crate::vector::FinVector;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("ordinal is not a limit")]
    NotALimit,
    #[error("set is not a member of the family")]
    NotAMember,
    #[error("ordinal is not a successor")]
    NotSuccessor,
    #[error("set is not maximal in the family")]
    NotMaximal,
    #[error("image is not a spread of the set")]
    NotASpread,
    #[error("resource budget exceeded: {0}")]
    ResourceLimit(String),
    #[error("sign sequence does not cover index {0}")]
    SignsMissing(u32),
    #[error("vector is not on the unit sphere")]
    NotOnSphere,
    #[error("operation is not defined at this family order")]
    UnsupportedOrder,
    #[error("table has no pair for basis vector e_{0}")]
    MissingBasisPair(u32),
    #[error("image of e_{index} is not a signed basis vector")]
    NotDiagonal { index: u32, image: FinVector },
    #[error("input is one of +e_1, -e_1, for which no witness exists")]
    IsPlusMinusE1,
    #[error("weights must be positive and sum to 1")]
    WeightsNotNormalized,
    #[error("weight is not an exact p-th power of a rational")]
    NotAPthPower,
    #[error("input excluded by the statement: {0}")]
    ExcludedInput(&'static str),
    #[error("witness construction failed within the search budget")]
    ConstructionFailed,
    #[error("internal consistency violation: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotALimit => "NotALimit",
            Error::NotAMember => "NotAMember",
            Error::NotSuccessor => "NotSuccessor",
            Error::NotMaximal => "NotMaximal",
            Error::NotASpread => "NotASpread",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::SignsMissing(_) => "SignsMissing",
            Error::NotOnSphere => "NotOnSphere",
            Error::UnsupportedOrder => "UnsupportedOrder",
            Error::MissingBasisPair(_) => "MissingBasisPair",
            Error::NotDiagonal { .. } => "NotDiagonal",
            Error::IsPlusMinusE1 => "IsPlusMinusE1",
            Error::WeightsNotNormalized => "WeightsNotNormalized",
            Error::NotAPthPower => "NotAPthPower",
            Error::ExcludedInput(_) => "ExcludedInput",
            Error::ConstructionFailed => "ConstructionFailed",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::Parse(_) => "Parse",
        }
    }
}
