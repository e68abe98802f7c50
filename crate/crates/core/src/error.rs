use num_bigint::BigUint;
use thiserror::Error;

use crate::rootsys::RootSystemId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid root system id {given}: {reason}")]
    InvalidId { given: String, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A zeta factor was requested at an argument where the series diverges.
    #[error("divergent: zeta argument {arg} is not greater than 1")]
    Divergent { arg: f64 },

    #[error("representation of dimension {dim} exceeds the weight cap of {cap}")]
    ResourceLimit { dim: BigUint, cap: u64 },

    #[error("no regular element of order {p} exists in {id}")]
    NoRegularElement { id: RootSystemId, p: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
