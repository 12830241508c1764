//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors produced by cone, fan and category computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live over lattices of different ranks.
    RankMismatch { expected: usize, found: usize },
    /// A nonzero vector was required.
    ZeroVector,
    /// A subcone was required to be contained in the ambient cone.
    NotContained,
    /// The given cone is not a face of the ambient cone.
    NotAFace,
    /// A queried cone does not belong to the fan.
    NotInFan,
    /// Two seed cones violate the cofan axiom: their sum is not a common
    /// coface. Carries printable descriptions of the offending pair.
    CofanAxiom { left: String, right: String },
    /// A dual vector lies outside the support of the fan.
    OutsideSupport,
    /// A search exceeded its configured bound.
    ResourceLimit(&'static str),
    /// A category dataset failed validation.
    InvalidModel(String),
    /// A stability charge does not map every object into the extended upper
    /// half-plane. Carries the offending object id.
    InvalidCharge(String),
    /// A full cone of a length model is not unimodular; this signals dataset
    /// corruption.
    NonUnimodular(String),
    /// A family specification is invalid or does not match a dataset.
    InvalidFamily(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::ZeroVector => write!(f, "zero vector is not a valid input here"),
            Error::NotContained => write!(f, "subcone is not contained in the ambient cone"),
            Error::NotAFace => write!(f, "cone is not a face of the ambient cone"),
            Error::NotInFan => write!(f, "cone does not belong to the fan"),
            Error::CofanAxiom { left, right } => {
                write!(f, "cofan axiom violated: sum of {left} and {right} is not a common coface")
            }
            Error::OutsideSupport => write!(f, "vector lies outside the support of the fan"),
            Error::ResourceLimit(what) => write!(f, "resource limit exceeded in {what}"),
            Error::InvalidModel(msg) => write!(f, "invalid category dataset: {msg}"),
            Error::InvalidCharge(msg) => write!(f, "invalid stability charge: {msg}"),
            Error::NonUnimodular(msg) => write!(f, "internal consistency: {msg}"),
            Error::InvalidFamily(msg) => write!(f, "invalid family spec: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
