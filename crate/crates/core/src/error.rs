use thiserror::Error;

use crate::signed::SignedSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground size {found} does not match expected ground size {expected}")]
    GroundSizeMismatch { expected: usize, found: usize },

    #[error("element {element} is outside the ground set [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} is both positive and negative")]
    OverlappingSigns(usize),

    #[error("ground size {n} exceeds the {what} bound of {bound}")]
    Capacity {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("circuits {first} and {second} have equal support but non-proportional signs")]
    SignConflict { first: SignedSet, second: SignedSet },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid basis pair: {0}")]
    InvalidBases(String),

    #[error("oriented matroid is not acyclic")]
    NotAcyclic,

    #[error(
        "point is not in the Bergman fan: the maximum of triangle {triangle:?} is attained once"
    )]
    NotInFan { triangle: (usize, usize, usize) },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("tree shape is not binary")]
    NotBinary,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by exceeding an enumeration bound.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
