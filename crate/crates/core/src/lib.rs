//! Oriented matroids and their positive Bergman complexes.
//!
//! Elements of a ground set `[n]` are numbered from 1. Every value tied to a
//! ground set carries its size and refuses to mix with values of another.

pub mod bergman;
pub mod error;
pub mod initial;
pub mod io;
pub mod limits;
pub mod matrix;
pub mod om;
pub mod poset;
pub mod set;
pub mod signed;
pub mod trees;

pub use error::{Error, Result};
pub use initial::{Flag, FlagMode, WeightVector};
pub use limits::Limits;
pub use matrix::{circuits_from_matrix, circuits_of_column_dependencies, Rational, RationalMatrix};
pub use om::{OrientedMatroid, ValidationMode, ValidationReport};
pub use set::ElementSet;
pub use signed::{Sign, SignedSet};

/// The guide's chapters, compiled so their examples run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/oriented-matroids.md")]
    mod oriented_matroids {}
    #[doc = include_str!("../../../book/src/initial-matroids.md")]
    mod initial_matroids {}
    #[doc = include_str!("../../../book/src/bergman-complexes.md")]
    mod bergman_complexes {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/increasing-trees.md")]
    mod increasing_trees {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
