//! The space of phylogenetic trees as the Bergman fan of `K_n`.
//!
//! Points are vectors indexed by the edges of `K_n` in the order of
//! [`EdgeIndex`]. Positivity is always relative to an ordering of the leaves.

mod assoc;
mod covering;
mod equidistant;
mod increasing;
mod kn;
mod positive;
mod shape;

pub use assoc::{
    associahedron_face_poset, brackets_of, coarse_poset_from_bergman, coarse_poset_positive,
    AssociahedronFaces, Bracket, ShapePoset,
};
pub use covering::{covering_statistics, CoveringStatistics, MAX_COVERING_VERTICES};
pub use equidistant::{tree_from_point, EquidistantTree, TreeNode};
pub use increasing::{permutation_of_tree, tree_of_permutation, IncreasingTree};
pub use kn::{kn_oriented_matroid, oriented_complete_graph, EdgeIndex, MAX_VERTICES, MIN_VERTICES};
pub use positive::{is_positive_point, PositivityTest};
pub use shape::{
    binary_shapes, increasing_labelings, planar_binary_shapes, planar_shapes, Child, LabeledShape,
    TreeShape,
};
