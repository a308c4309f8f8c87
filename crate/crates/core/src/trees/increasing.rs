//! Increasing plane binary trees and their bijection with permutations.
//!
//! A tree `T` with root label `a`, left subtree `T₁` and right subtree `T₂`
//! reads as the word `π(T) = π(T₁) a π(T₂)`. Conversely a word splits at its
//! minimum. Drawn with `n = k + 1` leaves numbered left to right, label `π_i`
//! sits at the lowest common ancestor of leaves `i` and `i + 1`.

use crate::error::{Error, Result};
use crate::initial::{flag_of, Flag, WeightVector};
use crate::matrix::Rational;
use crate::set::ElementSet;
use crate::trees::kn::EdgeIndex;
use crate::trees::shape::{Child, LabeledShape, TreeShape};

/// A plane binary tree whose internal vertices carry labels. A missing
/// subtree stands for a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncreasingTree {
    pub label: usize,
    pub left: Option<Box<IncreasingTree>>,
    pub right: Option<Box<IncreasingTree>>,
}

impl IncreasingTree {
    pub fn leaf_label(label: usize) -> Self {
        IncreasingTree {
            label,
            left: None,
            right: None,
        }
    }

    /// Number of labeled vertices.
    pub fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size()) + self.right.as_ref().map_or(0, |t| t.size())
    }

    /// Every label is smaller than the labels below it.
    pub fn is_increasing(&self) -> bool {
        [&self.left, &self.right]
            .into_iter()
            .flatten()
            .all(|c| c.label > self.label && c.is_increasing())
    }

    /// The shape on `size() + 1` leaves numbered left to right, with these labels.
    pub fn to_labeled_shape(&self) -> LabeledShape {
        let n = self.size() + 1;
        let mut pairs = Vec::new();
        let mut next_leaf = 1;
        self.collect(&mut next_leaf, &mut pairs);
        let shape = TreeShape::new(n, pairs.iter().map(|p| p.0)).expect("intervals are laminar");
        let labels = shape
            .clusters()
            .iter()
            .map(|c| pairs.iter().find(|p| p.0 == *c).unwrap().1)
            .collect();
        LabeledShape::new(shape, labels).expect("labels of a tree are distinct")
    }

    /// Pushes `(cluster, label)` for this subtree; returns its leaf set.
    fn collect(&self, next_leaf: &mut usize, out: &mut Vec<(ElementSet, usize)>) -> ElementSet {
        let mut side = |t: &Option<Box<IncreasingTree>>, next_leaf: &mut usize| match t {
            Some(t) => t.collect(next_leaf, out),
            None => {
                *next_leaf += 1;
                ElementSet::singleton(*next_leaf - 1)
            }
        };
        let l = side(&self.left, next_leaf);
        let r = side(&self.right, next_leaf);
        let c = l | r;
        out.push((c, self.label));
        c
    }
}

/// Splits a word at its minimum; the word must have distinct positive letters.
pub fn tree_of_permutation(word: &[usize]) -> Result<IncreasingTree> {
    if word.is_empty() {
        return Err(Error::InvalidPermutation("empty word".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    if word.iter().any(|&x| x == 0 || !seen.insert(x)) {
        return Err(Error::InvalidPermutation(format!("{word:?}")));
    }
    Ok(*split_at_min(word).unwrap())
}

fn split_at_min(word: &[usize]) -> Option<Box<IncreasingTree>> {
    let (i, &label) = word.iter().enumerate().min_by_key(|p| p.1)?;
    Some(Box::new(IncreasingTree {
        label,
        left: split_at_min(&word[..i]),
        right: split_at_min(&word[i + 1..]),
    }))
}

/// In-order reading `π(T₁) a π(T₂)`.
pub fn permutation_of_tree(t: &IncreasingTree) -> Vec<usize> {
    let mut out = Vec::with_capacity(t.size());
    read_in_order(t, &mut out);
    out
}

fn read_in_order(t: &IncreasingTree, out: &mut Vec<usize>) {
    if let Some(l) = &t.left {
        read_in_order(l, out);
    }
    out.push(t.label);
    if let Some(r) = &t.right {
        read_in_order(r, out);
    }
}

impl LabeledShape {
    /// `π_i = label(lca(i, i + 1))` for `i = 1..n`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.shape().leaf_count();
        (1..n).map(|i| self.lca_label(i, i + 1)).collect()
    }

    /// The plane tree drawn with leaves `1..=n` left to right. Requires a
    /// binary shape whose clusters are intervals.
    pub fn to_increasing_tree(&self) -> Result<IncreasingTree> {
        let shape = self.shape();
        if !shape.is_binary() {
            return Err(Error::NotBinary);
        }
        let identity: Vec<usize> = (1..=shape.leaf_count()).collect();
        if !shape.is_order_planar(&identity)? {
            return Err(Error::InvalidTree(format!(
                "{shape} has a cluster that is not an interval"
            )));
        }
        Ok(*self.subtree(shape.root()))
    }

    fn subtree(&self, c: ElementSet) -> Box<IncreasingTree> {
        let kids = self.shape().children(c);
        let side = |ch: Child| match ch {
            Child::Leaf(_) => None,
            Child::Cluster(d) => Some(self.subtree(d)),
        };
        Box::new(IncreasingTree {
            label: self.label_of(c).unwrap(),
            left: side(kids[0]),
            right: side(kids[1]),
        })
    }

    /// The full-dimensional cell of the Bergman fan of `K_n` where the
    /// lowest common ancestors are ordered by label.
    pub fn to_flag(&self) -> Flag {
        let idx = EdgeIndex::new(self.shape().leaf_count());
        let w = idx
            .edges()
            .map(|(i, j)| -Rational::from_integer((self.lca_label(i, j) as i64).into()))
            .collect();
        flag_of(&WeightVector::new(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn single_vertex() {
        let t = tree_of_permutation(&[1]).unwrap();
        assert_eq!(t, IncreasingTree::leaf_label(1));
        assert_eq!(permutation_of_tree(&t), vec![1]);
        assert_eq!(t.to_labeled_shape().shape().to_string(), "(1,2)");
    }

    #[test]
    fn bad_words() {
        assert!(tree_of_permutation(&[]).is_err());
        assert!(tree_of_permutation(&[2, 2]).is_err());
        assert!(tree_of_permutation(&[0, 1]).is_err());
    }

    #[test]
    fn split_at_minimum() {
        let t = tree_of_permutation(&[3, 1, 2]).unwrap();
        assert_eq!(t.label, 1);
        assert_eq!(t.left.as_ref().unwrap().label, 3);
        assert_eq!(t.right.as_ref().unwrap().label, 2);
        assert!(t.is_increasing());
        let ls = t.to_labeled_shape();
        assert_eq!(ls.shape().to_string(), "((1,2),(3,4))");
        assert_eq!(ls.permutation(), vec![3, 1, 2]);
    }

    #[test]
    fn round_trips_up_to_five() {
        for k in 1..=5 {
            for word in (1..=k).permutations(k) {
                let t = tree_of_permutation(&word).unwrap();
                assert!(t.is_increasing());
                assert_eq!(permutation_of_tree(&t), word);
                let ls = t.to_labeled_shape();
                assert!(ls.is_increasing());
                assert_eq!(ls.permutation(), word);
                assert_eq!(ls.to_increasing_tree().unwrap(), t);
            }
        }
    }

    #[test]
    fn flag_is_a_maximal_chain() {
        let ls = tree_of_permutation(&[2, 1, 3]).unwrap().to_labeled_shape();
        let f = ls.to_flag();
        // K_4 has rank 3, so a maximal chain has two proper flats
        assert_eq!(f.proper_part().len(), 2);
    }

    #[test]
    fn non_planar_shapes_rejected() {
        let shape: TreeShape = "((1,3),(2,4))".parse().unwrap();
        let ls = LabeledShape::new(shape, vec![2, 3, 1]).unwrap();
        assert!(ls.to_increasing_tree().is_err());
        let star = LabeledShape::new(TreeShape::star(3).unwrap(), vec![1]).unwrap();
        assert!(matches!(star.to_increasing_tree(), Err(Error::NotBinary)));
    }
}
