//! Equidistant trees and the points of the Bergman fan of `K_n` they encode.
//!
//! Heights are measured downward from the root, which sits at height 0; all
//! leaves sit at the common height `h`. The distance between leaves `i` and
//! `j` is `2h - 2·height(lca(i, j))`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::initial::WeightVector;
use crate::matrix::Rational;
use crate::set::ElementSet;
use crate::trees::kn::EdgeIndex;
use crate::trees::shape::{Child, TreeShape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeNode {
    Leaf(usize),
    Internal {
        height: Rational,
        children: Vec<TreeNode>,
    },
}

impl TreeNode {
    pub fn leaves(&self) -> ElementSet {
        match self {
            TreeNode::Leaf(l) => ElementSet::singleton(*l),
            TreeNode::Internal { children, .. } => children
                .iter()
                .fold(ElementSet::empty(), |acc, c| acc | c.leaves()),
        }
    }

    fn canonicalize(&mut self) {
        if let TreeNode::Internal { children, .. } = self {
            for c in children.iter_mut() {
                c.canonicalize();
            }
            children.sort_by_key(|c| c.leaves().first());
        }
    }
}

/// A rooted tree whose internal vertices carry heights, with children
/// strictly lower than their parent and every leaf at `leaf_height`.
///
/// Children are kept sorted by smallest leaf, so equal trees compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquidistantTree {
    n: usize,
    leaf_height: Rational,
    root: TreeNode,
}

impl EquidistantTree {
    pub fn new(leaf_height: Rational, mut root: TreeNode) -> Result<Self> {
        let TreeNode::Internal { height, .. } = &root else {
            return Err(Error::InvalidTree("the root must be internal".into()));
        };
        if !height.is_zero() {
            return Err(Error::InvalidTree(format!("root height {height} is not 0")));
        }
        let mut seen = ElementSet::empty();
        check_node(&root, None, &mut seen)?;
        let n = seen.len();
        if seen != ElementSet::full(n) {
            return Err(Error::InvalidTree(format!("leaves {seen} are not 1..={n}")));
        }
        root.canonicalize();
        Ok(EquidistantTree {
            n,
            leaf_height,
            root,
        })
    }

    /// Places a shape at the given cluster heights, `heights[i]` belonging
    /// to `shape.clusters()[i]`.
    pub fn from_shape(
        shape: &TreeShape,
        heights: &[Rational],
        leaf_height: Rational,
    ) -> Result<Self> {
        if heights.len() != shape.internal_count() {
            return Err(Error::GroundSizeMismatch {
                expected: shape.internal_count(),
                found: heights.len(),
            });
        }
        let root = build_from_shape(shape, shape.root(), heights);
        Self::new(leaf_height, root)
    }

    pub fn leaf_count(&self) -> usize {
        self.n
    }

    pub fn leaf_height(&self) -> &Rational {
        &self.leaf_height
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }

    /// The underlying shape, forgetting heights.
    pub fn shape(&self) -> TreeShape {
        let mut clusters = Vec::new();
        collect_clusters(&self.root, &mut clusters);
        TreeShape::new(self.n, clusters).expect("tree clusters are laminar")
    }

    /// Height of every internal vertex, keyed by its cluster.
    pub fn cluster_heights(&self) -> BTreeMap<ElementSet, Rational> {
        let mut out = BTreeMap::new();
        collect_heights(&self.root, &mut out);
        out
    }

    /// Height of the lowest common ancestor of two distinct leaves.
    pub fn lca_height(&self, i: usize, j: usize) -> Rational {
        let pair = ElementSet::singleton(i).with(j);
        let mut node = &self.root;
        loop {
            let TreeNode::Internal { height, children } = node else {
                unreachable!("a leaf never contains two leaves");
            };
            match children.iter().find(|c| pair.is_subset(c.leaves())) {
                Some(c) => node = c,
                None => return height.clone(),
            }
        }
    }

    /// Pairwise leaf distances indexed by the edges of `K_n`.
    pub fn distance_vector(&self) -> WeightVector {
        let two = Rational::from_integer(2.into());
        let entries = EdgeIndex::new(self.n)
            .edges()
            .map(|(i, j)| &two * (&self.leaf_height - self.lca_height(i, j)))
            .collect();
        WeightVector::new(entries)
    }
}

fn check_node(node: &TreeNode, parent: Option<&Rational>, seen: &mut ElementSet) -> Result<()> {
    match node {
        TreeNode::Leaf(l) => {
            if *l == 0 || *l > ElementSet::MAX_ELEMENTS || seen.contains(*l) {
                return Err(Error::InvalidTree(format!("bad or repeated leaf {l}")));
            }
            seen.insert(*l);
        }
        TreeNode::Internal { height, children } => {
            if children.len() < 2 {
                return Err(Error::InvalidTree(
                    "internal vertex with fewer than two children".into(),
                ));
            }
            if let Some(p) = parent {
                if height <= p {
                    return Err(Error::InvalidTree(format!(
                        "child height {height} is not below parent height {p}"
                    )));
                }
            }
            for c in children {
                check_node(c, Some(height), seen)?;
            }
        }
    }
    Ok(())
}

fn build_from_shape(shape: &TreeShape, c: ElementSet, heights: &[Rational]) -> TreeNode {
    let i = shape.clusters().binary_search(&c).unwrap();
    let children = shape
        .children(c)
        .into_iter()
        .map(|ch| match ch {
            Child::Leaf(l) => TreeNode::Leaf(l),
            Child::Cluster(d) => build_from_shape(shape, d, heights),
        })
        .collect();
    TreeNode::Internal {
        height: heights[i].clone(),
        children,
    }
}

fn collect_clusters(node: &TreeNode, out: &mut Vec<ElementSet>) {
    if let TreeNode::Internal { children, .. } = node {
        out.push(node.leaves());
        for c in children {
            collect_clusters(c, out);
        }
    }
}

fn collect_heights(node: &TreeNode, out: &mut BTreeMap<ElementSet, Rational>) {
    if let TreeNode::Internal { height, children } = node {
        out.insert(node.leaves(), height.clone());
        for c in children {
            collect_heights(c, out);
        }
    }
}

/// The equidistant tree of a point of the Bergman fan of `K_n`.
///
/// A vector indexed by the edges of `K_n` lies in the fan exactly when, on
/// every triangle, the maximum of the three entries is attained at least
/// twice. The leaf height is half the overall maximum.
pub fn tree_from_point(w: &WeightVector) -> Result<EquidistantTree> {
    let idx = EdgeIndex::for_edge_count(w.len())?;
    let n = idx.vertices();
    let d = |i: usize, j: usize| w.weight(idx.index(i, j));

    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let t = [d(i, j), d(i, k), d(j, k)];
                let max = t.iter().copied().max().unwrap();
                if t.iter().filter(|&&x| x == max).count() < 2 {
                    return Err(Error::NotInFan {
                        triangle: (i, j, k),
                    });
                }
            }
        }
    }

    let max = w
        .entries()
        .iter()
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let two = Rational::from_integer(2.into());
    let h = &max / &two;
    let root = split_cluster(ElementSet::full(n), &d, &h);
    EquidistantTree::new(h, root)
}

/// Splits `s` into the classes of `i ~ j iff d(i, j) < max over s`.
fn split_cluster<'a>(
    s: ElementSet,
    d: &impl Fn(usize, usize) -> &'a Rational,
    h: &Rational,
) -> TreeNode {
    let elems = s.to_vec();
    let mut max = d(elems[0], elems[1]);
    for (a, &i) in elems.iter().enumerate() {
        for &j in &elems[a + 1..] {
            if d(i, j) > max {
                max = d(i, j);
            }
        }
    }
    let mut classes: Vec<ElementSet> = Vec::new();
    for &i in &elems {
        match classes.iter_mut().find(|c| d(c.first().unwrap(), i) < max) {
            Some(c) => c.insert(i),
            None => classes.push(ElementSet::singleton(i)),
        }
    }
    let children = classes
        .into_iter()
        .map(|c| {
            if c.len() == 1 {
                TreeNode::Leaf(c.first().unwrap())
            } else {
                split_cluster(c, d, h)
            }
        })
        .collect();
    let two = Rational::from_integer(2.into());
    TreeNode::Internal {
        height: h - max / two,
        children,
    }
}
