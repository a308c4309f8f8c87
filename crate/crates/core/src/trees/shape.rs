//! Rooted tree shapes on leaves `1..=n`, stored as laminar families of clusters.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::trees::kn::positions;

const MAX_ELEMENTS: usize = ElementSet::MAX_ELEMENTS;

/// A rooted tree with leaves `1..=n` and no internal vertex of degree two.
///
/// Each internal vertex is identified with its cluster, the set of leaves
/// below it. Clusters have at least two leaves and the root cluster `[n]` is
/// always present. Sorted by size, so the root is last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeShape {
    n: usize,
    clusters: Vec<ElementSet>,
}

/// A child of an internal vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Child {
    Leaf(usize),
    Cluster(ElementSet),
}

impl Child {
    pub fn leaves(self) -> ElementSet {
        match self {
            Child::Leaf(l) => ElementSet::singleton(l),
            Child::Cluster(c) => c,
        }
    }
}

impl TreeShape {
    /// Validates laminarity; the root cluster is added if missing.
    pub fn new(n: usize, clusters: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        if !(2..=MAX_ELEMENTS).contains(&n) {
            return Err(Error::InvalidTree(format!("{n} leaves")));
        }
        let full = ElementSet::full(n);
        let mut clusters: Vec<ElementSet> = clusters.into_iter().collect();
        clusters.push(full);
        clusters.sort();
        clusters.dedup();
        for &c in &clusters {
            if c.len() < 2 || !c.is_subset(full) {
                return Err(Error::InvalidTree(format!("bad cluster {c}")));
            }
        }
        for (a, b) in clusters.iter().tuple_combinations() {
            if !(a.is_disjoint(*b) || a.is_subset(*b) || b.is_subset(*a)) {
                return Err(Error::InvalidTree(format!("clusters {a} and {b} cross")));
            }
        }
        Ok(TreeShape { n, clusters })
    }

    /// The tree with a single internal vertex.
    pub fn star(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn leaf_count(&self) -> usize {
        self.n
    }

    pub fn clusters(&self) -> &[ElementSet] {
        &self.clusters
    }

    pub fn root(&self) -> ElementSet {
        *self.clusters.last().unwrap()
    }

    /// Clusters other than the root.
    pub fn proper_clusters(&self) -> &[ElementSet] {
        &self.clusters[..self.clusters.len() - 1]
    }

    pub fn internal_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn contains_cluster(&self, c: ElementSet) -> bool {
        self.clusters.binary_search(&c).is_ok()
    }

    /// The smallest cluster strictly containing `c`.
    pub fn parent(&self, c: ElementSet) -> Option<ElementSet> {
        self.clusters
            .iter()
            .copied()
            .find(|&p| c.is_proper_subset(p))
    }

    /// Children of the internal vertex `c`, sorted by smallest leaf.
    pub fn children(&self, c: ElementSet) -> Vec<Child> {
        let inner: Vec<ElementSet> = self
            .clusters
            .iter()
            .copied()
            .filter(|&d| d.is_proper_subset(c) && self.parent(d) == Some(c))
            .collect();
        let covered = inner.iter().fold(ElementSet::empty(), |acc, &d| acc | d);
        let mut out: Vec<Child> = inner.into_iter().map(Child::Cluster).collect();
        out.extend((c - covered).iter().map(Child::Leaf));
        out.sort_by_key(|ch| ch.leaves().first());
        out
    }

    /// Every internal vertex has exactly two children.
    pub fn is_binary(&self) -> bool {
        self.clusters.len() == self.n - 1
    }

    /// Some planar drawing lists the leaves in `order`, i.e. every cluster is
    /// contiguous in `order`.
    pub fn is_order_planar(&self, order: &[usize]) -> Result<bool> {
        if order.len() != self.n {
            return Err(Error::GroundSizeMismatch {
                expected: self.n,
                found: order.len(),
            });
        }
        let pos = positions(order)?;
        Ok(self.clusters.iter().all(|c| {
            let ps: Vec<usize> = c.iter().map(|l| pos[l]).collect();
            let (lo, hi) = (ps.iter().min().unwrap(), ps.iter().max().unwrap());
            hi - lo + 1 == ps.len()
        }))
    }

    /// The shape obtained by contracting the edge above the cluster `c`.
    pub fn contract(&self, c: ElementSet) -> Result<Self> {
        if c == self.root() || !self.contains_cluster(c) {
            return Err(Error::InvalidTree(format!("{c} is not a proper cluster")));
        }
        Self::new(self.n, self.clusters.iter().copied().filter(|&d| d != c))
    }

    /// `self` arises from `other` by contracting internal edges.
    pub fn is_contraction_of(&self, other: &TreeShape) -> bool {
        self.n == other.n && self.clusters.iter().all(|&c| other.contains_cluster(c))
    }

    /// Number of clusters contained in `c`, including `c`.
    pub fn descendant_count(&self, c: ElementSet) -> usize {
        self.clusters.iter().filter(|d| d.is_subset(c)).count()
    }

    /// Number of increasing labelings of the internal vertices, by the hook
    /// length formula `(n - 1)! / ∏ d(v)`.
    pub fn hook_count(&self) -> Result<u128> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let k = self.clusters.len() as u128;
        let mut count: u128 = (1..=k).product();
        for &c in &self.clusters {
            count /= self.descendant_count(c) as u128;
        }
        Ok(count)
    }

    fn write_subtree(&self, c: ElementSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, ch) in self.children(c).into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match ch {
                Child::Leaf(l) => write!(f, "{l}")?,
                Child::Cluster(d) => self.write_subtree(d, f)?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for TreeShape {
    /// Nested parentheses, children sorted by smallest leaf: `((1,2),3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_subtree(self.root(), f)
    }
}

impl FromStr for TreeShape {
    type Err = Error;

    /// Reads nested parentheses such as `((1,2),(3,4))`; the leaves must be
    /// exactly `1..=n`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let mut clusters = Vec::new();
        let root = parse_node(&tokens, &mut pos, &mut clusters)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        let n = root.len();
        if root != ElementSet::full(n) {
            return Err(Error::Parse(format!("leaves of {s:?} are not 1..={n}")));
        }
        TreeShape::new(n, clusters)
    }
}

fn bad(what: &str, offset: usize) -> Error {
    Error::Parse(format!("{what} at offset {offset}"))
}

fn parse_node(t: &[char], pos: &mut usize, clusters: &mut Vec<ElementSet>) -> Result<ElementSet> {
    match t.get(*pos) {
        Some('(') => {
            *pos += 1;
            let mut leaves = ElementSet::empty();
            let mut count = 0;
            loop {
                let child = parse_node(t, pos, clusters)?;
                if !leaves.is_disjoint(child) {
                    return Err(bad("repeated leaf", *pos));
                }
                leaves = leaves | child;
                count += 1;
                match t.get(*pos) {
                    Some(',') => *pos += 1,
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    _ => return Err(bad("expected ',' or ')'", *pos)),
                }
            }
            if count < 2 {
                return Err(bad("internal vertex with one child", *pos));
            }
            clusters.push(leaves);
            Ok(leaves)
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while t.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let text: String = t[start..*pos].iter().collect();
            let leaf: usize = text.parse().map_err(|_| bad("bad leaf", *pos))?;
            if leaf == 0 || leaf > MAX_ELEMENTS {
                return Err(bad("leaf out of range", *pos));
            }
            Ok(ElementSet::singleton(leaf))
        }
        _ => Err(bad("expected '(' or a leaf", *pos)),
    }
}

/// Every shape whose clusters are intervals of `1..=n`.
pub fn planar_shapes(n: usize) -> Result<Vec<TreeShape>> {
    check_leaf_count(n, 12)?;
    let mut out = Vec::new();
    for clusters in interval_families(1, n) {
        out.push(TreeShape::new(n, clusters)?);
    }
    out.sort();
    Ok(out)
}

/// The planar shapes that are binary.
pub fn planar_binary_shapes(n: usize) -> Result<Vec<TreeShape>> {
    check_leaf_count(n, 16)?;
    let mut out = Vec::new();
    for clusters in binary_interval_families(1, n) {
        out.push(TreeShape::new(n, clusters)?);
    }
    out.sort();
    Ok(out)
}

/// All leaf-labeled binary shapes on `1..=n`; there are `(2n - 3)!!`.
pub fn binary_shapes(n: usize) -> Result<Vec<TreeShape>> {
    check_leaf_count(n, 9)?;
    let mut out = Vec::new();
    for clusters in binary_families(ElementSet::full(n)) {
        out.push(TreeShape::new(n, clusters)?);
    }
    out.sort();
    Ok(out)
}

fn check_leaf_count(n: usize, bound: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidTree(format!("{n} leaves")));
    }
    if n > bound {
        return Err(Error::Capacity {
            what: "tree shape enumeration",
            n,
            bound,
        });
    }
    Ok(())
}

fn interval(a: usize, b: usize) -> ElementSet {
    (a..=b).collect()
}

/// Laminar interval families on `[a, b]` containing `[a, b]` itself.
fn interval_families(a: usize, b: usize) -> Vec<Vec<ElementSet>> {
    let mut out = Vec::new();
    // cut points strictly inside [a, b]; at least one cut gives >= 2 blocks
    let gaps: Vec<usize> = (a..b).collect();
    for mask in 1u32..(1 << gaps.len()) {
        let mut blocks = Vec::new();
        let mut start = a;
        for (i, &g) in gaps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                blocks.push((start, g));
                start = g + 1;
            }
        }
        blocks.push((start, b));
        let mut partial: Vec<Vec<ElementSet>> = vec![vec![interval(a, b)]];
        for &(s, e) in &blocks {
            if s == e {
                continue;
            }
            let subs = interval_families(s, e);
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    subs.iter().map(move |sub| {
                        let mut q = p.clone();
                        q.extend(sub.iter().copied());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

fn binary_interval_families(a: usize, b: usize) -> Vec<Vec<ElementSet>> {
    if a == b {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in a..b {
        for left in binary_interval_families(a, m) {
            for right in binary_interval_families(m + 1, b) {
                let mut q = vec![interval(a, b)];
                q.extend(left.iter().copied());
                q.extend(right.iter().copied());
                out.push(q);
            }
        }
    }
    out
}

/// Binary laminar families on `s`; the part holding `min(s)` is listed first.
fn binary_families(s: ElementSet) -> Vec<Vec<ElementSet>> {
    if s.len() == 1 {
        return vec![vec![]];
    }
    let first = s.first().unwrap();
    let rest = s.without(first);
    let mut out = Vec::new();
    for extra in rest.subsets() {
        let left = extra.with(first);
        let right = s - left;
        if right.is_empty() {
            continue;
        }
        for l in binary_families(left) {
            for r in binary_families(right) {
                let mut q = vec![s];
                q.extend(l.iter().copied());
                q.extend(r.iter().copied());
                out.push(q);
            }
        }
    }
    out
}

/// A shape with a distinct positive label on each internal vertex.
///
/// `labels[i]` belongs to `shape.clusters()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledShape {
    shape: TreeShape,
    labels: Vec<usize>,
}

impl LabeledShape {
    pub fn new(shape: TreeShape, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != shape.internal_count() {
            return Err(Error::GroundSizeMismatch {
                expected: shape.internal_count(),
                found: labels.len(),
            });
        }
        if labels.contains(&0) || !labels.iter().all_unique() {
            return Err(Error::InvalidTree(format!(
                "labels {labels:?} are not distinct and positive"
            )));
        }
        Ok(LabeledShape { shape, labels })
    }

    pub fn shape(&self) -> &TreeShape {
        &self.shape
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_of(&self, c: ElementSet) -> Option<usize> {
        let i = self.shape.clusters.binary_search(&c).ok()?;
        Some(self.labels[i])
    }

    /// Labels strictly increase away from the root.
    pub fn is_increasing(&self) -> bool {
        self.shape
            .clusters
            .iter()
            .zip(&self.labels)
            .all(|(&c, &l)| match self.shape.parent(c) {
                Some(p) => self.label_of(p).unwrap() < l,
                None => true,
            })
    }

    /// Label of the lowest common ancestor of two distinct leaves.
    pub fn lca_label(&self, i: usize, j: usize) -> usize {
        let pair = ElementSet::singleton(i).with(j);
        let c = self
            .shape
            .clusters
            .iter()
            .copied()
            .find(|c| pair.is_subset(*c))
            .expect("root contains every pair");
        self.label_of(c).unwrap()
    }
}

/// Every increasing labeling of `shape` by `1..=k`, `k` the number of
/// internal vertices, found by trying all `k!` assignments.
pub fn increasing_labelings(shape: &TreeShape) -> Result<Vec<LabeledShape>> {
    const BOUND: usize = 10;
    let k = shape.internal_count();
    if k > BOUND {
        return Err(Error::Capacity {
            what: "labeling enumeration",
            n: k,
            bound: BOUND,
        });
    }
    let parent: Vec<Option<usize>> = shape
        .clusters
        .iter()
        .map(|&c| {
            shape
                .parent(c)
                .map(|p| shape.clusters.binary_search(&p).unwrap())
        })
        .collect();
    let mut out = Vec::new();
    for perm in (1..=k).permutations(k) {
        let increasing = parent
            .iter()
            .enumerate()
            .all(|(i, p)| p.is_none_or(|p| perm[p] < perm[i]));
        if increasing {
            out.push(LabeledShape {
                shape: shape.clone(),
                labels: perm,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> TreeShape {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let t = shape("((3,1),(2,4))");
        assert_eq!(t.to_string(), "((1,3),(2,4))");
        assert_eq!(t.leaf_count(), 4);
        assert!(t.is_binary());
        assert_eq!(shape("(1,2,3)").to_string(), "(1,2,3)");
        assert!("((1,2),2)".parse::<TreeShape>().is_err());
        assert!("((1),2)".parse::<TreeShape>().is_err());
        assert!("(1,3)".parse::<TreeShape>().is_err());
        assert!("(1,2".parse::<TreeShape>().is_err());
    }

    #[test]
    fn crossing_clusters_rejected() {
        let a: ElementSet = [1, 2].iter().collect();
        let b: ElementSet = [2, 3].iter().collect();
        assert!(TreeShape::new(3, [a, b]).is_err());
    }

    #[test]
    fn children_and_contraction() {
        let t = shape("(((1,2),3),4)");
        let kids = t.children(t.root());
        assert_eq!(kids.len(), 2);
        assert_eq!(kids[1], Child::Leaf(4));
        let c: ElementSet = [1, 2, 3].iter().collect();
        let s = t.contract(c).unwrap();
        assert_eq!(s.to_string(), "((1,2),3,4)");
        assert!(s.is_contraction_of(&t));
        assert!(!t.is_contraction_of(&s));
        assert!(t.contract(t.root()).is_err());
    }

    #[test]
    fn planarity() {
        let t = shape("((1,3),(2,4))");
        assert!(!t.is_order_planar(&[1, 2, 3, 4]).unwrap());
        assert!(t.is_order_planar(&[3, 1, 4, 2]).unwrap());
        assert!(t.is_order_planar(&[1, 2]).is_err());
    }

    #[test]
    fn hook_counts() {
        // caterpillar: one labeling; balanced on four leaves: two
        assert_eq!(shape("(((1,2),3),4)").hook_count().unwrap(), 1);
        assert_eq!(shape("((1,2),(3,4))").hook_count().unwrap(), 2);
        assert!(matches!(
            shape("(1,2,3)").hook_count(),
            Err(Error::NotBinary)
        ));
    }

    #[test]
    fn hook_count_matches_enumeration() {
        for n in 2..=6 {
            for t in binary_shapes(n).unwrap() {
                let brute = increasing_labelings(&t).unwrap().len() as u128;
                assert_eq!(t.hook_count().unwrap(), brute, "{t}");
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // small Schröder numbers, Catalan numbers, double factorials
        let planar: Vec<usize> = (2..=6).map(|n| planar_shapes(n).unwrap().len()).collect();
        assert_eq!(planar, vec![1, 3, 11, 45, 197]);
        let cat: Vec<usize> = (2..=7)
            .map(|n| planar_binary_shapes(n).unwrap().len())
            .collect();
        assert_eq!(cat, vec![1, 2, 5, 14, 42, 132]);
        let all: Vec<usize> = (2..=6).map(|n| binary_shapes(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 3, 15, 105, 945]);
        for t in planar_shapes(5).unwrap() {
            assert!(t.is_order_planar(&[1, 2, 3, 4, 5]).unwrap());
        }
    }

    #[test]
    fn labels_checked() {
        let t = shape("((1,2),3)");
        assert!(LabeledShape::new(t.clone(), vec![1]).is_err());
        assert!(LabeledShape::new(t.clone(), vec![2, 2]).is_err());
        // clusters sorted by size: {1,2} then the root
        let good = LabeledShape::new(t.clone(), vec![2, 1]).unwrap();
        assert!(good.is_increasing());
        assert_eq!(good.lca_label(1, 2), 2);
        assert_eq!(good.lca_label(1, 3), 1);
        assert!(!LabeledShape::new(t, vec![1, 2]).unwrap().is_increasing());
    }
}
