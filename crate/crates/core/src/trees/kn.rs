//! The complete graph `K_n` as an oriented matroid.

use crate::error::{Error, Result};
use crate::om::{Digraph, OrientedMatroid};

pub const MIN_VERTICES: usize = 3;
pub const MAX_VERTICES: usize = 7;

/// Lexicographic numbering of the edges `ij`, `i < j`, of `K_n`, starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    n: usize,
}

impl EdgeIndex {
    pub fn new(n: usize) -> Self {
        EdgeIndex { n }
    }

    /// Recovers `n` from the number of edges.
    pub fn for_edge_count(edges: usize) -> Result<Self> {
        let n = (1..=64).find(|n| n * (n - 1) / 2 >= edges).unwrap_or(0);
        if n < 2 || n * (n - 1) / 2 != edges {
            return Err(Error::GroundSizeMismatch {
                expected: n * n.saturating_sub(1) / 2,
                found: edges,
            });
        }
        Ok(EdgeIndex { n })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of the edge joining `i` and `j`, in either order.
    pub fn index(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(a >= 1 && a < b && b <= self.n);
        (a - 1) * self.n - (a - 1) * a / 2 + (b - a)
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges().nth(e - 1).expect("edge index in range")
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }
}

/// `K_n` with every edge oriented `i → j` for `i < j`.
pub fn kn_oriented_matroid(n: usize) -> Result<OrientedMatroid> {
    let order: Vec<usize> = (1..=n).collect();
    oriented_complete_graph(&order)
}

/// `K_n` oriented by a permutation: `π_i → π_j` for `i < j`.
///
/// The ground set is still the lexicographic edge numbering of [`EdgeIndex`].
pub fn oriented_complete_graph(order: &[usize]) -> Result<OrientedMatroid> {
    let n = order.len();
    if !(MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        return Err(Error::Capacity {
            what: "complete graph vertex count",
            n,
            bound: MAX_VERTICES,
        });
    }
    let pos = positions(order)?;
    let arcs = EdgeIndex::new(n)
        .edges()
        .map(|(i, j)| if pos[i] < pos[j] { (i, j) } else { (j, i) })
        .collect();
    Ok(Digraph::new(n, arcs)?.oriented_matroid())
}

/// `pos[v]` is the position of vertex `v` in `order`; fails unless `order`
/// is a permutation of `1..=len`.
pub(crate) fn positions(order: &[usize]) -> Result<Vec<usize>> {
    let n = order.len();
    let mut pos = vec![usize::MAX; n + 1];
    for (p, &v) in order.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Err(Error::InvalidPermutation(format!("{order:?}")));
        }
        pos[v] = p;
    }
    Ok(pos)
}
