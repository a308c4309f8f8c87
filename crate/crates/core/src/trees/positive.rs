//! Four independent tests for membership in the positive part of the space
//! of trees, relative to an ordering `π` of the leaves.

use crate::error::Result;
use crate::initial::{in_positive_bergman_fan, WeightVector};
use crate::trees::equidistant::tree_from_point;
use crate::trees::kn::{oriented_complete_graph, positions, EdgeIndex};
use crate::trees::shape::Child;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositivityTest {
    /// `M_ω` of `K_n` oriented by `π` is acyclic.
    Fan,
    /// On every triangle the maximum sits on the edge joining the outer two
    /// vertices in `π` order, and on at least one other edge.
    Triangles,
    /// No leaves `a, b, c` in `π` order have `a, c` strictly closer than `a, b`.
    Branching,
    /// Drawing the tree with children ordered by leaf position reads off `π`.
    Planar,
}

impl PositivityTest {
    pub const ALL: [PositivityTest; 4] = [
        PositivityTest::Fan,
        PositivityTest::Triangles,
        PositivityTest::Branching,
        PositivityTest::Planar,
    ];
}

/// Whether `w`, a vector on the edges of `K_n`, is a positive point for the
/// leaf order `order`. Points outside the fan are never positive.
pub fn is_positive_point(w: &WeightVector, order: &[usize], test: PositivityTest) -> Result<bool> {
    let idx = EdgeIndex::for_edge_count(w.len())?;
    let n = idx.vertices();
    if order.len() != n {
        return Err(crate::error::Error::GroundSizeMismatch {
            expected: n,
            found: order.len(),
        });
    }
    let pos = positions(order)?;
    let d = |i: usize, j: usize| w.weight(idx.index(i, j));

    match test {
        PositivityTest::Fan => in_positive_bergman_fan(&oriented_complete_graph(order)?, w),
        PositivityTest::Triangles => {
            for p in 0..n {
                for q in p + 1..n {
                    for r in q + 1..n {
                        let (a, b, c) = (order[p], order[q], order[r]);
                        let outer = d(a, c);
                        let inner = std::cmp::max(d(a, b), d(b, c));
                        if outer != inner {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        PositivityTest::Branching => {
            let Ok(tree) = tree_from_point(w) else {
                return Ok(false);
            };
            for p in 0..n {
                for q in p + 1..n {
                    for r in q + 1..n {
                        let (a, b, c) = (order[p], order[q], order[r]);
                        if tree.lca_height(a, c) > tree.lca_height(a, b) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        PositivityTest::Planar => {
            let Ok(tree) = tree_from_point(w) else {
                return Ok(false);
            };
            let shape = tree.shape();
            let mut drawn = Vec::with_capacity(n);
            draw(&shape, shape.root(), &pos, &mut drawn);
            Ok(drawn == order)
        }
    }
}

/// Leaves of the subtree at `c`, children taken in order of earliest position.
fn draw(
    shape: &crate::trees::shape::TreeShape,
    c: crate::set::ElementSet,
    pos: &[usize],
    out: &mut Vec<usize>,
) {
    let mut kids = shape.children(c);
    kids.sort_by_key(|ch| ch.leaves().iter().map(|l| pos[l]).min());
    for ch in kids {
        match ch {
            Child::Leaf(l) => out.push(l),
            Child::Cluster(d) => draw(shape, d, pos, out),
        }
    }
}
