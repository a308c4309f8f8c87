//! Oriented matroids of directed graphs.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::signed::SignedSet;

use super::{minimal_signed_sets, OrientedMatroid};

/// A directed multigraph on vertices `1..=vertices`; arc `k` (1-based) is `arcs[k - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertices: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertices: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            for x in [u, v] {
                if x == 0 || x > vertices {
                    return Err(Error::ElementOutOfRange {
                        element: x,
                        n: vertices,
                    });
                }
            }
        }
        if arcs.len() > ElementSet::MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "arc count",
                n: arcs.len(),
                bound: ElementSet::MAX_ELEMENTS,
            });
        }
        Ok(Digraph { vertices, arcs })
    }

    /// Every simple cycle as a signed set: arcs traversed forward are positive,
    /// arcs traversed backward negative. Each cycle is reported in both directions.
    pub fn signed_cycles(&self) -> Vec<SignedSet> {
        let m = self.arcs.len();
        let mut out = Vec::new();
        // self-loops
        for (k, &(u, v)) in self.arcs.iter().enumerate() {
            if u == v {
                let c =
                    SignedSet::new(m, ElementSet::singleton(k + 1), ElementSet::empty()).unwrap();
                out.push(c);
                out.push(-c);
            }
        }
        // cycles through at least two vertices, rooted at their smallest vertex
        for start in 1..=self.vertices {
            let mut visited = vec![false; self.vertices + 1];
            visited[start] = true;
            self.extend(
                start,
                start,
                &mut visited,
                ElementSet::empty(),
                ElementSet::empty(),
                &mut out,
            );
        }
        out
    }

    fn extend(
        &self,
        start: usize,
        at: usize,
        visited: &mut [bool],
        pos: ElementSet,
        neg: ElementSet,
        out: &mut Vec<SignedSet>,
    ) {
        let m = self.arcs.len();
        for (k, &(u, v)) in self.arcs.iter().enumerate() {
            let arc = k + 1;
            if u == v || pos.contains(arc) || neg.contains(arc) {
                continue;
            }
            let (next, forward) = if u == at {
                (v, true)
            } else if v == at {
                (u, false)
            } else {
                continue;
            };
            let (p, q) = if forward {
                (pos.with(arc), neg)
            } else {
                (pos, neg.with(arc))
            };
            if next == start {
                out.push(SignedSet::new(m, p, q).unwrap());
            } else if next > start && !visited[next] {
                visited[next] = true;
                self.extend(start, next, visited, p, q, out);
                visited[next] = false;
            }
        }
    }

    /// The graphic oriented matroid: ground set = arcs, circuits = signed cycles.
    pub fn oriented_matroid(&self) -> OrientedMatroid {
        let circuits = minimal_signed_sets(self.signed_cycles())
            .expect("distinct cycles have distinct supports");
        OrientedMatroid::from_canonical(self.arcs.len(), circuits, Default::default())
    }

    /// Signed vertex-arc incidence matrix: column `k` has `-1` at the tail
    /// and `+1` at the head of arc `k` (a self-loop gives a zero column).
    pub fn incidence_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.arcs.len()]; self.vertices];
        for (k, &(u, v)) in self.arcs.iter().enumerate() {
            if u != v {
                rows[u - 1][k] -= 1;
                rows[v - 1][k] += 1;
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::ValidationMode;

    #[test]
    fn triangle() {
        let g = Digraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        let m = g.oriented_matroid();
        // 1->2->3 uses arcs 1 and 3 forward, arc 2 backward
        assert_eq!(m.circuits(), &[SignedSet::parse(3, "1-23").unwrap()]);
    }

    #[test]
    fn parallel_arcs_and_self_loops() {
        let g = Digraph::new(2, vec![(1, 2), (1, 2), (2, 1), (1, 1)]).unwrap();
        let m = g.oriented_matroid();
        assert!(m.has_loops());
        assert!(!m.is_acyclic());
        assert!(m.validate(ValidationMode::default()).passed);
        // {1,2} (same direction) and {1,3} (opposite) and {2,3} and loop {4}
        assert_eq!(m.circuits().len(), 4);
    }

    #[test]
    fn k4_has_seven_cycles() {
        let mut arcs = Vec::new();
        for i in 1..=4 {
            for j in i + 1..=4 {
                arcs.push((i, j));
            }
        }
        let m = Digraph::new(4, arcs).unwrap().oriented_matroid();
        assert_eq!(m.circuits().len(), 7);
        assert!(m.is_acyclic());
        assert!(
            m.validate(ValidationMode {
                all: false,
                strong: true
            })
            .passed
        );
    }
}
