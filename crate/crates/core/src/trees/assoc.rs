//! The face poset of the associahedron and the coarse cells of the positive
//! space of trees.

use crate::bergman::coarse_cells;
use crate::error::{Error, Result};
use crate::initial::representative_weight;
use crate::poset::Poset;
use crate::trees::equidistant::tree_from_point;
use crate::trees::kn::{kn_oriented_matroid, MAX_VERTICES, MIN_VERTICES};
use crate::trees::shape::{planar_shapes, TreeShape};

/// An interval `[i, j]` of `1..=n` with `i < j` and `[i, j] ≠ [1, n]`.
pub type Bracket = (usize, usize);

fn compatible(a: Bracket, b: Bracket) -> bool {
    let disjoint = a.1 < b.0 || b.1 < a.0;
    let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
    disjoint || nested
}

/// Faces of the associahedron on `n` leaves.
///
/// A nonempty face is a set of pairwise compatible brackets; the empty face
/// is `None`. Face `F` lies in face `G` iff `F` is empty or `F` has every
/// bracket of `G`.
#[derive(Clone, Debug)]
pub struct AssociahedronFaces {
    pub n: usize,
    pub faces: Vec<Option<Vec<Bracket>>>,
    pub poset: Poset,
}

pub fn associahedron_face_poset(n: usize) -> Result<AssociahedronFaces> {
    check_vertices(n)?;
    let brackets: Vec<Bracket> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&b| b != (1, n))
        .collect();
    let mut faces: Vec<Option<Vec<Bracket>>> = vec![None];
    let mut current = Vec::new();
    extend_compatible(&brackets, 0, &mut current, &mut faces);

    let contains_all = |f: &[Bracket], g: &[Bracket]| g.iter().all(|b| f.contains(b));
    let poset = Poset::from_relation(faces.len(), |i, j| match (&faces[i], &faces[j]) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(f), Some(g)) => contains_all(f, g),
    })
    .map_err(Error::Inconsistent)?;
    Ok(AssociahedronFaces { n, faces, poset })
}

fn extend_compatible(
    brackets: &[Bracket],
    from: usize,
    current: &mut Vec<Bracket>,
    out: &mut Vec<Option<Vec<Bracket>>>,
) {
    out.push(Some(current.clone()));
    for k in from..brackets.len() {
        let b = brackets[k];
        if current.iter().all(|&c| compatible(c, b)) {
            current.push(b);
            extend_compatible(brackets, k + 1, current, out);
            current.pop();
        }
    }
}

/// Tree shapes ordered by refinement, with a top element appended last.
#[derive(Clone, Debug)]
pub struct ShapePoset {
    pub n: usize,
    pub shapes: Vec<TreeShape>,
    pub poset: Poset,
}

impl ShapePoset {
    fn from_shapes(n: usize, shapes: Vec<TreeShape>) -> Result<Self> {
        let k = shapes.len();
        let poset = Poset::from_relation(k + 1, |i, j| {
            j == k || (i < k && shapes[i].is_contraction_of(&shapes[j]))
        })
        .map_err(Error::Inconsistent)?;
        Ok(ShapePoset { n, shapes, poset })
    }
}

/// The coarse cells of the positive space of trees for the identity order:
/// shapes whose clusters are intervals, `σ ≤ τ` when `σ` contracts `τ`, plus
/// a top element.
pub fn coarse_poset_positive(n: usize) -> Result<ShapePoset> {
    check_vertices(n)?;
    ShapePoset::from_shapes(n, planar_shapes(n)?)
}

/// The same poset read off the coarse subdivision of the positive Bergman
/// complex of `K_n`.
///
/// Each coarse cell is sent to the shape of the tree at the representative
/// point of each of its flags; these must agree. Cells are ordered by
/// inclusion of flags, and the result is checked to be a partial order.
pub fn coarse_poset_from_bergman(n: usize) -> Result<ShapePoset> {
    check_vertices(n)?;
    let m = kn_oriented_matroid(n)?;
    let coarse = coarse_cells(&m, true)?;

    let mut shapes = Vec::with_capacity(coarse.cells.len());
    for cell in &coarse.cells {
        let mut shape: Option<TreeShape> = None;
        for flag in &cell.flags {
            let s = tree_from_point(&representative_weight(flag))?.shape();
            match &shape {
                Some(prev) if *prev != s => {
                    return Err(Error::Inconsistent(format!(
                        "coarse cell holds shapes {prev} and {s}"
                    )))
                }
                _ => shape = Some(s),
            }
        }
        shapes.push(shape.expect("coarse cells are nonempty"));
    }

    let k = shapes.len();
    let cells = &coarse.cells;
    let poset = Poset::from_relation(k + 1, |i, j| {
        j == k
            || (i < k
                && cells[i]
                    .flags
                    .iter()
                    .any(|f| cells[j].flags.iter().any(|g| f.is_face_of(g))))
    })
    .map_err(Error::Inconsistent)?;
    Ok(ShapePoset { n, shapes, poset })
}

fn check_vertices(n: usize) -> Result<()> {
    if !(MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        return Err(Error::Capacity {
            what: "leaf count",
            n,
            bound: MAX_VERTICES,
        });
    }
    Ok(())
}

/// The bracket set of a shape: its non-root clusters, which must be intervals.
pub fn brackets_of(shape: &TreeShape) -> Option<Vec<Bracket>> {
    let mut out = Vec::new();
    for c in shape.proper_clusters() {
        let (lo, hi) = (c.first()?, c.last()?);
        if hi - lo + 1 != c.len() {
            return None;
        }
        out.push((lo, hi));
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon() {
        let a = associahedron_face_poset(4).unwrap();
        let count = |k: usize| {
            a.faces
                .iter()
                .filter(|f| f.as_ref().is_some_and(|f| f.len() == k))
                .count()
        };
        // polygon, five edges, five vertices, plus the empty face
        assert_eq!((count(0), count(1), count(2)), (1, 5, 5));
        assert_eq!(a.faces.len(), 12);
    }

    #[test]
    fn anti_isomorphic_to_shapes() {
        for n in 3..=5 {
            let shapes = coarse_poset_positive(n).unwrap();
            let faces = associahedron_face_poset(n).unwrap();
            assert!(shapes.poset.dual().find_isomorphism(&faces.poset).is_some());
            // the explicit map: a shape goes to its brackets, the top to the empty face
            let explicit: Vec<usize> = shapes
                .shapes
                .iter()
                .map(|s| {
                    let b = brackets_of(s).unwrap();
                    faces
                        .faces
                        .iter()
                        .position(|f| {
                            f.as_ref().is_some_and(|f| {
                                let mut f = f.clone();
                                f.sort();
                                f == b
                            })
                        })
                        .unwrap()
                })
                .chain([0])
                .collect();
            assert!(shapes.poset.dual().is_isomorphism(&faces.poset, &explicit));
        }
    }

    #[test]
    fn bergman_cells_match_planar_shapes() {
        for n in 3..=4 {
            let from_fan = coarse_poset_from_bergman(n).unwrap();
            let direct = coarse_poset_positive(n).unwrap();
            let mut a = from_fan.shapes.clone();
            a.sort();
            assert_eq!(a, direct.shapes);
            let map = from_fan.poset.find_isomorphism(&direct.poset).unwrap();
            for (i, s) in from_fan.shapes.iter().enumerate() {
                assert_eq!(&direct.shapes[map[i]].clusters().len(), &s.clusters().len());
            }
        }
    }

    #[test]
    fn brackets_need_intervals() {
        let s: TreeShape = "((1,3),2)".parse().unwrap();
        assert!(brackets_of(&s).is_none());
        let t: TreeShape = "((1,2),3)".parse().unwrap();
        assert_eq!(brackets_of(&t).unwrap(), vec![(1, 2)]);
    }
}
