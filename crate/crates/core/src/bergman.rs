//! Face lattices and the fine and coarse subdivisions of the (positive)
//! Bergman complex.
//!
//! The fine subdivision is the order complex of the proper part of a lattice:
//! a chain of `k` proper flats is a `(k - 1)`-cell, and full-dimensional cells
//! are maximal chains. Cells are stored combinatorially as [`Flag`]s; no
//! geometry is built.
//!
//! The coarse subdivision groups flags by their initial matroid `M_F`. The
//! trivial flag `∅ ⊂ [n]` is the lineality cell of the fan (the empty face of
//! the complex); it is included in the coarse grouping but not in the
//! f-vector.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::initial::{matroid_of_flag, Flag, FlagClassifier, FlagMode};
use crate::om::OrientedMatroid;
use crate::set::ElementSet;

/// A finite lattice of subsets of `[n]` ordered by containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    n: usize,
    elements: Vec<ElementSet>,
}

impl FaceLattice {
    fn new(n: usize, mut elements: Vec<ElementSet>) -> Self {
        elements.sort();
        elements.dedup();
        FaceLattice { n, elements }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Sorted by size, then lexicographically.
    pub fn elements(&self) -> &[ElementSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.elements.binary_search(&s).is_ok()
    }

    pub fn bottom(&self) -> ElementSet {
        self.elements[0]
    }

    pub fn top(&self) -> ElementSet {
        *self.elements.last().unwrap()
    }

    /// Everything except the bottom and the top.
    pub fn proper_part(&self) -> Vec<ElementSet> {
        let (b, t) = (self.bottom(), self.top());
        self.elements
            .iter()
            .copied()
            .filter(|&s| s != b && s != t)
            .collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<ElementSet> {
        let b = self.bottom();
        self.covers_of(b)
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<ElementSet> {
        let t = self.top();
        self.elements
            .iter()
            .copied()
            .filter(|&s| s != t && self.covers_of(s).contains(&t))
            .collect()
    }

    /// Elements covering `s`.
    pub fn covers_of(&self, s: ElementSet) -> Vec<ElementSet> {
        let above: Vec<ElementSet> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| s.is_proper_subset(x))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&x| !above.iter().any(|&y| y.is_proper_subset(x)))
            .collect()
    }

    /// Every nonempty chain in the proper part, each sorted bottom-up.
    pub fn proper_chains(&self) -> Vec<Vec<ElementSet>> {
        let proper = self.proper_part();
        let mut out = Vec::new();
        let mut chain = Vec::new();
        for (i, &a) in proper.iter().enumerate() {
            chain.push(a);
            extend_chains(&proper, i, &mut chain, &mut out);
            chain.pop();
        }
        out
    }
}

fn extend_chains(
    proper: &[ElementSet],
    last: usize,
    chain: &mut Vec<ElementSet>,
    out: &mut Vec<Vec<ElementSet>>,
) {
    out.push(chain.clone());
    let top = proper[last];
    for (j, &b) in proper.iter().enumerate().skip(last + 1) {
        if top.is_proper_subset(b) {
            chain.push(b);
            extend_chains(proper, j, chain, out);
            chain.pop();
        }
    }
}

/// All flats of the underlying matroid.
pub fn lattice_of_flats(m: &OrientedMatroid) -> Result<FaceLattice> {
    Ok(FaceLattice::new(m.ground_size(), m.flats()?))
}

/// Positive flats ordered by containment. Requires `m` acyclic.
pub fn las_vergnas_lattice(m: &OrientedMatroid) -> Result<FaceLattice> {
    if !m.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    Ok(FaceLattice::new(m.ground_size(), m.positive_flats()?))
}

/// `Σ (-1)^k f_k`.
pub fn euler_characteristic(f_vector: &[usize]) -> i64 {
    f_vector
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Euler characteristic of the `d`-sphere; `d = -1` is the empty complex.
pub fn sphere_euler_characteristic(d: i64) -> i64 {
    if d.rem_euclid(2) == 0 {
        2
    } else {
        0
    }
}

/// The fine subdivision: the order complex of the proper part of a lattice.
#[derive(Clone, Debug)]
pub struct FineComplex {
    pub positive: bool,
    pub rank: usize,
    pub lattice: FaceLattice,
    /// Every cell as a flag, ordered by dimension then lexicographically.
    pub cells: Vec<Flag>,
    pub f_vector: Vec<usize>,
}

impl FineComplex {
    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.f_vector)
    }

    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    /// Cells of dimension `rank - 2`.
    pub fn full_dimensional(&self) -> impl Iterator<Item = &Flag> {
        let want = self.rank.saturating_sub(1);
        self.cells
            .iter()
            .filter(move |f| want > 0 && f.proper_part().len() == want)
    }

    /// Chains that cannot be refined within the lattice.
    pub fn maximal_cells(&self) -> Vec<&Flag> {
        self.cells
            .iter()
            .filter(|f| {
                let chain = f.chain();
                chain.windows(2).all(|w| {
                    !self
                        .lattice
                        .elements()
                        .iter()
                        .any(|&x| w[0].is_proper_subset(x) && x.is_proper_subset(w[1]))
                })
            })
            .collect()
    }
}

/// Chains of flats (or of positive flats, if `positive`), with each chain
/// re-checked as a cell through the initial circuits.
pub fn fine_cells(m: &OrientedMatroid, positive: bool) -> Result<FineComplex> {
    let lattice = if positive {
        las_vergnas_lattice(m)?
    } else {
        lattice_of_flats(m)?
    };
    let rank = m.rank();
    let n = m.ground_size();
    let checker = FlagClassifier::new(m)?;

    let mut cells = Vec::new();
    for chain in lattice.proper_chains() {
        let flag = Flag::new(n, chain)?;
        let ok = if positive {
            checker.is_positive(&flag, FlagMode::InitialCircuits)?
        } else {
            checker.is_valid(&flag, FlagMode::InitialCircuits)?
        };
        if !ok {
            return Err(Error::Inconsistent(format!("chain {flag} is not a cell")));
        }
        cells.push(flag);
    }
    cells.sort_by(|a, b| {
        a.proper_part()
            .len()
            .cmp(&b.proper_part().len())
            .then_with(|| a.cmp(b))
    });

    let mut f_vector = Vec::new();
    for c in &cells {
        let k = c.proper_part().len() - 1;
        if f_vector.len() <= k {
            f_vector.resize(k + 1, 0);
        }
        f_vector[k] += 1;
    }

    Ok(FineComplex {
        positive,
        rank,
        lattice,
        cells,
        f_vector,
    })
}

/// One cell of the coarse subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoarseCell {
    /// The initial matroid shared by every flag in the cell.
    pub mw: OrientedMatroid,
    /// Member fine cells, sorted.
    pub flags: Vec<Flag>,
    pub full_dimensional: bool,
}

impl CoarseCell {
    /// Dimension of the cell in the complex: the largest member dimension.
    pub fn dimension(&self) -> i64 {
        self.flags
            .iter()
            .map(|f| f.proper_part().len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }
}

#[derive(Clone, Debug)]
pub struct CoarseComplex {
    pub positive: bool,
    pub rank: usize,
    /// Sorted by the smallest member flag.
    pub cells: Vec<CoarseCell>,
}

impl CoarseComplex {
    pub fn full_dimensional_count(&self) -> usize {
        self.cells.iter().filter(|c| c.full_dimensional).count()
    }

    /// Index of the coarse cell containing `flag`.
    pub fn cell_of(&self, flag: &Flag) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.flags.binary_search(flag).is_ok())
    }
}

/// Groups the fine cells (plus the trivial flag, when it is a cell) by `M_F`.
pub fn coarse_cells(m: &OrientedMatroid, positive: bool) -> Result<CoarseComplex> {
    let fine = fine_cells(m, positive)?;
    coarse_from_fine(m, &fine)
}

pub fn coarse_from_fine(m: &OrientedMatroid, fine: &FineComplex) -> Result<CoarseComplex> {
    let n = m.ground_size();
    let full = fine.rank.saturating_sub(1);
    let trivial = Flag::trivial(n);
    let trivial_is_cell = if fine.positive {
        m.is_acyclic()
    } else {
        !m.has_loops()
    };

    let mut groups: BTreeMap<Vec<crate::signed::SignedSet>, Vec<Flag>> = BTreeMap::new();
    let mut mws: BTreeMap<Vec<crate::signed::SignedSet>, OrientedMatroid> = BTreeMap::new();
    let flags = trivial_is_cell
        .then_some(&trivial)
        .into_iter()
        .chain(fine.cells.iter());
    for flag in flags {
        let mw = matroid_of_flag(m, flag)?;
        let key = mw.circuits().to_vec();
        groups.entry(key.clone()).or_default().push(flag.clone());
        mws.entry(key).or_insert(mw);
    }

    let mut cells: Vec<CoarseCell> = groups
        .into_iter()
        .map(|(key, mut flags)| {
            flags.sort();
            let full_dimensional = full > 0 && flags.iter().any(|f| f.proper_part().len() == full);
            CoarseCell {
                mw: mws.remove(&key).unwrap(),
                flags,
                full_dimensional,
            }
        })
        .collect();
    cells.sort_by(|a, b| a.flags[0].cmp(&b.flags[0]));

    Ok(CoarseComplex {
        positive: fine.positive,
        rank: fine.rank,
        cells,
    })
}

/// Fine and coarse data of one complex, as reported by the command-line tool.
#[derive(Clone, Debug)]
pub struct CellComplexSummary {
    pub fine: FineComplex,
    pub coarse: Option<CoarseComplex>,
}

impl CellComplexSummary {
    pub fn build(m: &OrientedMatroid, positive: bool, with_coarse: bool) -> Result<Self> {
        let fine = fine_cells(m, positive)?;
        let coarse = if with_coarse {
            Some(coarse_from_fine(m, &fine)?)
        } else {
            None
        };
        Ok(CellComplexSummary { fine, coarse })
    }

    pub fn f_vector(&self) -> &[usize] {
        &self.fine.f_vector
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.fine.euler_characteristic()
    }

    pub fn full_dimensional_fine(&self) -> usize {
        self.fine.full_dimensional().count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().collect()
    }

    #[test]
    fn boolean_lattice_of_free_matroid() {
        let l = lattice_of_flats(&OrientedMatroid::free(2)).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.bottom(), ElementSet::empty());
        assert_eq!(l.top(), ElementSet::full(2));
        assert_eq!(l.atoms().len(), 2);
    }

    #[test]
    fn rank_one_has_empty_proper_part() {
        let m = OrientedMatroid::free(1);
        let lv = las_vergnas_lattice(&m).unwrap();
        assert_eq!(lv.elements(), &[ElementSet::empty(), set(&[1])]);
        let fine = fine_cells(&m, true).unwrap();
        assert!(fine.cells.is_empty());
        assert_eq!(fine.euler_characteristic(), 0);
        assert_eq!(sphere_euler_characteristic(-1), 0);
    }

    #[test]
    fn non_acyclic_las_vergnas_rejected() {
        let m = OrientedMatroid::from_words(2, &["12"]).unwrap();
        assert!(matches!(las_vergnas_lattice(&m), Err(Error::NotAcyclic)));
    }

    #[test]
    fn one_circuit_single_coarse_cell() {
        let m = OrientedMatroid::from_words(2, &["1-2"]).unwrap();
        let coarse = coarse_cells(&m, false).unwrap();
        assert_eq!(coarse.cells.len(), 1);
        assert_eq!(coarse.cells[0].flags, vec![Flag::trivial(2)]);
        assert_eq!(coarse.cells[0].mw, m);
        assert_eq!(coarse.full_dimensional_count(), 0);
    }

    #[test]
    fn euler_sums() {
        assert_eq!(euler_characteristic(&[13, 18]), -5);
        assert_eq!(euler_characteristic(&[]), 0);
        assert_eq!(sphere_euler_characteristic(1), 0);
        assert_eq!(sphere_euler_characteristic(2), 2);
    }
}
