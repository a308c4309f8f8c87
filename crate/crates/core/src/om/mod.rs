//! Oriented matroids given by their signed circuits.

mod graphic;
mod validate;

use std::hash::{Hash, Hasher};

pub use graphic::Digraph;
pub use validate::{validate_circuits, Axiom, ValidationMode, ValidationReport, Violation};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::ElementSet;
use crate::signed::{orthogonal_unchecked, Sign, SignedSet};

/// An oriented matroid on `{1, ..., n}`.
///
/// Circuits are stored as one canonical representative per `±` pair (see
/// [`SignedSet::canonical`]), sorted. The full circuit family is the stored
/// list together with its negatives. Construction does not run the
/// elimination axioms; call [`OrientedMatroid::validate`] for that.
#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    n: usize,
    circuits: Vec<SignedSet>,
    limits: Limits,
}

impl PartialEq for OrientedMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.circuits == other.circuits
    }
}

impl Eq for OrientedMatroid {}

impl Hash for OrientedMatroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.circuits.hash(state);
    }
}

/// Result of [`OrientedMatroid::contract`]: the minor together with the
/// original label of each of its elements (`index_map[i - 1]` is the element
/// of the original ground set that became `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub matroid: OrientedMatroid,
    pub index_map: Vec<usize>,
}

impl OrientedMatroid {
    /// Builds an oriented matroid from signed circuits, one or both of each `±` pair.
    pub fn new(n: usize, circuits: impl IntoIterator<Item = SignedSet>) -> Result<Self> {
        if n > ElementSet::MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "ground set",
                n,
                bound: ElementSet::MAX_ELEMENTS,
            });
        }
        let mut cs = Vec::new();
        for c in circuits {
            if c.ground_size() != n {
                return Err(Error::GroundSizeMismatch {
                    expected: n,
                    found: c.ground_size(),
                });
            }
            cs.push(c.canonical());
        }
        cs.sort();
        cs.dedup();
        Ok(OrientedMatroid {
            n,
            circuits: cs,
            limits: Limits::default(),
        })
    }

    /// Parses circuits in the compact notation of [`SignedSet::parse`].
    pub fn from_words(n: usize, words: &[&str]) -> Result<Self> {
        let cs = words
            .iter()
            .map(|w| SignedSet::parse(n, w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, cs)
    }

    /// The matroid without circuits.
    pub fn free(n: usize) -> Self {
        OrientedMatroid {
            n,
            circuits: Vec::new(),
            limits: Limits::default(),
        }
    }

    /// Builds from circuits already in canonical sorted form.
    pub(crate) fn from_canonical(n: usize, circuits: Vec<SignedSet>, limits: Limits) -> Self {
        debug_assert!(circuits.iter().all(|c| c.is_canonical()));
        debug_assert!(circuits.windows(2).all(|w| w[0] < w[1]));
        OrientedMatroid {
            n,
            circuits,
            limits,
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Canonical representatives, sorted.
    pub fn circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    /// Every signed circuit, both members of each `±` pair.
    pub fn signed_circuits(&self) -> impl Iterator<Item = SignedSet> + '_ {
        self.circuits.iter().flat_map(|&c| [c, -c])
    }

    pub fn validate(&self, mode: ValidationMode) -> ValidationReport {
        let family: Vec<SignedSet> = self.signed_circuits().collect();
        validate_circuits(&family, mode).expect("ground sizes checked at construction")
    }

    /// Some circuit is all-positive (equivalently, since the family is closed
    /// under negation, some circuit has an empty positive or negative part).
    pub fn is_acyclic(&self) -> bool {
        !self
            .circuits
            .iter()
            .any(|c| c.pos().is_empty() || c.neg().is_empty())
    }

    pub fn has_loops(&self) -> bool {
        self.circuits.iter().any(|c| c.support().len() == 1)
    }

    pub fn loops(&self) -> ElementSet {
        self.circuits
            .iter()
            .filter(|c| c.support().len() == 1)
            .fold(ElementSet::empty(), |acc, c| acc | c.support())
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        !self.circuits.iter().any(|c| c.support().is_subset(s))
    }

    /// Rank of `s`, by greedily growing an independent subset.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        let mut indep = ElementSet::empty();
        for e in s {
            let bigger = indep.with(e);
            if self.is_independent(bigger) {
                indep = bigger;
            }
        }
        indep.len()
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground_set())
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let mut cl = s;
        for c in &self.circuits {
            let outside = c.support() - s;
            if outside.len() == 1 {
                cl = cl | outside;
            }
        }
        cl
    }

    /// No circuit meets the complement of `f` in exactly one element.
    pub fn is_flat(&self, f: ElementSet) -> bool {
        !self.circuits.iter().any(|c| (c.support() - f).len() == 1)
    }

    /// All flats of the underlying matroid, sorted.
    pub fn flats(&self) -> Result<Vec<ElementSet>> {
        self.limits.check_subsets(self.n)?;
        let mut out: Vec<ElementSet> = ElementSet::all_subsets(self.n)
            .filter(|&f| self.is_flat(f))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Maximal subsets containing no circuit.
    ///
    /// Fails with [`Error::Inconsistent`] if the maximal independent sets are
    /// not equicardinal, which only happens for invalid circuit families.
    pub fn bases(&self) -> Result<Vec<ElementSet>> {
        self.limits.check_subsets(self.n)?;
        let full = self.ground_set();
        let mut bases: Vec<ElementSet> = ElementSet::all_subsets(self.n)
            .filter(|&s| self.is_independent(s))
            .filter(|&s| (full - s).iter().all(|e| !self.is_independent(s.with(e))))
            .collect();
        if let Some(first) = bases.first() {
            let r = first.len();
            if let Some(bad) = bases.iter().find(|b| b.len() != r) {
                return Err(Error::Inconsistent(format!(
                    "maximal independent sets {first} and {bad} differ in size"
                )));
            }
        }
        bases.sort();
        Ok(bases)
    }

    /// All covectors: sign vectors orthogonal to every circuit. Includes zero.
    pub fn covectors(&self) -> Result<Vec<SignedSet>> {
        self.limits.check_covectors(self.n)?;
        let mut out = Vec::new();
        for pos in ElementSet::all_subsets(self.n) {
            for neg in pos.complement(self.n).subsets() {
                let y = SignedSet::new(self.n, pos, neg)?;
                if self.is_covector(&y) {
                    out.push(y);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn is_covector(&self, y: &SignedSet) -> bool {
        self.circuits.iter().all(|c| orthogonal_unchecked(c, y))
    }

    /// Covectors with no negative entry, zero included.
    ///
    /// Only walks `{+, 0}^n`, so it runs under the subset cap rather than the
    /// covector cap.
    pub fn positive_covectors(&self) -> Result<Vec<SignedSet>> {
        self.limits.check_subsets(self.n)?;
        let mut out: Vec<SignedSet> = ElementSet::all_subsets(self.n)
            .map(|pos| SignedSet::new(self.n, pos, ElementSet::empty()).expect("in range"))
            .filter(|y| self.is_covector(y))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Zero sets of positive covectors, plus the whole ground set.
    ///
    /// Positive flats are defined for acyclic oriented matroids; for others
    /// the same formula is evaluated without complaint.
    pub fn positive_flats(&self) -> Result<Vec<ElementSet>> {
        let mut out: Vec<ElementSet> = self
            .positive_covectors()?
            .iter()
            .map(|y| y.zero_set())
            .chain(std::iter::once(self.ground_set()))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Positive flats via contraction: a flat `F` is positive iff `M/F` is acyclic.
    pub fn positive_flats_by_contraction(&self) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        for f in self.flats()? {
            if self.contract(f)?.matroid.is_acyclic() {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// Contraction `M / s`: the inclusion-minimal nonempty sets among `C \ s`,
    /// relabelled onto `{1, ..., n - |s|}` in increasing order.
    pub fn contract(&self, s: ElementSet) -> Result<Contraction> {
        let s = s & self.ground_set();
        let rest = self.ground_set() - s;
        let index_map: Vec<usize> = rest.to_vec();
        let mut relabel = vec![0; self.n];
        for (i, &e) in index_map.iter().enumerate() {
            relabel[e - 1] = i + 1;
        }
        let m = index_map.len();
        let candidates = self
            .circuits
            .iter()
            .map(|c| c.restrict(rest))
            .filter(|c| !c.is_empty())
            .map(|c| c.relabel(m, &relabel));
        let circuits = minimal_signed_sets(candidates)?;
        Ok(Contraction {
            matroid: OrientedMatroid::from_canonical(m, circuits, self.limits),
            index_map,
        })
    }

    /// Relabels element `e` as `map[e - 1]`; `map` must be a permutation of `1..=n`.
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        let mut seen = ElementSet::empty();
        for &t in map {
            if t == 0 || t > self.n || seen.contains(t) {
                return Err(Error::InvalidPermutation(format!("{map:?}")));
            }
            seen.insert(t);
        }
        if map.len() != self.n {
            return Err(Error::InvalidPermutation(format!("{map:?}")));
        }
        let cs = self.circuits.iter().map(|c| c.relabel(self.n, map));
        Ok(Self::new(self.n, cs)?.with_limits(self.limits))
    }

    /// The circuit (up to sign) contained in `b ∪ {f}` for an independent `b`.
    pub fn fundamental_circuit(&self, b: ElementSet, f: usize) -> Option<SignedSet> {
        let span = b.with(f);
        self.circuits
            .iter()
            .find(|c| c.support().is_subset(span) && c.support().contains(f))
            .copied()
    }

    /// `χ(B1)·χ(B2)` for ordered bases differing in exactly one element.
    ///
    /// With `B1 = (.., e, ..)` and `B2` obtained by putting `f` in place of `e`
    /// this is `-C(e)C(f)`, `C` being the circuit in `B1 ∪ {f}`; reorderings of
    /// `B2` multiply by the sign of the reordering.
    pub fn basis_sign_product(&self, b1: &[usize], b2: &[usize]) -> Result<Sign> {
        let s1 = self.ordered_basis(b1)?;
        let s2 = self.ordered_basis(b2)?;
        let (out, inn) = (s1 - s2, s2 - s1);
        if out.is_empty() {
            return Err(Error::InvalidBases(format!(
                "{b1:?} and {b2:?} are the same basis up to reordering"
            )));
        }
        if out.len() != 1 {
            return Err(Error::InvalidBases(format!(
                "{b1:?} and {b2:?} differ in more than one element"
            )));
        }
        let e = out.first().unwrap();
        let f = inn.first().unwrap();
        let c = self
            .fundamental_circuit(s1, f)
            .ok_or_else(|| Error::Inconsistent(format!("no circuit in {s1} + {f}")))?;
        if !c.support().contains(e) {
            return Err(Error::Inconsistent(format!("circuit {c} misses {e}")));
        }

        let aligned: Vec<usize> = b1.iter().map(|&x| if x == e { f } else { x }).collect();
        let positions: Vec<usize> = b2
            .iter()
            .map(|x| aligned.iter().position(|y| y == x).unwrap())
            .collect();
        let reorder = permutation_sign(&positions);

        Ok(-(c.sign(e) * c.sign(f)) * reorder)
    }

    fn ordered_basis(&self, b: &[usize]) -> Result<ElementSet> {
        let mut s = ElementSet::empty();
        for &e in b {
            if e == 0 || e > self.n {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    n: self.n,
                });
            }
            if s.contains(e) {
                return Err(Error::InvalidBases(format!("{b:?} repeats {e}")));
            }
            s.insert(e);
        }
        if b.len() != self.rank() || !self.is_independent(s) {
            return Err(Error::InvalidBases(format!("{b:?} is not a basis")));
        }
        Ok(s)
    }
}

/// Sign of a permutation of `0..k`, by counting inversions.
fn permutation_sign(p: &[usize]) -> Sign {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Canonical, inclusion-minimal members of a family of signed sets.
///
/// Two minimal members with equal support must agree up to sign; otherwise
/// [`Error::SignConflict`] is returned.
pub(crate) fn minimal_signed_sets(
    candidates: impl IntoIterator<Item = SignedSet>,
) -> Result<Vec<SignedSet>> {
    let mut cands: Vec<SignedSet> = candidates.into_iter().map(|c| c.canonical()).collect();
    cands.sort_by_key(|c| (c.support().len(), *c));
    cands.dedup();
    let mut kept: Vec<SignedSet> = Vec::new();
    for c in cands {
        let mut minimal = true;
        for k in &kept {
            if k.support() == c.support() {
                return Err(Error::SignConflict {
                    first: *k,
                    second: c,
                });
            }
            if k.support().is_subset(c.support()) {
                minimal = false;
                break;
            }
        }
        if minimal {
            kept.push(c);
        }
    }
    kept.sort();
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> OrientedMatroid {
        OrientedMatroid::from_words(
            6,
            &["1-24", "1-35", "2-36", "4-56", "1-25-6", "1-346", "2-3-45"],
        )
        .unwrap()
    }

    #[test]
    fn loops_and_acyclicity() {
        let m = example();
        assert!(m.is_acyclic());
        assert!(!m.has_loops());
        let p = OrientedMatroid::from_words(2, &["12"]).unwrap();
        assert!(!p.is_acyclic());
        let l = OrientedMatroid::from_words(1, &["1"]).unwrap();
        assert!(l.has_loops());
        assert_eq!(l.loops().to_vec(), vec![1]);
        assert!(OrientedMatroid::free(3).is_acyclic());
    }

    #[test]
    fn covectors_of_small_cases() {
        let l = OrientedMatroid::from_words(1, &["1"]).unwrap();
        assert_eq!(l.covectors().unwrap(), vec![SignedSet::zero(1)]);
        assert_eq!(OrientedMatroid::free(2).covectors().unwrap().len(), 9);
    }

    #[test]
    fn covector_capacity_error() {
        let m = OrientedMatroid::free(15);
        let err = m.covectors().unwrap_err();
        assert!(matches!(
            err,
            Error::Capacity {
                bound: 14,
                n: 15,
                ..
            }
        ));
    }

    #[test]
    fn free_matroid_flats_and_bases() {
        let f = OrientedMatroid::free(2);
        assert_eq!(f.positive_flats().unwrap().len(), 4);
        assert_eq!(f.flats().unwrap().len(), 4);
        let f3 = OrientedMatroid::free(3);
        assert_eq!(f3.bases().unwrap(), vec![ElementSet::full(3)]);
        assert_eq!(f3.rank(), 3);
    }

    #[test]
    fn example_bases_and_rank() {
        let m = example();
        assert_eq!(m.bases().unwrap().len(), 16);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn contraction_by_empty_set_is_identity() {
        let m = example();
        let c = m.contract(ElementSet::empty()).unwrap();
        assert_eq!(c.matroid, m);
        assert_eq!(c.index_map, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn contraction_acyclicity() {
        let m = example();
        let by16 = m.contract([1, 6].into_iter().collect()).unwrap();
        assert!(by16.matroid.is_acyclic());
        assert_eq!(by16.index_map, vec![2, 3, 4, 5]);
        let by2 = m.contract(ElementSet::singleton(2)).unwrap();
        assert!(!by2.matroid.is_acyclic());
        assert!(by2.matroid.validate(ValidationMode::default()).passed);
    }

    #[test]
    fn basis_sign_product_examples() {
        let m = example();
        assert_eq!(
            m.basis_sign_product(&[1, 2, 3], &[4, 2, 3]).unwrap(),
            Sign::Neg
        );
        // swapping two entries of B2 flips the product
        assert_eq!(
            m.basis_sign_product(&[1, 2, 3], &[2, 4, 3]).unwrap(),
            Sign::Pos
        );
        assert!(matches!(
            m.basis_sign_product(&[1, 2, 3], &[3, 2, 1]),
            Err(Error::InvalidBases(_))
        ));
        assert!(m.basis_sign_product(&[1, 2, 4], &[1, 2, 3]).is_err());
        assert!(m.basis_sign_product(&[1, 2, 3], &[4, 5, 3]).is_err());
    }

    #[test]
    fn minimal_sets_detect_conflicts() {
        let a = SignedSet::parse(3, "12").unwrap();
        let b = SignedSet::parse(3, "1-2").unwrap();
        assert!(matches!(
            minimal_signed_sets([a, b]),
            Err(Error::SignConflict { .. })
        ));
        let c = SignedSet::parse(3, "123").unwrap();
        assert_eq!(
            minimal_signed_sets([c, a, -a]).unwrap(),
            vec![a.canonical()]
        );
    }
}
