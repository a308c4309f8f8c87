//! Weight vectors and the initial oriented matroid `M_ω` they induce.
//!
//! For a weight vector `ω` on the ground set, `init_ω(C)` keeps the elements
//! of a circuit `C` of largest weight. The circuits of `M_ω` are the
//! inclusion-minimal sets among the `init_ω(C)`. `M_ω` only depends on the
//! flag of level sets of `ω`, so flags serve as the cell identifiers of the
//! fine subdivision.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{format_rational, parse_rational, Rational};
use crate::om::{minimal_signed_sets, OrientedMatroid};
use crate::set::ElementSet;
use crate::signed::SignedSet;

/// One exact rational weight per ground-set element; entry `i` weighs element `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        WeightVector(entries)
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        WeightVector(
            entries
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn parse(entries: &[impl AsRef<str>]) -> Result<Self> {
        entries
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// Weight of element `e` (1-based).
    pub fn weight(&self, e: usize) -> &Rational {
        &self.0[e - 1]
    }

    /// Sum of the weights of the elements of `s`.
    pub fn weight_of(&self, s: ElementSet) -> Rational {
        s.iter()
            .fold(Rational::zero(), |acc, e| acc + self.weight(e))
    }

    /// Adds `c` to every entry.
    pub fn shifted(&self, c: &Rational) -> Self {
        WeightVector(self.0.iter().map(|x| x + c).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

/// A chain `∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k ⊂ F_{k+1} = [n]` with strict inclusions.
///
/// Only the proper part `F_1, ..., F_k` is stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    n: usize,
    proper: Vec<ElementSet>,
}

impl Flag {
    pub fn new(n: usize, proper: Vec<ElementSet>) -> Result<Self> {
        let full = ElementSet::full(n);
        let mut prev = ElementSet::empty();
        for &f in &proper {
            if !prev.is_proper_subset(f) || !f.is_proper_subset(full) {
                return Err(Error::InvalidFlag(format!(
                    "{:?} is not a strictly increasing chain of proper nonempty subsets of [{n}]",
                    proper
                )));
            }
            prev = f;
        }
        Ok(Flag { n, proper })
    }

    pub fn trivial(n: usize) -> Self {
        Flag {
            n,
            proper: Vec::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// `F_1, ..., F_k`.
    pub fn proper_part(&self) -> &[ElementSet] {
        &self.proper
    }

    /// `F_0, ..., F_{k+1}`, including `∅` and `[n]`.
    pub fn chain(&self) -> Vec<ElementSet> {
        let mut c = Vec::with_capacity(self.proper.len() + 2);
        c.push(ElementSet::empty());
        c.extend(&self.proper);
        c.push(ElementSet::full(self.n));
        c
    }

    pub fn is_trivial(&self) -> bool {
        self.proper.is_empty()
    }

    /// Level of each element: `level[e - 1] = i` for `e ∈ F_{i+1} \ F_i`.
    pub fn levels(&self) -> Vec<usize> {
        let chain = self.chain();
        let mut levels = vec![0; self.n];
        for (i, w) in chain.windows(2).enumerate() {
            for e in w[1] - w[0] {
                levels[e - 1] = i;
            }
        }
        levels
    }

    /// `self` is obtained from `other` by deleting members of the chain.
    pub fn is_face_of(&self, other: &Flag) -> bool {
        self.n == other.n && self.proper.iter().all(|f| other.proper.contains(f))
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.chain() {
            if !s.is_empty() {
                write!(f, " < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The flag of level sets of `ω`, ordered by increasing weight.
pub fn flag_of(w: &WeightVector) -> Flag {
    let n = w.len();
    let mut values: Vec<&Rational> = w.0.iter().collect();
    values.sort();
    values.dedup();
    let proper = values[..values.len().saturating_sub(1)]
        .iter()
        .map(|&v| (1..=n).filter(|&e| w.weight(e) <= v).collect())
        .collect();
    Flag { n, proper }
}

/// The integer point `ω_e = i` for `e ∈ F_{i+1} \ F_i`.
pub fn representative_weight(flag: &Flag) -> WeightVector {
    WeightVector(
        flag.levels()
            .into_iter()
            .map(|l| Rational::from_integer((l as i64).into()))
            .collect(),
    )
}

/// Restriction of `c` to its elements of largest weight.
pub fn init_circuit(c: &SignedSet, w: &WeightVector) -> SignedSet {
    let Some(top) = c.support().iter().map(|e| w.weight(e)).max() else {
        return *c;
    };
    let keep: ElementSet = c.support().iter().filter(|&e| w.weight(e) == top).collect();
    c.restrict(keep)
}

/// `init_ω` on integer levels.
fn init_by_levels(c: &SignedSet, levels: &[usize]) -> SignedSet {
    let top = c.support().iter().map(|e| levels[e - 1]).max().unwrap_or(0);
    let keep: ElementSet = c
        .support()
        .iter()
        .filter(|&e| levels[e - 1] == top)
        .collect();
    c.restrict(keep)
}

/// The initial oriented matroid `M_ω`.
pub fn matroid_mw(m: &OrientedMatroid, w: &WeightVector) -> Result<OrientedMatroid> {
    w.check_len(m.ground_size())?;
    matroid_of_flag(m, &flag_of(w))
}

/// `M_F` for a flag `F`; equal to `matroid_mw(m, ω)` for every `ω` with flag `F`.
pub fn matroid_of_flag(m: &OrientedMatroid, flag: &Flag) -> Result<OrientedMatroid> {
    check_flag(m, flag)?;
    let levels = flag.levels();
    let circuits = minimal_signed_sets(m.circuits().iter().map(|c| init_by_levels(c, &levels)))?;
    Ok(OrientedMatroid::from_canonical(
        m.ground_size(),
        circuits,
        m.limits(),
    ))
}

fn check_flag(m: &OrientedMatroid, flag: &Flag) -> Result<()> {
    if flag.ground_size() != m.ground_size() {
        return Err(Error::GroundSizeMismatch {
            expected: m.ground_size(),
            found: flag.ground_size(),
        });
    }
    Ok(())
}

/// Bases of `m` of minimal `ω`-weight.
pub fn min_weight_bases(m: &OrientedMatroid, w: &WeightVector) -> Result<Vec<ElementSet>> {
    w.check_len(m.ground_size())?;
    let bases = m.bases()?;
    let Some(best) = bases.iter().map(|&b| w.weight_of(b)).min() else {
        return Ok(bases);
    };
    Ok(bases
        .into_iter()
        .filter(|&b| w.weight_of(b) == best)
        .collect())
}

/// `ω` lies in the Bergman fan: `M_ω` has no loops.
pub fn in_bergman_fan(m: &OrientedMatroid, w: &WeightVector) -> Result<bool> {
    Ok(!matroid_mw(m, w)?.has_loops())
}

/// `ω` lies in the positive Bergman fan: `M_ω` is acyclic.
///
/// For `m` built by [`crate::circuits_from_matrix`] from a linear ideal this
/// is membership in the positive tropical variety of the ideal.
pub fn in_positive_bergman_fan(m: &OrientedMatroid, w: &WeightVector) -> Result<bool> {
    Ok(matroid_mw(m, w)?.is_acyclic())
}

/// How to decide whether a flag is a cell of the (positive) Bergman complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagMode {
    /// Through `M_F`: no loops, or acyclic.
    InitialMatroid,
    /// Through each circuit: `init(C)` has two elements, or elements of both signs.
    InitialCircuits,
    /// Through the lattice: every member of the chain is a flat, or a positive flat.
    Flats,
}

impl FlagMode {
    pub const ALL: [FlagMode; 3] = [
        FlagMode::InitialMatroid,
        FlagMode::InitialCircuits,
        FlagMode::Flats,
    ];
}

/// Caches the flats and positive flats of a matroid so flags can be tested in bulk.
#[derive(Clone, Debug)]
pub struct FlagClassifier<'a> {
    m: &'a OrientedMatroid,
    flats: Vec<ElementSet>,
    positive_flats: Vec<ElementSet>,
}

impl<'a> FlagClassifier<'a> {
    pub fn new(m: &'a OrientedMatroid) -> Result<Self> {
        let flats = m.flats()?;
        let positive_flats = m.positive_flats()?;
        Ok(FlagClassifier {
            m,
            flats,
            positive_flats,
        })
    }

    pub fn matroid(&self) -> &OrientedMatroid {
        self.m
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn positive_flats(&self) -> &[ElementSet] {
        &self.positive_flats
    }

    pub fn is_valid(&self, flag: &Flag, mode: FlagMode) -> Result<bool> {
        check_flag(self.m, flag)?;
        Ok(match mode {
            FlagMode::InitialMatroid => !matroid_of_flag(self.m, flag)?.has_loops(),
            FlagMode::InitialCircuits => {
                let levels = flag.levels();
                self.m
                    .circuits()
                    .iter()
                    .all(|c| init_by_levels(c, &levels).support().len() >= 2)
            }
            FlagMode::Flats => flag
                .chain()
                .iter()
                .all(|f| self.flats.binary_search(f).is_ok()),
        })
    }

    pub fn is_positive(&self, flag: &Flag, mode: FlagMode) -> Result<bool> {
        check_flag(self.m, flag)?;
        Ok(match mode {
            FlagMode::InitialMatroid => matroid_of_flag(self.m, flag)?.is_acyclic(),
            FlagMode::InitialCircuits => {
                let levels = flag.levels();
                self.m.circuits().iter().all(|c| {
                    let i = init_by_levels(c, &levels);
                    !i.pos().is_empty() && !i.neg().is_empty()
                })
            }
            FlagMode::Flats => flag
                .chain()
                .iter()
                .all(|f| self.positive_flats.binary_search(f).is_ok()),
        })
    }
}

/// Whether `flag` is a cell of the Bergman fan of `m`, decided by `mode`.
pub fn is_valid_flag(m: &OrientedMatroid, flag: &Flag, mode: FlagMode) -> Result<bool> {
    match mode {
        FlagMode::Flats => FlagClassifier::new(m)?.is_valid(flag, mode),
        _ => FlagClassifier {
            m,
            flats: Vec::new(),
            positive_flats: Vec::new(),
        }
        .is_valid(flag, mode),
    }
}

/// Whether `flag` is a cell of the positive Bergman fan of `m`, decided by `mode`.
pub fn is_positive_flag(m: &OrientedMatroid, flag: &Flag, mode: FlagMode) -> Result<bool> {
    match mode {
        FlagMode::Flats => FlagClassifier::new(m)?.is_positive(flag, mode),
        _ => FlagClassifier {
            m,
            flats: Vec::new(),
            positive_flats: Vec::new(),
        }
        .is_positive(flag, mode),
    }
}

/// Every flag of `[n]`, i.e. every ordered set partition. There are
/// Fubini-many of them (4683 for `n = 6`).
pub fn all_flags(n: usize) -> Vec<Flag> {
    let mut out = Vec::new();
    let mut chain = Vec::new();
    extend_flags(n, ElementSet::empty(), &mut chain, &mut out);
    out
}

fn extend_flags(n: usize, below: ElementSet, chain: &mut Vec<ElementSet>, out: &mut Vec<Flag>) {
    let rest = below.complement(n);
    // last block: close the chain
    out.push(Flag {
        n,
        proper: chain.clone(),
    });
    for block in rest.subsets() {
        if block.is_empty() || block == rest {
            continue;
        }
        chain.push(below | block);
        extend_flags(n, below | block, chain, out);
        chain.pop();
    }
}
