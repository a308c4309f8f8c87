//! Fixed-width subsets of a ground set `{1, ..., n}`.
//!
//! Element `e` is stored in bit `e - 1`, so ground sets hold at most
//! [`ElementSet::MAX_ELEMENTS`] elements. Enumeration routines impose tighter
//! caps, see [`crate::limits`].

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const MAX_ELEMENTS: usize = 32;

    pub const fn empty() -> Self {
        ElementSet(0)
    }

    /// The full ground set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_ELEMENTS);
        if n == Self::MAX_ELEMENTS {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=Self::MAX_ELEMENTS).contains(&e));
        ElementSet(1 << (e - 1))
    }

    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=Self::MAX_ELEMENTS).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= Self::singleton(e).0;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !Self::singleton(e).0;
    }

    pub fn with(self, e: usize) -> Self {
        self | Self::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - Self::singleton(e)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n) - self
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Iterates over every subset of `{1, ..., n}` in increasing bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
        assert!(n < Self::MAX_ELEMENTS);
        (0u32..(1u32 << n)).map(ElementSet)
    }

    /// Iterates over every subset of `self`, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElementSet(cur))
        })
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = Self;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

/// Sets order by size first, then by their sorted element lists.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
