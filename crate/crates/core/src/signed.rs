//! Signed subsets of `{1, ..., n}`, used for circuits and covectors alike.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }
}

/// A pair of disjoint subsets `(pos, neg)` of `{1, ..., n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedSet {
    n: usize,
    pos: ElementSet,
    neg: ElementSet,
}

impl SignedSet {
    pub fn new(n: usize, pos: ElementSet, neg: ElementSet) -> Result<Self> {
        if n > ElementSet::MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "ground set",
                n,
                bound: ElementSet::MAX_ELEMENTS,
            });
        }
        let full = ElementSet::full(n);
        if let Some(e) = ((pos | neg) - full).first() {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        if let Some(e) = (pos & neg).first() {
            return Err(Error::OverlappingSigns(e));
        }
        Ok(SignedSet { n, pos, neg })
    }

    /// Builds a signed set from element lists, e.g. `from_lists(6, &[1, 4], &[2])`.
    pub fn from_lists(n: usize, pos: &[usize], neg: &[usize]) -> Result<Self> {
        for &e in pos.iter().chain(neg) {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
        }
        Self::new(n, pos.iter().collect(), neg.iter().collect())
    }

    pub fn zero(n: usize) -> Self {
        SignedSet {
            n,
            pos: ElementSet::empty(),
            neg: ElementSet::empty(),
        }
    }

    /// Parses the compact notation used for small examples.
    ///
    /// A `-` marks the next element as negative. Without whitespace or commas
    /// every digit is one element (`"1-24"` is `+{1,4} -{2}`); with them,
    /// tokens are full numbers (`"1 -2 14"`).
    pub fn parse(n: usize, word: &str) -> Result<Self> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let tokenized = word.contains(|c: char| c.is_whitespace() || c == ',');
        if tokenized {
            for tok in word.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let (negative, digits) = match tok.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, tok.strip_prefix('+').unwrap_or(tok)),
                };
                let e: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element {tok:?} in {word:?}")))?;
                if negative {
                    neg.push(e)
                } else {
                    pos.push(e)
                }
            }
        } else {
            let mut negative = false;
            for c in word.chars() {
                match c {
                    '-' => negative = true,
                    '+' => negative = false,
                    d if d.is_ascii_digit() => {
                        let e = d.to_digit(10).unwrap() as usize;
                        if negative {
                            neg.push(e)
                        } else {
                            pos.push(e)
                        }
                        negative = false;
                    }
                    _ => return Err(Error::Parse(format!("bad character {c:?} in {word:?}"))),
                }
            }
        }
        let both: ElementSet = pos.iter().collect::<ElementSet>() & neg.iter().collect();
        if let Some(e) = both.first() {
            return Err(Error::OverlappingSigns(e));
        }
        if pos.len() + neg.len() != (pos.iter().chain(&neg).collect::<ElementSet>()).len() {
            return Err(Error::Parse(format!("repeated element in {word:?}")));
        }
        Self::from_lists(n, &pos, &neg)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn pos(&self) -> ElementSet {
        self.pos
    }

    pub fn neg(&self) -> ElementSet {
        self.neg
    }

    pub fn support(&self) -> ElementSet {
        self.pos | self.neg
    }

    pub fn zero_set(&self) -> ElementSet {
        self.support().complement(self.n)
    }

    pub fn is_empty(&self) -> bool {
        self.support().is_empty()
    }

    pub fn sign(&self, e: usize) -> Sign {
        if self.pos.contains(e) {
            Sign::Pos
        } else if self.neg.contains(e) {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    /// No negative entries.
    pub fn is_nonnegative(&self) -> bool {
        self.neg.is_empty()
    }

    /// Restriction to `s`, keeping signs.
    pub fn restrict(&self, s: ElementSet) -> Self {
        SignedSet {
            n: self.n,
            pos: self.pos & s,
            neg: self.neg & s,
        }
    }

    /// True when `self` and `other` agree on the support of `self`.
    pub fn conforms_to(&self, other: &SignedSet) -> bool {
        self.pos.is_subset(other.pos) && self.neg.is_subset(other.neg)
    }

    /// Of `self` and `-self`, the one whose (sorted pos list, sorted neg list)
    /// is lexicographically smaller.
    pub fn canonical(&self) -> Self {
        let neg = -*self;
        if self.lex_key_cmp(&neg) == Ordering::Greater {
            neg
        } else {
            *self
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    fn lex_key_cmp(&self, other: &SignedSet) -> Ordering {
        self.pos
            .iter()
            .cmp(other.pos.iter())
            .then_with(|| self.neg.iter().cmp(other.neg.iter()))
    }

    /// Moves every element `e` to `map[e - 1]` on a ground set of size `n`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Self {
        let image = |s: ElementSet| s.iter().map(|e| map[e - 1]).collect::<ElementSet>();
        SignedSet {
            n,
            pos: image(self.pos),
            neg: image(self.neg),
        }
    }
}

impl Neg for SignedSet {
    type Output = SignedSet;
    fn neg(self) -> SignedSet {
        SignedSet {
            n: self.n,
            pos: self.neg,
            neg: self.pos,
        }
    }
}

/// Orders by the canonical lexicographic key (sorted pos list, then sorted neg list).
impl Ord for SignedSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.lex_key_cmp(other))
    }
}

impl PartialOrd for SignedSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign-vector orthogonality.
///
/// The agreement set `(X+ ∩ Y+) ∪ (X- ∩ Y-)` is nonempty exactly when the
/// disagreement set `(X+ ∩ Y-) ∪ (X- ∩ Y+)` is.
pub fn is_orthogonal(x: &SignedSet, y: &SignedSet) -> Result<bool> {
    if x.n != y.n {
        return Err(Error::GroundSizeMismatch {
            expected: x.n,
            found: y.n,
        });
    }
    Ok(orthogonal_unchecked(x, y))
}

#[inline]
pub(crate) fn orthogonal_unchecked(x: &SignedSet, y: &SignedSet) -> bool {
    let agree = (x.pos & y.pos) | (x.neg & y.neg);
    let disagree = (x.pos & y.neg) | (x.neg & y.pos);
    agree.is_empty() == disagree.is_empty()
}

impl fmt::Display for SignedSet {
    /// Writes `+{...}-{...}`, omitting an empty part; the empty set prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        if !self.pos.is_empty() {
            write!(f, "+{}", self.pos)?;
        }
        if !self.neg.is_empty() {
            write!(f, "-{}", self.neg)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sign vector string such as `0++++0`.
pub fn sign_vector_string(x: &SignedSet) -> String {
    (1..=x.n)
        .map(|e| match x.sign(e) {
            Sign::Pos => '+',
            Sign::Neg => '-',
            Sign::Zero => '0',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, w: &str) -> SignedSet {
        SignedSet::parse(n, w).unwrap()
    }

    #[test]
    fn rejects_overlap_and_range() {
        assert!(matches!(
            SignedSet::from_lists(3, &[1, 2], &[2]),
            Err(Error::OverlappingSigns(2))
        ));
        assert!(matches!(
            SignedSet::from_lists(3, &[4], &[]),
            Err(Error::ElementOutOfRange { element: 4, .. })
        ));
        assert!(SignedSet::parse(3, "1-1").is_err());
        assert!(SignedSet::parse(3, "11").is_err());
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(s(6, "1-24"), s(6, "1 -2 4"));
        assert_eq!(SignedSet::neg(&s(12, "1 -2 11")).to_vec(), vec![2]);
        assert_eq!(s(12, "1 -2 11").pos().to_vec(), vec![1, 11]);
    }

    #[test]
    fn orthogonality_examples() {
        // agreement {1}, disagreement {2}
        assert!(is_orthogonal(&s(2, "1-2"), &s(2, "12")).unwrap());
        // agreement {1}, no disagreement
        assert!(!is_orthogonal(&s(2, "1-2"), &s(2, "1")).unwrap());
        // circuit 1 -2 4 against covector 0++++0: agree {4}, disagree {2}
        let y = SignedSet::from_lists(6, &[2, 3, 4, 5], &[]).unwrap();
        assert_eq!(sign_vector_string(&y), "0++++0");
        assert!(is_orthogonal(&s(6, "1-24"), &y).unwrap());
        assert!(is_orthogonal(&s(2, "1"), &s(3, "1")).is_err());
    }

    #[test]
    fn canonical_representative() {
        let c = s(6, "1-24");
        assert_eq!(c.canonical(), c);
        assert_eq!((-c).canonical(), c);
        // +{1,2} vs -{1,2}: the empty positive list sorts first
        let p = s(2, "12");
        assert_eq!(p.canonical(), -p);
        assert!(SignedSet::zero(3).is_canonical());
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Pos * Sign::Neg, Sign::Neg);
        assert_eq!(Sign::Neg * Sign::Neg, Sign::Pos);
        assert_eq!(-Sign::Zero, Sign::Zero);
        assert_eq!(s(4, "1-3").sign(3), Sign::Neg);
        assert_eq!(s(4, "1-3").sign(2), Sign::Zero);
    }
}
