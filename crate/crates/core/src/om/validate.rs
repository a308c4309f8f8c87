//! Circuit axiom checks.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signed::SignedSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// The empty set is not a circuit.
    C1,
    /// Closure under negation.
    C2,
    /// No proper subset of a circuit is a circuit.
    C3,
    /// Weak elimination.
    C4,
    /// Strong elimination.
    C4Strong,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::C4 => "C4",
            Axiom::C4Strong => "C4'",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<SignedSet>,
    /// The eliminated element for C4 / C4'.
    pub element: Option<usize>,
    /// The element that must survive elimination in C4'.
    pub kept: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ValidationMode {
    /// Collect every violation instead of stopping at the first.
    pub all: bool,
    /// Check strong elimination (C4') instead of weak elimination (C4).
    pub strong: bool,
}

/// Checks a family of signed sets against the circuit axioms, exactly as given.
///
/// The family is not closed under negation first; a missing negative is a
/// C2 violation. [`crate::OrientedMatroid::validate`] closes the family before
/// calling this.
pub fn validate_circuits(circuits: &[SignedSet], mode: ValidationMode) -> Result<ValidationReport> {
    if let Some(first) = circuits.first() {
        let n = first.ground_size();
        if let Some(bad) = circuits.iter().find(|c| c.ground_size() != n) {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                found: bad.ground_size(),
            });
        }
    }

    let mut family: Vec<SignedSet> = circuits.to_vec();
    family.sort();
    family.dedup();
    let members: HashSet<SignedSet> = family.iter().copied().collect();

    let mut violations = Vec::new();
    let done = |v: &Vec<Violation>| !mode.all && !v.is_empty();

    for x in &family {
        if x.is_empty() {
            violations.push(Violation {
                axiom: Axiom::C1,
                witnesses: vec![*x],
                element: None,
                kept: None,
            });
            if done(&violations) {
                return Ok(report(violations));
            }
        }
    }

    for x in &family {
        if !members.contains(&-*x) {
            violations.push(Violation {
                axiom: Axiom::C2,
                witnesses: vec![*x],
                element: None,
                kept: None,
            });
            if done(&violations) {
                return Ok(report(violations));
            }
        }
    }

    for x in &family {
        for y in &family {
            if y.support().is_proper_subset(x.support()) {
                violations.push(Violation {
                    axiom: Axiom::C3,
                    witnesses: vec![*x, *y],
                    element: None,
                    kept: None,
                });
                if done(&violations) {
                    return Ok(report(violations));
                }
            }
        }
    }

    for x0 in &family {
        for x1 in &family {
            if *x1 == -*x0 {
                continue;
            }
            let allowed_pos = x0.pos() | x1.pos();
            let allowed_neg = x0.neg() | x1.neg();
            for e in x0.pos() & x1.neg() {
                let pos_ok = allowed_pos.without(e);
                let neg_ok = allowed_neg.without(e);
                let eliminates =
                    |z: &&SignedSet| z.pos().is_subset(pos_ok) && z.neg().is_subset(neg_ok);
                if mode.strong {
                    let keep = (x0.pos() - x1.neg()) | (x0.neg() - x1.pos());
                    for f in keep {
                        if !family
                            .iter()
                            .filter(eliminates)
                            .any(|z| z.support().contains(f))
                        {
                            violations.push(Violation {
                                axiom: Axiom::C4Strong,
                                witnesses: vec![*x0, *x1],
                                element: Some(e),
                                kept: Some(f),
                            });
                            if done(&violations) {
                                return Ok(report(violations));
                            }
                        }
                    }
                } else if !family.iter().any(|z| eliminates(&z)) {
                    violations.push(Violation {
                        axiom: Axiom::C4,
                        witnesses: vec![*x0, *x1],
                        element: Some(e),
                        kept: None,
                    });
                    if done(&violations) {
                        return Ok(report(violations));
                    }
                }
            }
        }
    }

    Ok(report(violations))
}

fn report(violations: Vec<Violation>) -> ValidationReport {
    ValidationReport {
        passed: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(n: usize, words: &[&str]) -> Vec<SignedSet> {
        words
            .iter()
            .map(|w| SignedSet::parse(n, w).unwrap())
            .flat_map(|c| [c, -c])
            .collect()
    }

    #[test]
    fn empty_family_passes() {
        let r = validate_circuits(&[], ValidationMode::default()).unwrap();
        assert!(r.passed);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn detects_each_axiom() {
        let r = validate_circuits(&[SignedSet::zero(2)], ValidationMode::default()).unwrap();
        assert_eq!(r.violations[0].axiom, Axiom::C1);

        let one = SignedSet::parse(2, "1-2").unwrap();
        let r = validate_circuits(&[one], ValidationMode::default()).unwrap();
        assert_eq!(r.violations[0].axiom, Axiom::C2);

        let r = validate_circuits(&closed(2, &["1", "12"]), ValidationMode::default()).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations[0].axiom, Axiom::C3);

        // two circuits on the same support that are not negatives of each other
        let r = validate_circuits(
            &closed(3, &["12-3", "1-23"]),
            ValidationMode {
                all: true,
                strong: false,
            },
        )
        .unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::C4));
    }

    #[test]
    fn mismatched_ground_sizes() {
        let a = SignedSet::parse(2, "1").unwrap();
        let b = SignedSet::parse(3, "1").unwrap();
        assert!(matches!(
            validate_circuits(&[a, b], ValidationMode::default()),
            Err(Error::GroundSizeMismatch { .. })
        ));
    }

    #[test]
    fn all_mode_collects_more() {
        let fam = closed(3, &["1", "12", "13"]);
        let first = validate_circuits(&fam, ValidationMode::default()).unwrap();
        let all = validate_circuits(
            &fam,
            ValidationMode {
                all: true,
                strong: false,
            },
        )
        .unwrap();
        assert_eq!(first.violations.len(), 1);
        assert!(all.violations.len() > 1);
    }
}
