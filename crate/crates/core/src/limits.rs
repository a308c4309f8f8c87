//! Enumeration caps.
//!
//! Covector enumeration walks all `3^n` sign vectors and subset enumeration
//! walks all `2^n` subsets, so both are capped. Callers may lower the caps
//! with [`Limits::lowered`] but never raise them.

use crate::error::{Error, Result};

pub const COVECTOR_CAP: usize = 14;
pub const SUBSET_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub covectors: usize,
    pub subsets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            covectors: COVECTOR_CAP,
            subsets: SUBSET_CAP,
        }
    }
}

impl Limits {
    /// Lowers both caps to at most `bound`. Fails if `bound` exceeds a built-in cap.
    pub fn lowered(bound: usize) -> Result<Self> {
        if bound > SUBSET_CAP {
            return Err(Error::Capacity {
                what: "built-in",
                n: bound,
                bound: SUBSET_CAP,
            });
        }
        Ok(Limits {
            covectors: bound.min(COVECTOR_CAP),
            subsets: bound,
        })
    }

    pub fn check_covectors(&self, n: usize) -> Result<()> {
        if n > self.covectors {
            return Err(Error::Capacity {
                what: "covector enumeration",
                n,
                bound: self.covectors,
            });
        }
        Ok(())
    }

    pub fn check_subsets(&self, n: usize) -> Result<()> {
        if n > self.subsets {
            return Err(Error::Capacity {
                what: "subset enumeration",
                n,
                bound: self.subsets,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_only_lower() {
        let l = Limits::lowered(8).unwrap();
        assert_eq!(l.covectors, 8);
        assert_eq!(l.subsets, 8);
        assert_eq!(Limits::lowered(18).unwrap().covectors, COVECTOR_CAP);
        assert!(Limits::lowered(SUBSET_CAP + 1).unwrap_err().is_capacity());
        assert!(l.check_subsets(9).unwrap_err().is_capacity());
        assert!(l.check_subsets(8).is_ok());
    }
}
