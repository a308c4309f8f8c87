//! How the `n!` positive Bergman complexes `B⁺(K_n, o(π))` cover the
//! maximal chains of the partition lattice.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::bergman::fine_cells;
use crate::error::{Error, Result};
use crate::initial::Flag;
use crate::trees::kn::{kn_oriented_matroid, oriented_complete_graph};

pub const MAX_COVERING_VERTICES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringStatistics {
    pub n: usize,
    /// Maximal chains of the lattice of flats of `K_n`.
    pub maximal_chains: usize,
    /// Number of orderings `π`, i.e. `n!`.
    pub complexes: usize,
    /// Full-dimensional cells of each positive complex, in the order of
    /// `itertools::permutations`.
    pub cells_per_complex: Vec<usize>,
    /// For each maximal chain, the number of complexes containing it.
    pub containing: BTreeMap<Flag, usize>,
    /// The orderings with `π_1 = 1` alone cover every maximal chain.
    pub covered_with_first_fixed: bool,
}

impl CoveringStatistics {
    /// The common value of `containing`, if there is one.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        let mut values = self.containing.values();
        let first = *values.next()?;
        values.all(|&v| v == first).then_some(first)
    }
}

pub fn covering_statistics(n: usize) -> Result<CoveringStatistics> {
    if !(3..=MAX_COVERING_VERTICES).contains(&n) {
        return Err(Error::Capacity {
            what: "covering statistics vertex count",
            n,
            bound: MAX_COVERING_VERTICES,
        });
    }
    let whole = fine_cells(&kn_oriented_matroid(n)?, false)?;
    let mut containing: BTreeMap<Flag, usize> =
        whole.full_dimensional().map(|f| (f.clone(), 0)).collect();

    let mut cells_per_complex = Vec::new();
    let mut covered_first: BTreeMap<Flag, bool> = BTreeMap::new();
    for order in (1..=n).permutations(n) {
        let positive = fine_cells(&oriented_complete_graph(&order)?, true)?;
        let mut count = 0;
        for f in positive.full_dimensional() {
            count += 1;
            match containing.get_mut(f) {
                Some(c) => *c += 1,
                None => {
                    return Err(Error::Inconsistent(format!(
                        "positive cell {f} is not a maximal chain of flats"
                    )))
                }
            }
            if order[0] == 1 {
                covered_first.insert(f.clone(), true);
            }
        }
        cells_per_complex.push(count);
    }

    Ok(CoveringStatistics {
        n,
        maximal_chains: containing.len(),
        complexes: cells_per_complex.len(),
        cells_per_complex,
        covered_with_first_fixed: covered_first.len() == containing.len(),
        containing,
    })
}
