//! Small finite posets with an exhaustive isomorphism search.

use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    le: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset on `0..len` with `i ≤ j` iff `leq(i, j)`.
    ///
    /// `leq` must be a partial order; this is checked.
    pub fn from_relation(len: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, String> {
        let le: Vec<Vec<bool>> = (0..len)
            .map(|i| (0..len).map(|j| leq(i, j)).collect())
            .collect();
        for i in 0..len {
            if !le[i][i] {
                return Err(format!("{i} is not ≤ itself"));
            }
            for j in 0..len {
                if i != j && le[i][j] && le[j][i] {
                    return Err(format!("{i} and {j} are mutually ≤"));
                }
                for k in 0..len {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        return Err(format!("{i} ≤ {j} ≤ {k} but not {i} ≤ {k}"));
                    }
                }
            }
        }
        Ok(Poset { le })
    }

    pub fn len(&self) -> usize {
        self.le.len()
    }

    pub fn is_empty(&self) -> bool {
        self.le.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// The same poset with a new maximum appended as element `len()`.
    pub fn with_top(&self) -> Poset {
        let n = self.len();
        let mut le: Vec<Vec<bool>> = self
            .le
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(true);
                r
            })
            .collect();
        let mut last = vec![false; n + 1];
        last[n] = true;
        le.push(last);
        Poset { le }
    }

    /// The opposite order.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        Poset {
            le: (0..n)
                .map(|i| (0..n).map(|j| self.le[j][i]).collect())
                .collect(),
        }
    }

    /// Elements that are not below anything else.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.le[i][j]))
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.le[j][i]))
            .collect()
    }

    /// `j` covers `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j
            && self.le[i][j]
            && (0..self.len()).all(|k| k == i || k == j || !(self.le[i][k] && self.le[k][j]))
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.le[j][i]).count());
        let mut h = vec![0; n];
        for &i in &order {
            h[i] = (0..n)
                .filter(|&j| j != i && self.le[j][i])
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// An order isomorphism `self → other`, `map[i]` being the image of `i`.
    ///
    /// Candidates are narrowed by refining colors (an element's color
    /// records the colors below and above it) on both posets at once, then
    /// assigned by backtracking in an order where each element after the
    /// first is comparable to an earlier one.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let (ca, cb) = refine_colors(self, other);
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }

        let order = self.connected_order(&ca);
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend_iso(other, &order, 0, &ca, &cb, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    /// Rarest colors first, then repeatedly an unvisited element comparable
    /// to a visited one.
    fn connected_order(&self, colors: &[usize]) -> Vec<usize> {
        let n = self.len();
        let mut freq = std::collections::HashMap::new();
        for &c in colors {
            *freq.entry(c).or_insert(0usize) += 1;
        }
        let key = |i: usize| (freq[&colors[i]], colors[i], i);
        let mut visited = vec![false; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .filter(|&i| !visited[i])
                .filter(|&i| {
                    order.is_empty() || order.iter().any(|&j| self.le[i][j] || self.le[j][i])
                })
                .min_by_key(|&i| key(i))
                .or_else(|| (0..n).filter(|&i| !visited[i]).min_by_key(|&i| key(i)))
                .unwrap();
            visited[next] = true;
            order.push(next);
        }
        order
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &Poset,
        order: &[usize],
        depth: usize,
        ca: &[usize],
        cb: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for cand in 0..other.len() {
            if used[cand] || ca[i] != cb[cand] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&j| {
                let mj = map[j];
                self.le[i][j] == other.le[cand][mj] && self.le[j][i] == other.le[mj][cand]
            });
            if !consistent {
                continue;
            }
            map[i] = cand;
            used[cand] = true;
            if self.extend_iso(other, order, depth + 1, ca, cb, map, used) {
                return true;
            }
            used[cand] = false;
            map[i] = usize::MAX;
        }
        false
    }

    /// Checks that `map` is an order isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if n != other.len() || map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.le[i][j] == other.le[map[i]][map[j]]))
    }
}

/// Joint color refinement of two posets of equal size.
fn refine_colors(a: &Poset, b: &Poset) -> (Vec<usize>, Vec<usize>) {
    let n = a.len();
    let mut ca = vec![0usize; n];
    let mut cb = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut ids: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let sig = |p: &Poset, c: &[usize], i: usize| {
            let mut below: Vec<usize> = (0..n)
                .filter(|&j| j != i && p.le[j][i])
                .map(|j| c[j])
                .collect();
            let mut above: Vec<usize> = (0..n)
                .filter(|&j| j != i && p.le[i][j])
                .map(|j| c[j])
                .collect();
            below.sort_unstable();
            above.sort_unstable();
            (c[i], below, above)
        };
        let siga: Vec<_> = (0..n).map(|i| sig(a, &ca, i)).collect();
        let sigb: Vec<_> = (0..n).map(|i| sig(b, &cb, i)).collect();
        for s in siga.iter().chain(&sigb) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        ca = siga.iter().map(|s| ids[s]).collect();
        cb = sigb.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (ca, cb);
        }
        classes = ids.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        Poset::from_relation(n, |i, j| i <= j).unwrap()
    }

    fn boolean(k: usize) -> Poset {
        Poset::from_relation(1 << k, |i, j| i & !j == 0).unwrap()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(Poset::from_relation(2, |_, _| true).is_err());
        assert!(Poset::from_relation(2, |i, j| i != j).is_err());
    }

    #[test]
    fn boolean_lattice_is_self_dual() {
        let b = boolean(3);
        let map = b.find_isomorphism(&b.dual()).unwrap();
        assert!(b.is_isomorphism(&b.dual(), &map));
    }

    #[test]
    fn chain_vs_antichain() {
        let anti = Poset::from_relation(3, |i, j| i == j).unwrap();
        assert!(chain(3).find_isomorphism(&anti).is_none());
        assert_eq!(chain(3).with_top(), chain(4));
        assert_eq!(chain(4).heights(), vec![0, 1, 2, 3]);
        assert_eq!(chain(4).maximal(), vec![3]);
        assert!(chain(4).covers(1, 2));
        assert!(!chain(4).covers(1, 3));
    }
}
