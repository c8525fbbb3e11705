//! Finite lattices with precomputed join and meet tables.

use crate::error::NotALattice;
use crate::poset::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl FiniteLattice {
    /// Fills join and meet tables; fails on the first pair (declared order) lacking a LUB or GLB.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, NotALattice> {
        let n = poset.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let ub = poset.upper_bounds(i, j);
                let lub = ub.iter().copied().find(|&u| ub.iter().all(|&v| poset.leq(u, v)));
                let lb = poset.lower_bounds(i, j);
                let glb = lb.iter().copied().find(|&u| lb.iter().all(|&v| poset.leq(v, u)));
                let missing = |missing_join| NotALattice {
                    x: poset.label(i).to_string(),
                    y: poset.label(j).to_string(),
                    missing_join,
                };
                let lub = lub.ok_or_else(|| missing(true))?;
                let glb = glb.ok_or_else(|| missing(false))?;
                join[i * n + j] = lub;
                join[j * n + i] = lub;
                meet[i * n + j] = glb;
                meet[j * n + i] = glb;
            }
        }
        Ok(FiniteLattice { poset, join, meet })
    }

    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self, crate::BuildError> {
        let poset = FinitePoset::from_covers(labels, covers)?;
        Ok(Self::from_poset(poset)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    /// Index of `label`, panicking when absent. Intended for fixtures and tests.
    pub fn idx(&self, label: &str) -> usize {
        self.index_of(label)
            .unwrap_or_else(|| panic!("no element labelled `{label}`"))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.poset.lt(i, j)
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    /// Join of a set; the empty join is the bottom.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// Least element.
    ///
    /// # Panics
    /// On the empty lattice.
    pub fn bottom(&self) -> usize {
        self.poset.least().expect("non-empty finite lattice has a bottom")
    }

    /// Greatest element.
    ///
    /// # Panics
    /// On the empty lattice.
    pub fn top(&self) -> usize {
        self.poset.greatest().expect("non-empty finite lattice has a top")
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn atoms(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        self.poset.upper_covers(self.bottom())
    }

    pub fn coatoms(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        self.poset.lower_covers(self.top())
    }

    pub fn heights(&self) -> Vec<usize> {
        self.poset.heights()
    }

    pub fn height(&self) -> usize {
        self.poset.length()
    }

    pub fn is_complement(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == self.bottom() && self.join(x, y) == self.top()
    }

    pub fn complements_of(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.is_complement(x, y)).collect()
    }

    /// Elements of `[lo, hi]` in declared order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.elements().filter(|&z| self.leq(lo, z) && self.leq(z, hi)).collect()
    }

    /// Sub-lattice on a subset closed under the parent operations, or the inherited-order
    /// lattice when the induced poset happens to be one.
    pub fn induced(&self, subset: &[usize]) -> Result<FiniteLattice, NotALattice> {
        FiniteLattice::from_poset(self.poset.induced(subset))
    }

    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            poset: self.poset.dual(),
            join: self.meet.clone(),
            meet: self.join.clone(),
        }
    }

    /// True when `subset` is closed under the parent join and meet.
    pub fn is_sublattice(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| subset.contains(&self.join(a, b)) && subset.contains(&self.meet(a, b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn n5_tables() {
        let l = catalog::n5();
        let (a, b, p) = (l.idx("a"), l.idx("b"), l.idx("p"));
        assert_eq!(l.join(a, p), l.top());
        assert_eq!(l.meet(b, p), l.bottom());
        assert_eq!(l.join(a, b), b);
        assert_eq!(l.complements_of(p), vec![a, b]);
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = FinitePoset::from_covers::<&str>(&["a", "b", "c", "d"], &[]).unwrap();
        let err = FiniteLattice::from_poset(p).unwrap_err();
        assert_eq!((err.x.as_str(), err.y.as_str(), err.missing_join), ("a", "b", true));
    }

    #[test]
    fn order_matches_tables() {
        let l = catalog::fig2();
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(l.leq(x, y), l.meet(x, y) == x);
                assert_eq!(l.leq(x, y), l.join(x, y) == y);
            }
        }
    }

    #[test]
    fn empty_set_operations() {
        let l = catalog::m3();
        assert_eq!(l.join_all([]), l.bottom());
        assert_eq!(l.meet_all([]), l.top());
        assert_eq!(l.atoms().len(), 3);
    }
}
