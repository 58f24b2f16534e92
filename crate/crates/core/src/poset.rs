//! Small finite posets (strict orders) and their down-sets.
//!
//! These are the duals of distributive lattices: the lattice side of the
//! crate produces posets of join-irreducibles, the generator side turns
//! posets back into down-set lattices.

use crate::set::ElemSet;

/// A strict partial order on points `0..n` (n <= 64).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `below[p]` = set of points strictly below `p`.
    below: Vec<ElemSet>,
}

impl Poset {
    /// Build from a list of strict relations `a < b`, closed transitively.
    /// Returns `None` if the input is cyclic.
    pub fn from_relations(n: usize, lt_pairs: &[(usize, usize)]) -> Option<Poset> {
        assert!(n <= 64, "poset too large");
        let mut below = vec![ElemSet::EMPTY; n];
        for &(a, b) in lt_pairs {
            assert!(a < n && b < n, "relation out of range");
            below[b].insert(a);
        }
        // transitive closure by fixpoint
        loop {
            let mut changed = false;
            for p in 0..n {
                let mut acc = below[p];
                for q in below[p].iter() {
                    acc = acc.union(below[q]);
                }
                if acc != below[p] {
                    below[p] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if (0..n).any(|p| below[p].contains(p)) {
            return None;
        }
        Some(Poset { n, below })
    }

    /// The empty poset on `n` points (an antichain).
    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            below: vec![ElemSet::EMPTY; n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn strictly_below(&self, p: usize) -> ElemSet {
        self.below[p]
    }

    /// Does `mask` describe a down-closed set of points?
    pub fn is_downset(&self, mask: ElemSet) -> bool {
        mask.iter().all(|p| self.below[p].is_subset(mask))
    }

    /// All down-sets, ascending as bitmask-sorted `(popcount, value)` pairs.
    /// That ordering is a linear extension of inclusion, so index 0 is the
    /// empty set and the last entry is the full set.
    pub fn downsets(&self) -> Vec<ElemSet> {
        assert!(self.n <= 20, "downset enumeration capped at 20 points");
        let mut out: Vec<ElemSet> = (0u64..1u64 << self.n)
            .map(ElemSet)
            .filter(|&m| self.is_downset(m))
            .collect();
        out.sort_by_key(|m| (m.len(), m.0));
        out
    }

    /// Number of down-sets without materializing the lattice.
    pub fn downset_count(&self) -> usize {
        (0u64..1u64 << self.n)
            .filter(|&m| self.is_downset(ElemSet(m)))
            .count()
    }

    /// Extend with a new maximal point whose strict down-set is `downset`
    /// (which must be down-closed).
    pub fn with_new_maximal(&self, downset: ElemSet) -> Poset {
        debug_assert!(self.is_downset(downset));
        let mut below = self.below.clone();
        below.push(downset);
        Poset {
            n: self.n + 1,
            below,
        }
    }

    /// Remove the point with the highest index (valid only if it is maximal).
    pub fn without_last(&self) -> Poset {
        let last = self.n - 1;
        debug_assert!((0..last).all(|p| !self.below[p].contains(last)));
        Poset {
            n: last,
            below: self.below[..last].to_vec(),
        }
    }

    /// Relabel points by `perm[old] = new`.
    pub fn apply_perm(&self, perm: &[usize]) -> Poset {
        let mut below = vec![ElemSet::EMPTY; self.n];
        for p in 0..self.n {
            below[perm[p]] = self.below[p].permute(perm);
        }
        Poset { n: self.n, below }
    }

    /// Permutation-minimal encoding of the strict-order matrix; equal keys
    /// mean isomorphic posets.
    pub fn canonical_key(&self) -> Vec<u64> {
        crate::iso::canonical_matrix_key(self.n, &|a, b| self.lt(a, b))
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|b| self.below[b].iter().map(move |a| (a, b)))
            .collect();
        write!(f, "Poset(n={}, lt={:?})", self.n, pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert!(Poset::from_relations(2, &[(0, 1), (1, 0)]).is_none());
        assert!(Poset::from_relations(1, &[(0, 0)]).is_none());
    }

    #[test]
    fn downsets_of_vee() {
        // p0 < p1, p0 < p2
        let p = Poset::from_relations(3, &[(0, 1), (0, 2)]).unwrap();
        let d = p.downsets();
        assert_eq!(d.len(), 5);
        assert_eq!(d[0], ElemSet::EMPTY);
        assert_eq!(*d.last().unwrap(), ElemSet::full(3));
    }

    #[test]
    fn canonical_key_is_permutation_invariant() {
        let p = Poset::from_relations(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let q = p.apply_perm(&[3, 0, 2, 1]);
        assert_eq!(p.canonical_key(), q.canonical_key());
        let chain = Poset::from_relations(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(p.canonical_key(), chain.canonical_key());
    }
}
