//! Finite bounded-below lattices: construction, validation, and the
//! order-theoretic primitives every other module consumes.
//!
//! A [`Lattice`] is immutable after validation. Construction computes the
//! reflexive-transitive closure of the cover relation, locates the bottom
//! element (relocating it to index 0), fills the meet/join tables, checks
//! the semilattice axioms exhaustively, and decides distributivity with a
//! witness. All derived data is cached, so every downstream operation is a
//! pure function of its inputs.

use crate::poset::Poset;
use crate::set::ElemSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard representation limit (subsets are 64-bit masks) and the default
/// validation cap.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice must have at least one element")]
    NoElements,
    #[error("{n} elements exceed the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("not a poset: cycle through {0:?}")]
    NotAPoset(String),
    #[error("no bottom element ({0:?} and {1:?} are both minimal)")]
    NoBottom(String, String),
    #[error("elements {0:?} and {1:?} have no meet")]
    NoMeet(String, String),
    #[error("elements {0:?} and {1:?} have no join")]
    NoJoin(String, String),
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("invalid lattice document: {0}")]
    InvalidDoc(String),
    #[error("malformed lattice json: {0}")]
    Json(String),
}

/// The on-disk JSON form of a lattice: named elements plus either a cover
/// list (Hasse edges, `[lower, upper]`) or the full order relation under
/// the key `"leq"`. Exactly one of the two must be present.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
}

/// A validated finite lattice with minimum element at index 0.
#[derive(Clone)]
pub struct Lattice {
    name: String,
    labels: Vec<String>,
    n: usize,
    up: Vec<ElemSet>,   // up[a] = { b : a <= b }
    down: Vec<ElemSet>, // down[a] = { b : b <= a }
    meet: Vec<usize>,   // row-major n*n
    join: Vec<usize>,
    covers: Vec<(usize, usize)>, // Hasse edges (lower, upper), lex sorted
    top: usize,
    distributive: bool,
    distributivity_witness: Option<(usize, usize, usize)>,
}

enum EdgeKind {
    Covers,
    Leq,
}

impl Lattice {
    /// Build from index-based cover pairs `(lower, upper)`.
    pub fn from_covers(
        name: &str,
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Lattice, LatticeError> {
        Self::build(name, labels, covers, EdgeKind::Covers, MAX_ELEMENTS)
    }

    /// Same as [`Lattice::from_covers`] with a custom validation cap
    /// (`max_elements <= 64`).
    pub fn from_covers_with_limit(
        name: &str,
        labels: Vec<String>,
        covers: &[(usize, usize)],
        max_elements: usize,
    ) -> Result<Lattice, LatticeError> {
        Self::build(name, labels, covers, EdgeKind::Covers, max_elements)
    }

    /// Build from label-based cover pairs.
    pub fn from_labeled_covers(
        name: &str,
        labels: Vec<String>,
        covers: &[(String, String)],
    ) -> Result<Lattice, LatticeError> {
        let idx = Self::resolve(&labels, covers)?;
        Self::from_covers(name, labels, &idx)
    }

    /// Build from index-based `a <= b` pairs (any generating set of the
    /// order; it is closed reflexively and transitively).
    pub fn from_leq_pairs(
        name: &str,
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Lattice, LatticeError> {
        Self::build(name, labels, pairs, EdgeKind::Leq, MAX_ELEMENTS)
    }

    /// Parse and validate the JSON lattice format.
    pub fn from_json_str(text: &str) -> Result<Lattice, LatticeError> {
        let doc: LatticeDoc =
            serde_json::from_str(text).map_err(|e| LatticeError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &LatticeDoc) -> Result<Lattice, LatticeError> {
        match (&doc.covers, &doc.leq) {
            (Some(covers), None) => {
                Self::from_labeled_covers(&doc.name, doc.elements.clone(), covers)
            }
            (None, Some(pairs)) => {
                let idx = Self::resolve(&doc.elements, pairs)?;
                Self::from_leq_pairs(&doc.name, doc.elements.clone(), &idx)
            }
            (Some(_), Some(_)) => Err(LatticeError::InvalidDoc(
                "exactly one of \"covers\"/\"leq\" must be present, found both".into(),
            )),
            (None, None) => Err(LatticeError::InvalidDoc(
                "exactly one of \"covers\"/\"leq\" must be present, found neither".into(),
            )),
        }
    }

    /// Serialize back to the JSON document form (cover list).
    pub fn to_doc(&self) -> LatticeDoc {
        LatticeDoc {
            name: self.name.clone(),
            elements: self.labels.clone(),
            covers: Some(
                self.covers
                    .iter()
                    .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                    .collect(),
            ),
            leq: None,
        }
    }

    fn resolve(
        labels: &[String],
        pairs: &[(String, String)],
    ) -> Result<Vec<(usize, usize)>, LatticeError> {
        let find = |s: &String| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| LatticeError::UnknownLabel(s.clone()))
        };
        pairs.iter().map(|(a, b)| Ok((find(a)?, find(b)?))).collect()
    }

    fn build(
        name: &str,
        labels: Vec<String>,
        edges: &[(usize, usize)],
        kind: EdgeKind,
        max_elements: usize,
    ) -> Result<Lattice, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::NoElements);
        }
        let cap = max_elements.min(MAX_ELEMENTS);
        if n > cap {
            return Err(LatticeError::TooLarge { n, max: cap });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }

        // reflexive-transitive closure of the edge relation
        let mut up = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            up[a].insert(a);
        }
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge index out of range");
            if a == b {
                if let EdgeKind::Covers = kind {
                    return Err(LatticeError::NotAPoset(labels[a].clone()));
                }
                continue; // reflexive pairs are fine in "leq" form
            }
            up[a].insert(b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = up[a];
                for b in up[a].iter() {
                    acc = acc.union(up[b]);
                }
                if acc != up[a] {
                    up[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // antisymmetry
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(LatticeError::NotAPoset(labels[a].clone()));
                }
            }
        }

        // locate the bottom and relocate it to index 0
        let full = ElemSet::full(n);
        let bottom = (0..n).find(|&a| up[a] == full);
        let bottom = match bottom {
            Some(b) => b,
            None => {
                let mut minimal =
                    (0..n).filter(|&a| (0..n).all(|b| b == a || !up[b].contains(a)));
                let m1 = minimal.next().expect("finite poset has a minimal element");
                let m2 = minimal
                    .next()
                    .expect("no bottom implies at least two minimal elements");
                return Err(LatticeError::NoBottom(
                    labels[m1].clone(),
                    labels[m2].clone(),
                ));
            }
        };
        let (labels, up) = if bottom != 0 {
            // perm[old] = new: bottom -> 0, everything else keeps its order
            let mut perm = vec![0usize; n];
            let mut next = 1;
            for (old, p) in perm.iter_mut().enumerate() {
                if old != bottom {
                    *p = next;
                    next += 1;
                }
            }
            let mut new_labels = vec![String::new(); n];
            let mut new_up = vec![ElemSet::EMPTY; n];
            for old in 0..n {
                new_labels[perm[old]] = labels[old].clone();
                new_up[perm[old]] = up[old].permute(&perm);
            }
            (new_labels, new_up)
        } else {
            (labels, up)
        };

        let mut down = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }

        // meet/join tables; report the lexicographically first failing pair
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].inter(down[b]);
                let m = lower
                    .iter()
                    .find(|&g| lower.is_subset(down[g]))
                    .ok_or_else(|| LatticeError::NoMeet(labels[a].clone(), labels[b].clone()))?;
                let upper = up[a].inter(up[b]);
                let j = upper
                    .iter()
                    .find(|&g| upper.is_subset(up[g]))
                    .ok_or_else(|| LatticeError::NoJoin(labels[a].clone(), labels[b].clone()))?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let top = (0..n)
            .find(|&a| down[a] == full)
            .expect("join-complete finite lattice has a top");

        let mut lat = Lattice {
            name: name.to_string(),
            labels,
            n,
            up,
            down,
            meet,
            join,
            covers: Vec::new(),
            top,
            distributive: true,
            distributivity_witness: None,
        };
        lat.check_algebra();
        lat.covers = lat.compute_covers();
        let (dist, witness) = lat.compute_distributivity();
        lat.distributive = dist;
        lat.distributivity_witness = witness;
        Ok(lat)
    }

    /// Exhaustive semilattice-axiom check. These cannot fail for tables
    /// derived from a verified partial order; a violation is an internal
    /// bug, hence assertions rather than errors.
    fn check_algebra(&self) {
        let n = self.n;
        for a in 0..n {
            assert_eq!(self.meet(a, a), a, "meet not idempotent");
            assert_eq!(self.join(a, a), a, "join not idempotent");
            for b in 0..n {
                assert_eq!(self.meet(a, b), self.meet(b, a), "meet not commutative");
                assert_eq!(self.join(a, b), self.join(b, a), "join not commutative");
                assert_eq!(self.join(a, self.meet(a, b)), a, "absorption failed");
                assert_eq!(self.meet(a, self.join(a, b)), a, "absorption failed");
                assert_eq!(self.leq(a, b), self.meet(a, b) == a, "order/meet mismatch");
                for c in 0..n {
                    assert_eq!(
                        self.meet(self.meet(a, b), c),
                        self.meet(a, self.meet(b, c)),
                        "meet not associative"
                    );
                    assert_eq!(
                        self.join(self.join(a, b), c),
                        self.join(a, self.join(b, c)),
                        "join not associative"
                    );
                }
            }
        }
    }

    fn compute_covers(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for a in 0..self.n {
            for b in self.up[a].iter() {
                if b == a {
                    continue;
                }
                let between = self.up[a].inter(self.down[b]);
                if between.len() == 2 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Decides `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples, keeping
    /// the lexicographically smallest failing triple. The dual law is
    /// checked as well; in any lattice the two agree.
    fn compute_distributivity(&self) -> (bool, Option<(usize, usize, usize)>) {
        let n = self.n;
        let mut witness = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        witness = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        let dual_ok = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.join(a, self.meet(b, c))
                        == self.meet(self.join(a, b), self.join(a, c))
                })
            })
        });
        assert_eq!(
            witness.is_none(),
            dual_ok,
            "distributive law and its dual disagree"
        );
        (witness.is_none(), witness)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // validation guarantees at least one element
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The bottom element (always index 0 after validation).
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    /// `{ b : b <= a }` as a mask, the carrier of the principal ideal.
    pub fn down_set(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    /// `{ b : a <= b }` as a mask, the carrier of the principal filter.
    pub fn up_set(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    /// Hasse edges `(lower, upper)` in lexicographic index order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, u)| u == a)
            .map(|&(l, _)| l)
            .collect()
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(l, _)| l == a)
            .map(|&(_, u)| u)
            .collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(0)
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// Lexicographically smallest triple violating distributivity, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        self.distributivity_witness
    }

    pub fn is_totally_ordered(&self) -> bool {
        let full = self.full_set();
        (0..self.n).all(|a| self.up[a].union(self.down[a]) == full)
    }

    /// Pairs `(a, b)` with `a < b` (as indices) and `a ∥ b`.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.comparable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The join-irreducible elements (nonzero, exactly one lower cover)
    /// with their induced order. The down-set lattice of the result is
    /// isomorphic to the lattice itself (the Birkhoff round trip).
    pub fn join_irreducibles(&self) -> Result<JoinIrreducibles, LatticeError> {
        if !self.distributive {
            return Err(LatticeError::NotDistributive);
        }
        let elements: Vec<usize> = (1..self.n)
            .filter(|&a| self.lower_covers(a).len() == 1)
            .collect();
        let relations: Vec<(usize, usize)> = elements
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                elements
                    .iter()
                    .enumerate()
                    .filter(move |&(_, &b)| self.lt(a, b))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        let poset = Poset::from_relations(elements.len(), &relations)
            .expect("induced suborder is acyclic");
        Ok(JoinIrreducibles { elements, poset })
    }
}

/// Result of [`Lattice::join_irreducibles`]: the irreducible elements (as
/// lattice indices) and their induced strict order.
pub struct JoinIrreducibles {
    pub elements: Vec<usize>,
    pub poset: Poset,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Lattice({:?}, n={}, covers={:?})",
            self.name, self.n, self.covers
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    /// 0 < m < 1.
    fn c3() -> Lattice {
        Lattice::from_covers("C3", labels(&["0", "m", "1"]), &[(0, 1), (1, 2)]).unwrap()
    }

    /// 2x2 Boolean lattice.
    fn b2() -> Lattice {
        Lattice::from_covers(
            "B2",
            labels(&["0", "x", "y", "1"]),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    /// Kite: 0 < c < {a, b} < 1.
    fn k5() -> Lattice {
        Lattice::from_covers(
            "K5",
            labels(&["0", "c", "a", "b", "1"]),
            &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    /// Diamond M3: 0 < {x, y, z} < 1.
    fn m3() -> Lattice {
        Lattice::from_covers(
            "M3",
            labels(&["0", "x", "y", "z", "1"]),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    /// Pentagon N5: 0 < a < c < 1, 0 < b < 1.
    fn n5() -> Lattice {
        Lattice::from_covers(
            "N5",
            labels(&["0", "a", "b", "c", "1"]),
            &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
        )
        .unwrap()
    }

    #[test]
    fn chain_meets_and_joins() {
        let l = c3();
        assert_eq!(l.meet(1, 2), 1); // meet(m, 1) = m
        assert_eq!(l.join(0, 2), 2);
        assert_eq!(l.top(), 2);
        assert!(l.is_totally_ordered());
        assert!(l.is_distributive());
    }

    #[test]
    fn diamond_is_a_lattice_but_not_distributive() {
        let l = m3();
        // x ∧ (y ∨ z) = x, (x ∧ y) ∨ (x ∧ z) = 0
        assert!(!l.is_distributive());
        let (a, b, c) = l.distributivity_witness().unwrap();
        let lhs = l.meet(a, l.join(b, c));
        let rhs = l.join(l.meet(a, b), l.meet(a, c));
        assert_ne!(lhs, rhs);
        // lexicographically smallest failing triple: indices (1, 2, 3)
        assert_eq!((a, b, c), (1, 2, 3));
    }

    #[test]
    fn pentagon_not_distributive_with_witness() {
        let l = n5();
        assert!(!l.is_distributive());
        assert!(l.distributivity_witness().is_some());
        assert!(!l.is_totally_ordered());
    }

    #[test]
    fn kite_is_distributive_not_totally_ordered() {
        let l = k5();
        assert!(l.is_distributive());
        assert!(!l.is_totally_ordered());
        assert_eq!(l.covers().len(), 5);
        assert_eq!(l.atoms(), vec![1]);
    }

    #[test]
    fn b2_basic_facts() {
        let l = b2();
        assert!(l.is_distributive());
        assert!(!l.is_totally_ordered());
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.covers().len(), 4);
    }

    #[test]
    fn missing_join_is_reported() {
        // 0 < a, 0 < b and nothing above: a, b have no join
        let err = Lattice::from_covers("V", labels(&["0", "a", "b"]), &[(0, 1), (0, 2)])
            .unwrap_err();
        assert_eq!(err, LatticeError::NoJoin("a".into(), "b".into()));
    }

    #[test]
    fn missing_bottom_is_reported() {
        let err = Lattice::from_covers("twopt", labels(&["a", "b"]), &[]).unwrap_err();
        assert_eq!(err, LatticeError::NoBottom("a".into(), "b".into()));
    }

    #[test]
    fn cycle_is_rejected() {
        let err =
            Lattice::from_covers("cyc", labels(&["a", "b"]), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPoset(_)));
    }

    #[test]
    fn bottom_is_relocated_to_index_zero() {
        // declare the bottom last
        let l = Lattice::from_covers("C3r", labels(&["m", "1", "0"]), &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(l.label(0), "0");
        assert_eq!(l.label(l.top()), "1");
        assert!(l.leq(0, l.top()));
        assert_eq!(l.index_of("m"), Some(1));
    }

    #[test]
    fn leq_input_accepted_and_reduced() {
        // full order of C3 given as leq pairs, redundancy included
        let l = Lattice::from_leq_pairs(
            "C3leq",
            labels(&["0", "m", "1"]),
            &[(0, 1), (1, 2), (0, 2), (0, 0)],
        )
        .unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn doc_parsing_requires_exactly_one_relation_key() {
        let both = r#"{"name":"x","elements":["0"],"covers":[],"leq":[]}"#;
        assert!(matches!(
            Lattice::from_json_str(both),
            Err(LatticeError::InvalidDoc(_))
        ));
        let neither = r#"{"name":"x","elements":["0"]}"#;
        assert!(matches!(
            Lattice::from_json_str(neither),
            Err(LatticeError::InvalidDoc(_))
        ));
        let good = r#"{"name":"C2","elements":["0","1"],"covers":[["0","1"]]}"#;
        let l = Lattice::from_json_str(good).unwrap();
        assert_eq!(l.len(), 2);
    }

    #[test]
    fn size_cap_is_enforced() {
        let ls: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        let covers: Vec<(usize, usize)> = (0..64).map(|i| (i, i + 1)).collect();
        assert!(matches!(
            Lattice::from_covers("big", ls.clone(), &covers),
            Err(LatticeError::TooLarge { .. })
        ));
        let ls10: Vec<String> = (0..10).map(|i| format!("e{i}")).collect();
        let covers10: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        assert!(matches!(
            Lattice::from_covers_with_limit("c10", ls10, &covers10, 8),
            Err(LatticeError::TooLarge { .. })
        ));
    }

    #[test]
    fn join_irreducibles_of_fixtures() {
        let c = c3().join_irreducibles().unwrap();
        assert_eq!(c.elements, vec![1, 2]); // m and 1, a 2-chain
        assert!(c.poset.lt(0, 1));

        let b = b2().join_irreducibles().unwrap();
        assert_eq!(b.elements, vec![1, 2]); // x, y, antichain
        assert!(!b.poset.lt(0, 1) && !b.poset.lt(1, 0));

        let k = k5().join_irreducibles().unwrap();
        assert_eq!(k.elements, vec![1, 2, 3]); // c < a, c < b
        assert!(k.poset.lt(0, 1) && k.poset.lt(0, 2) && !k.poset.lt(1, 2));

        assert!(matches!(
            m3().join_irreducibles(),
            Err(LatticeError::NotDistributive)
        ));
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert!(matches!(
            Lattice::from_covers("dup", labels(&["a", "a"]), &[]),
            Err(LatticeError::DuplicateLabel(_))
        ));
        assert!(matches!(
            Lattice::from_labeled_covers(
                "unk",
                labels(&["0", "1"]),
                &[("0".into(), "2".into())]
            ),
            Err(LatticeError::UnknownLabel(_))
        ));
    }
}
