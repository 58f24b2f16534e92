//! Decomposability and projectability of distributive lattices, plus the
//! constructive procedures built on them: disjointifying an element across
//! a family of mutually incomparable primes, and splitting an element into
//! special parts, one per value.

use crate::ideals::{self, Ideal};
use crate::lattice::Lattice;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("lattice is not decomposable (failing pair {0:?}, {1:?})")]
    NotDecomposable(String, String),
    #[error("ideal ({0}] is not prime")]
    NotPrime(String),
    #[error("ideals ({0}] and ({1}] are comparable")]
    NotIncomparable(String, String),
    #[error("element {0:?} lies inside prime ({1}]")]
    ElementInsidePrime(String, String),
    #[error("the bottom element cannot be decomposed")]
    BottomElement,
}

/// Witness that the incomparable pair `(a, b)` splits: `a = ā ∨ (a ∧ b)`,
/// `b = b̄ ∨ (a ∧ b)` and `ā ∧ b̄ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub a: usize,
    pub b: usize,
    pub abar: usize,
    pub bbar: usize,
}

/// Outcome of the decomposability decision: one witness per incomparable
/// pair, or the lexicographically smallest pair without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposability {
    Decomposable(Vec<DecompositionWitness>),
    NotDecomposable { failing_pair: (usize, usize) },
}

impl Decomposability {
    pub fn holds(&self) -> bool {
        matches!(self, Decomposability::Decomposable(_))
    }
}

/// First witness pair `(ā, b̄)` for `(a, b)`, scanning `ā` then `b̄` in
/// increasing element index.
fn pair_witness(l: &Lattice, a: usize, b: usize) -> Option<(usize, usize)> {
    let ab = l.meet(a, b);
    for abar in 0..l.len() {
        if l.join(abar, ab) != a {
            continue;
        }
        for bbar in 0..l.len() {
            if l.join(bbar, ab) == b && l.meet(abar, bbar) == l.bottom() {
                return Some((abar, bbar));
            }
        }
    }
    None
}

/// Decide decomposability by exhaustive witness search over every
/// incomparable pair. Chains are vacuously decomposable.
pub fn is_decomposable(l: &Lattice) -> Result<Decomposability, DecompError> {
    if !l.is_distributive() {
        return Err(DecompError::NotDistributive);
    }
    let mut witnesses = Vec::new();
    for (a, b) in l.incomparable_pairs() {
        match pair_witness(l, a, b) {
            Some((abar, bbar)) => witnesses.push(DecompositionWitness { a, b, abar, bbar }),
            None => return Ok(Decomposability::NotDecomposable { failing_pair: (a, b) }),
        }
    }
    Ok(Decomposability::Decomposable(witnesses))
}

/// Convenience predicate: distributive and every incomparable pair splits.
pub fn decomposable(l: &Lattice) -> bool {
    matches!(is_decomposable(l), Ok(d) if d.holds())
}

/// `L = (a] ∨ a⊥` for every element `a` (joins taken in the ideal lattice).
pub fn is_strongly_projectable(l: &Lattice) -> bool {
    let full = Ideal::full(l);
    (0..l.len()).all(|a| {
        let principal = Ideal::principal(l, a);
        let polar = ideals::polar_of_element(l, a);
        ideals::ideal_join(l, &principal, &polar) == full
    })
}

/// `L = x⊥ ∨ x⊥⊥` for every element `x`.
pub fn is_projectable(l: &Lattice) -> bool {
    let full = Ideal::full(l);
    (0..l.len()).all(|x| {
        let polar = ideals::polar_of_element(l, x);
        let double = ideals::polar_of_set(l, polar.carrier()).expect("polar is nonempty");
        ideals::ideal_join(l, &polar, &double) == full
    })
}

fn ensure_decomposable(l: &Lattice) -> Result<(), DecompError> {
    match is_decomposable(l)? {
        Decomposability::Decomposable(_) => Ok(()),
        Decomposability::NotDecomposable { failing_pair: (a, b) } => Err(
            DecompError::NotDecomposable(l.label(a).to_string(), l.label(b).to_string()),
        ),
    }
}

/// The two-prime base step: elements `(a_1, a_2)` with
/// `a_1 ∈ Q_2 ∖ Q_1`, `a_2 ∈ Q_1 ∖ Q_2`, `0 < a_i < a` and `a_1 ∧ a_2 = 0`.
fn base_pair(l: &Lattice, q1: &Ideal, q2: &Ideal, a: usize) -> (usize, usize) {
    let x1 = q2
        .carrier()
        .minus(q1.carrier())
        .min()
        .expect("incomparable primes");
    let x2 = q1
        .carrier()
        .minus(q2.carrier())
        .min()
        .expect("incomparable primes");
    let (y1, y2) = pair_witness(l, x1, x2).expect("decomposable lattice");
    (l.meet(a, y1), l.meet(a, y2))
}

fn disjointify_rec(l: &Lattice, qs: &[Ideal], a: usize) -> Vec<usize> {
    let n = qs.len();
    if n == 2 {
        let (a1, a2) = base_pair(l, &qs[0], &qs[1], a);
        return vec![a1, a2];
    }
    // two overlapping (n-1)-subproblems ...
    let b = disjointify_rec(l, &qs[..n - 1], a);
    let c = disjointify_rec(l, &qs[1..], a);
    let mut parts = vec![0usize; n];
    for i in 1..n - 1 {
        parts[i] = l.meet(b[i], c[i - 1]);
    }
    // ... plus a pairwise fix-up for the first and last prime
    let (f1, fn_) = base_pair(l, &qs[0], &qs[n - 1], a);
    parts[0] = l.meet(f1, b[0]);
    parts[n - 1] = l.meet(fn_, c[n - 2]);
    parts
}

/// Split `a` across mutually incomparable primes `Q_1, .., Q_n` (n >= 2,
/// `a` outside each): returns `a_i ∈ (⋂_{j≠i} Q_j) ∖ Q_i` with
/// `0 < a_i < a` and pairwise meets 0.
pub fn disjointify(l: &Lattice, primes: &[Ideal], a: usize) -> Result<Vec<usize>, DecompError> {
    ensure_decomposable(l)?;
    assert!(primes.len() >= 2, "disjointify needs at least two primes");
    for q in primes {
        if !ideals::is_prime(l, q) {
            return Err(DecompError::NotPrime(l.label(q.generator()).to_string()));
        }
    }
    for (i, q) in primes.iter().enumerate() {
        for r in &primes[i + 1..] {
            if q.comparable(r) {
                return Err(DecompError::NotIncomparable(
                    l.label(q.generator()).to_string(),
                    l.label(r.generator()).to_string(),
                ));
            }
        }
    }
    for q in primes {
        if q.contains(a) {
            return Err(DecompError::ElementInsidePrime(
                l.label(a).to_string(),
                l.label(q.generator()).to_string(),
            ));
        }
    }

    let parts = disjointify_rec(l, primes, a);
    // postconditions are theorem-guaranteed; treat violations as bugs
    for (i, (&ai, qi)) in parts.iter().zip(primes).enumerate() {
        assert!(!qi.contains(ai), "part must avoid its own prime");
        for (j, qj) in primes.iter().enumerate() {
            if i != j {
                assert!(qj.contains(ai), "part must lie in every other prime");
            }
        }
        assert!(ai != l.bottom() && l.lt(ai, a), "part must satisfy 0 < a_i < a");
        for &aj in &parts[i + 1..] {
            assert_eq!(l.meet(ai, aj), l.bottom(), "parts must be disjoint");
        }
    }
    Ok(parts)
}

/// An element split into pairwise-disjoint special parts, one per value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDecomposition {
    pub element: usize,
    pub parts: Vec<usize>,
    /// `(part, its unique value)`, aligned with `parts`.
    pub value_map: Vec<(usize, Ideal)>,
}

/// Decompose `a > 0` as `a = a_1 ∨ .. ∨ a_n` where the `a_i` are pairwise
/// disjoint and `a_i` has exactly the i-th value of `a` as its unique
/// value. A single-valued `a` is its own (special) decomposition.
pub fn decompose_special(l: &Lattice, a: usize) -> Result<SpecialDecomposition, DecompError> {
    ensure_decomposable(l)?;
    if a == l.bottom() {
        return Err(DecompError::BottomElement);
    }
    let vals = ideals::values_of(l, a).expect("a > 0");
    let parts = if vals.len() == 1 {
        vec![a]
    } else {
        disjointify(l, &vals, a).expect("values are mutually incomparable primes")
    };

    let joined = parts.iter().fold(l.bottom(), |acc, &p| l.join(acc, p));
    assert_eq!(joined, a, "parts must join back to the element");
    let mut value_map = Vec::with_capacity(parts.len());
    for (&part, q) in parts.iter().zip(&vals) {
        let part_vals = ideals::values_of(l, part).expect("parts are nonzero");
        assert_eq!(part_vals, vec![*q], "each part must be special with value Q_i");
        value_map.push((part, *q));
    }
    Ok(SpecialDecomposition {
        element: a,
        parts,
        value_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn fixture(name: &str) -> Lattice {
        gen::catalog_entry(name).expect("fixture exists").lattice.clone()
    }

    #[test]
    fn chains_are_vacuously_decomposable() {
        let c4 = fixture("C4");
        match is_decomposable(&c4).unwrap() {
            Decomposability::Decomposable(w) => assert!(w.is_empty()),
            _ => panic!("chain must be decomposable"),
        }
    }

    #[test]
    fn boolean_lattices_are_decomposable() {
        let b3 = fixture("B3");
        match is_decomposable(&b3).unwrap() {
            Decomposability::Decomposable(witnesses) => {
                assert!(!witnesses.is_empty());
                for w in witnesses {
                    assert_eq!(b3.join(w.abar, b3.meet(w.a, w.b)), w.a);
                    assert_eq!(b3.join(w.bbar, b3.meet(w.a, w.b)), w.b);
                    assert_eq!(b3.meet(w.abar, w.bbar), 0);
                }
            }
            _ => panic!("B3 must be decomposable"),
        }
    }

    #[test]
    fn kite_fails_at_its_only_incomparable_pair() {
        let k5 = fixture("K5");
        let a = k5.index_of("a").unwrap();
        let b = k5.index_of("b").unwrap();
        assert_eq!(
            is_decomposable(&k5).unwrap(),
            Decomposability::NotDecomposable { failing_pair: (a, b) }
        );
    }

    #[test]
    fn non_distributive_input_is_rejected() {
        let m3 = fixture("M3");
        assert_eq!(is_decomposable(&m3).unwrap_err(), DecompError::NotDistributive);
        assert!(!decomposable(&m3));
    }

    #[test]
    fn projectability_fixtures() {
        // B2: (x] ∨ x⊥ = (x] ∨ (y] = L for every element
        assert!(is_strongly_projectable(&fixture("B2")));
        // K5: (a] ∨ a⊥ = (a] ∨ {0} = (a] ⊂ L
        assert!(!is_strongly_projectable(&fixture("K5")));
        // C3: m⊥ = {0}, so (m] ∨ m⊥ = (m] ⊂ L is proper: not strongly projectable,
        // though x⊥ ∨ x⊥⊥ = {0} ∨ L = L makes every chain projectable
        let c3 = fixture("C3");
        let m = c3.index_of("m").unwrap();
        assert_eq!(
            ideals::polar_of_element(&c3, m),
            Ideal::zero(&c3),
        );
        assert!(!is_strongly_projectable(&c3));
        assert!(is_projectable(&c3));
        assert!(is_projectable(&fixture("B2")));
    }

    #[test]
    fn strongly_projectable_implies_decomposable_on_fixtures() {
        for name in ["C1", "C2", "C3", "C4", "B2", "B3", "B4", "K5", "G3x3"] {
            let e = gen::catalog_entry(name).unwrap();
            if e.strongly_projectable {
                assert!(e.decomposable, "{name} violates the implication");
            }
        }
    }

    #[test]
    fn disjointify_base_case_on_b2() {
        let b2 = fixture("B2");
        let x = b2.index_of("x").unwrap();
        let y = b2.index_of("y").unwrap();
        let primes = [Ideal::principal(&b2, x), Ideal::principal(&b2, y)];
        let parts = disjointify(&b2, &primes, b2.top()).unwrap();
        assert_eq!(parts, vec![y, x]);
    }

    #[test]
    fn disjointify_induction_on_b3() {
        let b3 = fixture("B3");
        let coatoms: Vec<Ideal> = ["xy", "xz", "yz"]
            .iter()
            .map(|s| Ideal::principal(&b3, b3.index_of(s).unwrap()))
            .collect();
        let parts = disjointify(&b3, &coatoms, b3.top()).unwrap();
        let atom = |s: &str| b3.index_of(s).unwrap();
        assert_eq!(parts, vec![atom("z"), atom("y"), atom("x")]);
    }

    #[test]
    fn disjointify_validations() {
        let k5 = fixture("K5");
        let a = Ideal::principal(&k5, k5.index_of("a").unwrap());
        let b = Ideal::principal(&k5, k5.index_of("b").unwrap());
        assert!(matches!(
            disjointify(&k5, &[a, b], k5.top()),
            Err(DecompError::NotDecomposable(_, _))
        ));

        let b2 = fixture("B2");
        let x = Ideal::principal(&b2, b2.index_of("x").unwrap());
        let y = Ideal::principal(&b2, b2.index_of("y").unwrap());
        let zero = Ideal::zero(&b2);
        assert!(matches!(
            disjointify(&b2, &[zero, x], b2.top()),
            Err(DecompError::NotPrime(_))
        ));
        assert!(matches!(
            disjointify(&b2, &[x, x], b2.top()),
            Err(DecompError::NotIncomparable(_, _))
        ));
        let xi = b2.index_of("x").unwrap();
        assert!(matches!(
            disjointify(&b2, &[x, y], xi),
            Err(DecompError::ElementInsidePrime(_, _))
        ));
    }

    #[test]
    fn special_decomposition_examples() {
        let b2 = fixture("B2");
        let d = decompose_special(&b2, b2.top()).unwrap();
        let x = b2.index_of("x").unwrap();
        let y = b2.index_of("y").unwrap();
        assert_eq!(d.parts, vec![y, x]);
        assert_eq!(d.value_map[0].1, Ideal::principal(&b2, x));
        assert_eq!(d.value_map[1].1, Ideal::principal(&b2, y));

        let c3 = fixture("C3");
        let d = decompose_special(&c3, c3.top()).unwrap();
        assert_eq!(d.parts, vec![c3.top()]);
        let m = c3.index_of("m").unwrap();
        assert_eq!(d.value_map[0].1, Ideal::principal(&c3, m));

        let k5 = fixture("K5");
        assert!(matches!(
            decompose_special(&k5, k5.top()),
            Err(DecompError::NotDecomposable(_, _))
        ));
        assert_eq!(
            decompose_special(&b2, 0).unwrap_err(),
            DecompError::BottomElement
        );
    }
}
