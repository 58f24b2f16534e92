//! Ideal structure of a finite distributive lattice.
//!
//! Enumerates and classifies ideals (prime, minimal prime, value/regular,
//! special, polar), filters and ultrafilters, and the intersections `S_P`
//! of minimal primes below a prime.
//!
//! In a finite lattice every ideal is principal. The representation keeps
//! both views: each [`Ideal`] carries its full carrier set and its
//! generator, and carrier-based constructors verify the ideal axioms
//! rather than assuming them.

use crate::lattice::Lattice;
use crate::set::ElemSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealsError {
    #[error("the bottom element has no value")]
    BottomHasNoValue,
    #[error("M* is undefined for the improper ideal L")]
    MStarUndefined,
    #[error("polar of the empty set is undefined")]
    EmptySet,
    #[error("ideal ({0}] is not prime")]
    NotPrime(String),
    #[error("lattice is not distributive")]
    NotDistributive,
}

/// A lattice ideal: nonempty, downward closed, closed under joins.
/// Equality is carrier equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ideal {
    carrier: ElemSet,
    generator: usize,
}

impl Ideal {
    /// The principal ideal `(g] = { x : x <= g }`.
    pub fn principal(l: &Lattice, g: usize) -> Ideal {
        Ideal {
            carrier: l.down_set(g),
            generator: g,
        }
    }

    /// Validate a carrier set as an ideal. Returns `None` if it is empty,
    /// not downward closed, or not join closed. The generator is the
    /// maximum element, whose existence is checked, not assumed.
    pub fn from_carrier(l: &Lattice, carrier: ElemSet) -> Option<Ideal> {
        if carrier.is_empty() {
            return None;
        }
        for a in carrier.iter() {
            if !l.down_set(a).is_subset(carrier) {
                return None;
            }
            for b in carrier.iter() {
                if !carrier.contains(l.join(a, b)) {
                    return None;
                }
            }
        }
        let generator = carrier
            .iter()
            .find(|&g| carrier.is_subset(l.down_set(g)))
            .expect("finite join-closed set has a maximum");
        Some(Ideal { carrier, generator })
    }

    pub fn carrier(&self) -> ElemSet {
        self.carrier
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn contains(&self, a: usize) -> bool {
        self.carrier.contains(a)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.carrier.is_subset(other.carrier)
    }

    pub fn is_proper(&self, l: &Lattice) -> bool {
        self.carrier != l.full_set()
    }

    /// The zero ideal {0}.
    pub fn zero(l: &Lattice) -> Ideal {
        Ideal::principal(l, l.bottom())
    }

    /// The improper ideal L itself.
    pub fn full(l: &Lattice) -> Ideal {
        Ideal::principal(l, l.top())
    }

    pub fn comparable(&self, other: &Ideal) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }
}

/// A lattice filter: meet-closed up-set not containing the bottom.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Filter {
    carrier: ElemSet,
    generator: usize,
}

impl Filter {
    /// The principal filter `up(g)` for `g > 0`.
    pub fn principal(l: &Lattice, g: usize) -> Filter {
        assert!(g != l.bottom(), "a filter may not contain the bottom");
        Filter {
            carrier: l.up_set(g),
            generator: g,
        }
    }

    /// Validate a carrier set as a filter.
    pub fn from_carrier(l: &Lattice, carrier: ElemSet) -> Option<Filter> {
        if carrier.is_empty() || carrier.contains(l.bottom()) {
            return None;
        }
        for a in carrier.iter() {
            if !l.up_set(a).is_subset(carrier) {
                return None;
            }
            for b in carrier.iter() {
                if !carrier.contains(l.meet(a, b)) {
                    return None;
                }
            }
        }
        let generator = carrier
            .iter()
            .find(|&g| carrier.is_subset(l.up_set(g)))
            .expect("finite meet-closed set has a minimum");
        Some(Filter { carrier, generator })
    }

    pub fn carrier(&self) -> ElemSet {
        self.carrier
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn contains(&self, a: usize) -> bool {
        self.carrier.contains(a)
    }
}

fn assert_distributive(l: &Lattice) {
    assert!(
        l.is_distributive(),
        "ideal-structure operations require a distributive lattice ({})",
        l.name()
    );
}

/// All ideals of `l`, ordered by generator index. In a finite lattice
/// these are exactly the principal ideals; each one is re-validated.
pub fn enumerate_ideals(l: &Lattice) -> Vec<Ideal> {
    assert_distributive(l);
    (0..l.len())
        .map(|g| {
            Ideal::from_carrier(l, l.down_set(g)).expect("principal down-set is an ideal")
        })
        .collect()
}

/// Meet of ideals: their intersection.
pub fn ideal_meet(l: &Lattice, i: &Ideal, j: &Ideal) -> Ideal {
    assert_distributive(l);
    let m = Ideal::principal(l, l.meet(i.generator(), j.generator()));
    debug_assert_eq!(m.carrier(), i.carrier().inter(j.carrier()));
    m
}

/// Join of ideals: `{ a ∨ b : a ∈ I, b ∈ J }`, which for principal ideals
/// of a distributive lattice is the principal ideal of the generator join.
pub fn ideal_join(l: &Lattice, i: &Ideal, j: &Ideal) -> Ideal {
    assert_distributive(l);
    let jn = Ideal::principal(l, l.join(i.generator(), j.generator()));
    debug_assert!({
        // elementwise definition agrees (distributivity): z <= gi ∨ gj
        // splits as z = (z ∧ gi) ∨ (z ∧ gj)
        let mut elementwise = ElemSet::EMPTY;
        for a in i.carrier().iter() {
            for b in j.carrier().iter() {
                elementwise.insert(l.join(a, b));
            }
        }
        elementwise == jn.carrier()
    });
    jn
}

/// Is `p` a prime ideal: proper, and `a ∧ b ∈ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime(l: &Lattice, p: &Ideal) -> bool {
    if !p.is_proper(l) {
        return false;
    }
    let outside = l.full_set().minus(p.carrier());
    outside
        .iter()
        .all(|a| outside.iter().all(|b| !p.contains(l.meet(a, b))))
}

/// All prime ideals, ordered by generator index.
pub fn primes(l: &Lattice) -> Vec<Ideal> {
    assert_distributive(l);
    enumerate_ideals(l)
        .into_iter()
        .filter(|p| is_prime(l, p))
        .collect()
}

/// Prime ideals minimal under inclusion.
pub fn min_primes(l: &Lattice) -> Vec<Ideal> {
    let ps = primes(l);
    ps.iter()
        .filter(|p| !ps.iter().any(|q| q != *p && q.is_subset(p)))
        .copied()
        .collect()
}

/// The values of `x`: ideals maximal with respect to not containing `x`.
/// The bottom has no value.
pub fn values_of(l: &Lattice, x: usize) -> Result<Vec<Ideal>, IdealsError> {
    assert_distributive(l);
    if x == l.bottom() {
        return Err(IdealsError::BottomHasNoValue);
    }
    let omit: Vec<usize> = (0..l.len()).filter(|&m| !l.leq(x, m)).collect();
    Ok(omit
        .iter()
        .filter(|&&m| !omit.iter().any(|&y| l.lt(m, y)))
        .map(|&m| Ideal::principal(l, m))
        .collect())
}

/// The regular ideals `V(L)`: ideals that are a value of some `x > 0`.
///
/// Three standard characterizations coincide and are recomputed here as a
/// consistency check: value of some element, meet-irreducible proper
/// ideal, and proper `M` with `M ⊂ M*`.
pub fn regular_ideals(l: &Lattice) -> Vec<Ideal> {
    assert_distributive(l);
    let mut via_values: Vec<Ideal> = Vec::new();
    for x in 1..l.len() {
        for v in values_of(l, x).expect("x > 0") {
            if !via_values.contains(&v) {
                via_values.push(v);
            }
        }
    }
    via_values.sort();

    let via_m_star: Vec<Ideal> = enumerate_ideals(l)
        .into_iter()
        .filter(|m| {
            m.is_proper(l) && {
                let star = m_star(l, m).expect("proper ideal has M*");
                m.is_subset(&star) && *m != star
            }
        })
        .collect();
    assert_eq!(
        via_values, via_m_star,
        "value route and meet-irreducibility route disagree on V(L)"
    );
    via_values
}

/// `M* = ⋂ { I ∈ Ide(L) : I ⊃ M }`, the cover of `M` in the ideal lattice.
/// Undefined for `M = L`.
pub fn m_star(l: &Lattice, m: &Ideal) -> Result<Ideal, IdealsError> {
    assert_distributive(l);
    if !m.is_proper(l) {
        return Err(IdealsError::MStarUndefined);
    }
    let g = (0..l.len())
        .filter(|&y| l.lt(m.generator(), y))
        .fold(l.top(), |acc, y| l.meet(acc, y));
    Ok(Ideal::principal(l, g))
}

/// Is `m` the unique value of some element?
pub fn is_special(l: &Lattice, m: &Ideal) -> bool {
    (1..l.len()).any(|x| values_of(l, x).expect("x > 0") == vec![*m])
}

/// The special ideals `S(L)`, ordered by generator index.
pub fn special_ideals(l: &Lattice) -> Vec<Ideal> {
    assert_distributive(l);
    enumerate_ideals(l)
        .into_iter()
        .filter(|m| is_special(l, m))
        .collect()
}

/// The polar `A⊥ = { x : x ∧ a = 0 for every a ∈ A }` of a nonempty set.
/// In a distributive lattice this is an ideal.
pub fn polar_of_set(l: &Lattice, a: ElemSet) -> Result<Ideal, IdealsError> {
    assert_distributive(l);
    if a.is_empty() {
        return Err(IdealsError::EmptySet);
    }
    let carrier = (0..l.len())
        .filter(|&x| a.iter().all(|p| l.meet(x, p) == l.bottom()))
        .collect();
    Ok(Ideal::from_carrier(l, carrier).expect("polar of a set is an ideal"))
}

/// The polar of a single element.
pub fn polar_of_element(l: &Lattice, e: usize) -> Ideal {
    polar_of_set(l, ElemSet::singleton(e)).expect("singleton is nonempty")
}

/// `A⊥⊥`.
pub fn double_polar(l: &Lattice, a: ElemSet) -> Result<Ideal, IdealsError> {
    let p = polar_of_set(l, a)?;
    polar_of_set(l, p.carrier())
}

/// The polar ideals `P(L)`: fixed points of the double polar.
pub fn polar_ideals(l: &Lattice) -> Vec<Ideal> {
    assert_distributive(l);
    enumerate_ideals(l)
        .into_iter()
        .filter(|i| double_polar(l, i.carrier()).expect("ideal carrier nonempty") == *i)
        .collect()
}

/// All filters (meet-closed up-sets excluding the bottom), ordered by
/// generator index. The one-element lattice has none.
pub fn filters(l: &Lattice) -> Vec<Filter> {
    (1..l.len())
        .map(|g| Filter::from_carrier(l, l.up_set(g)).expect("principal up-set is a filter"))
        .collect()
}

/// Maximal filters.
pub fn ultrafilters(l: &Lattice) -> Vec<Filter> {
    let fs = filters(l);
    fs.iter()
        .filter(|f| {
            !fs.iter()
                .any(|g| g != *f && f.carrier().is_subset(g.carrier()))
        })
        .copied()
        .collect()
}

/// `S_P = ⋂ { M ∈ MinSpe(L) : M ⊆ P }` for a prime `P`.
pub fn s_p(l: &Lattice, p: &Ideal) -> Result<Ideal, IdealsError> {
    assert_distributive(l);
    if !is_prime(l, p) {
        return Err(IdealsError::NotPrime(l.label(p.generator()).to_string()));
    }
    let carrier = min_primes(l)
        .iter()
        .filter(|m| m.is_subset(p))
        .fold(l.full_set(), |acc, m| acc.inter(m.carrier()));
    Ok(Ideal::from_carrier(l, carrier).expect("intersection of ideals is an ideal"))
}

/// Everything the spectrum of one lattice contains, computed in one pass.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub all_ideals: Vec<Ideal>,
    pub primes: Vec<Ideal>,
    pub min_primes: Vec<Ideal>,
    pub values: Vec<Ideal>,
    pub specials: Vec<Ideal>,
    pub polar_ideals: Vec<Ideal>,
    pub ultrafilters: Vec<Filter>,
    /// Values of each element; index 0 (the bottom) stays empty.
    pub val_of: Vec<Vec<Ideal>>,
    /// `(P, S_P)` per prime, ordered by generator index.
    pub s_p: Vec<(Ideal, Ideal)>,
}

impl SpectrumReport {
    pub fn compute(l: &Lattice) -> Result<SpectrumReport, IdealsError> {
        if !l.is_distributive() {
            return Err(IdealsError::NotDistributive);
        }
        let all_ideals = enumerate_ideals(l);
        let primes = primes(l);
        let min_primes = min_primes(l);
        let values = regular_ideals(l);
        let specials = special_ideals(l);
        let polars = polar_ideals(l);
        let ultra = ultrafilters(l);
        let mut val_of = vec![Vec::new(); l.len()];
        for (x, slot) in val_of.iter_mut().enumerate().skip(1) {
            *slot = values_of(l, x).expect("x > 0");
        }
        let s_p_pairs: Vec<(Ideal, Ideal)> = primes
            .iter()
            .map(|p| (*p, s_p(l, p).expect("prime")))
            .collect();

        let report = SpectrumReport {
            all_ideals,
            primes,
            min_primes,
            values,
            specials,
            polar_ideals: polars,
            ultrafilters: ultra,
            val_of,
            s_p: s_p_pairs,
        };
        report.assert_invariants(l);
        Ok(report)
    }

    /// Containments that hold unconditionally (`S ⊆ V`, minimal primes
    /// among primes) and, when the lattice is decomposable, `V ⊆ Spe`.
    fn assert_invariants(&self, l: &Lattice) {
        for s in &self.specials {
            assert!(self.values.contains(s), "S(L) must sit inside V(L)");
        }
        for m in &self.min_primes {
            assert!(self.primes.contains(m), "MinSpe(L) must sit inside Spe(L)");
        }
        if crate::decomp::decomposable(l) {
            for v in &self.values {
                assert!(
                    self.primes.contains(v),
                    "V(L) must sit inside Spe(L) on a decomposable lattice"
                );
            }
        }
    }

    /// JSON form: ideals named by generator label, carriers as label lists.
    pub fn to_json(&self, l: &Lattice) -> serde_json::Value {
        let gen_label = |i: &Ideal| serde_json::Value::String(l.label(i.generator()).to_string());
        let carrier_labels = |c: ElemSet| {
            serde_json::Value::Array(
                c.iter()
                    .map(|e| serde_json::Value::String(l.label(e).to_string()))
                    .collect(),
            )
        };
        let class = |v: &[Ideal]| serde_json::Value::Array(v.iter().map(gen_label).collect());
        let mut val_of = serde_json::Map::new();
        for (x, vals) in self.val_of.iter().enumerate().skip(1) {
            val_of.insert(
                l.label(x).to_string(),
                serde_json::Value::Array(vals.iter().map(gen_label).collect()),
            );
        }
        let mut s_p = serde_json::Map::new();
        for (p, sp) in &self.s_p {
            s_p.insert(l.label(p.generator()).to_string(), gen_label(sp));
        }
        serde_json::json!({
            "lattice": l.name(),
            "elements": l.labels(),
            "ideals": self.all_ideals.iter().map(|i| carrier_labels(i.carrier())).collect::<Vec<_>>(),
            "primes": class(&self.primes),
            "min_primes": class(&self.min_primes),
            "values": class(&self.values),
            "specials": class(&self.specials),
            "polar_ideals": class(&self.polar_ideals),
            "ultrafilters": self.ultrafilters.iter().map(|f| carrier_labels(f.carrier())).collect::<Vec<_>>(),
            "val_of": val_of,
            "s_p": s_p,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn fixture(name: &str) -> Lattice {
        gen::catalog_entry(name).expect("fixture exists").lattice.clone()
    }

    fn gens(v: &[Ideal]) -> Vec<usize> {
        v.iter().map(|i| i.generator()).collect()
    }

    #[test]
    fn ideal_counts_per_fixture() {
        assert_eq!(enumerate_ideals(&fixture("C3")).len(), 3);
        assert_eq!(enumerate_ideals(&fixture("B2")).len(), 4);
        assert_eq!(enumerate_ideals(&fixture("K5")).len(), 5);
    }

    #[test]
    fn ideal_join_and_meet_examples() {
        let k5 = fixture("K5");
        let a = Ideal::principal(&k5, k5.index_of("a").unwrap());
        let b = Ideal::principal(&k5, k5.index_of("b").unwrap());
        assert_eq!(ideal_join(&k5, &a, &b), Ideal::full(&k5));
        assert_eq!(ideal_join(&k5, &a, &Ideal::zero(&k5)), a);

        let b2 = fixture("B2");
        let x = Ideal::principal(&b2, b2.index_of("x").unwrap());
        let y = Ideal::principal(&b2, b2.index_of("y").unwrap());
        assert_eq!(ideal_meet(&b2, &x, &y), Ideal::zero(&b2));
    }

    #[test]
    fn primality_on_the_kite() {
        let k5 = fixture("K5");
        let ix = |s: &str| k5.index_of(s).unwrap();
        let ideal = |s: &str| Ideal::principal(&k5, ix(s));
        assert!(is_prime(&k5, &ideal("a")));
        assert!(is_prime(&k5, &ideal("b")));
        // a ∧ b = c lies in (c] while neither a nor b does
        assert_eq!(k5.meet(ix("a"), ix("b")), ix("c"));
        assert!(!is_prime(&k5, &ideal("c")));
        // every nonzero element sits above c, so x ∧ y = 0 forces 0
        assert!(is_prime(&k5, &ideal("0")));
        assert!(!is_prime(&k5, &Ideal::full(&k5)));
    }

    #[test]
    fn primes_and_min_primes_per_fixture() {
        let k5 = fixture("K5");
        let ix = |s: &str| k5.index_of(s).unwrap();
        assert_eq!(gens(&primes(&k5)), vec![0, ix("a"), ix("b")]);
        assert_eq!(gens(&min_primes(&k5)), vec![0]);

        let c3 = fixture("C3");
        assert_eq!(gens(&primes(&c3)), vec![0, c3.index_of("m").unwrap()]);
        assert_eq!(gens(&min_primes(&c3)), vec![0]);

        // {0} is not prime in B2 (x ∧ y = 0 with both outside)
        let b2 = fixture("B2");
        let (x, y) = (b2.index_of("x").unwrap(), b2.index_of("y").unwrap());
        assert_eq!(gens(&primes(&b2)), vec![x, y]);
        assert_eq!(gens(&min_primes(&b2)), vec![x, y]);
    }

    #[test]
    fn values_of_examples() {
        let k5 = fixture("K5");
        let ix = |s: &str| k5.index_of(s).unwrap();
        assert_eq!(
            gens(&values_of(&k5, k5.top()).unwrap()),
            vec![ix("a"), ix("b")]
        );
        assert_eq!(gens(&values_of(&k5, ix("c")).unwrap()), vec![0]);
        assert_eq!(
            values_of(&k5, 0).unwrap_err(),
            IdealsError::BottomHasNoValue
        );

        let b2 = fixture("B2");
        let (x, y) = (b2.index_of("x").unwrap(), b2.index_of("y").unwrap());
        assert_eq!(gens(&values_of(&b2, x).unwrap()), vec![y]);
    }

    #[test]
    fn regular_ideals_and_m_star() {
        let k5 = fixture("K5");
        let ix = |s: &str| k5.index_of(s).unwrap();
        assert_eq!(gens(&regular_ideals(&k5)), vec![0, ix("a"), ix("b")]);
        // the unique cover of {0} in Ide(K5) is (c]
        assert_eq!(
            m_star(&k5, &Ideal::zero(&k5)).unwrap(),
            Ideal::principal(&k5, ix("c"))
        );
        assert_eq!(
            m_star(&k5, &Ideal::full(&k5)).unwrap_err(),
            IdealsError::MStarUndefined
        );

        let c3 = fixture("C3");
        assert_eq!(gens(&regular_ideals(&c3)), vec![0, 1]);
    }

    #[test]
    fn special_ideals_examples() {
        // {0} is the unique value of c; (a] of b; (b] of a
        let k5 = fixture("K5");
        let ix = |s: &str| k5.index_of(s).unwrap();
        assert_eq!(gens(&special_ideals(&k5)), vec![0, ix("a"), ix("b")]);

        let c3 = fixture("C3");
        assert_eq!(special_ideals(&c3), regular_ideals(&c3));

        // 1 has two values in B2; x and y each have one
        let b2 = fixture("B2");
        let (x, y) = (b2.index_of("x").unwrap(), b2.index_of("y").unwrap());
        assert_eq!(gens(&special_ideals(&b2)), vec![x, y]);
    }

    #[test]
    fn polars() {
        let b2 = fixture("B2");
        let (x, y) = (b2.index_of("x").unwrap(), b2.index_of("y").unwrap());
        assert_eq!(polar_of_element(&b2, x), Ideal::principal(&b2, y));

        let k5 = fixture("K5");
        let a = k5.index_of("a").unwrap();
        assert_eq!(polar_of_element(&k5, a), Ideal::zero(&k5));
        assert_eq!(polar_of_element(&k5, 0), Ideal::full(&k5));

        assert_eq!(
            polar_of_set(&k5, ElemSet::EMPTY).unwrap_err(),
            IdealsError::EmptySet
        );
        // polar ideals of K5: only {0} and L survive the double polar
        assert_eq!(gens(&polar_ideals(&k5)), vec![0, k5.top()]);
    }

    #[test]
    fn filters_and_ultrafilters() {
        let k5 = fixture("K5");
        let c = k5.index_of("c").unwrap();
        let ultra = ultrafilters(&k5);
        assert_eq!(ultra.len(), 1);
        assert_eq!(ultra[0].carrier(), k5.up_set(c));

        let c3 = fixture("C3");
        let m = c3.index_of("m").unwrap();
        assert_eq!(ultrafilters(&c3)[0].carrier(), c3.up_set(m));

        let b2 = fixture("B2");
        assert_eq!(ultrafilters(&b2).len(), 2);
        assert_eq!(filters(&b2).len(), 3); // up(x), up(y), up(1)

        let c1 = fixture("C1");
        assert!(filters(&c1).is_empty());
        assert!(ultrafilters(&c1).is_empty());
    }

    #[test]
    fn s_p_examples() {
        let k5 = fixture("K5");
        let a = Ideal::principal(&k5, k5.index_of("a").unwrap());
        assert_eq!(s_p(&k5, &a).unwrap(), Ideal::zero(&k5));
        let c = Ideal::principal(&k5, k5.index_of("c").unwrap());
        assert!(matches!(s_p(&k5, &c), Err(IdealsError::NotPrime(_))));

        let b2 = fixture("B2");
        let x = Ideal::principal(&b2, b2.index_of("x").unwrap());
        assert_eq!(s_p(&b2, &x).unwrap(), x); // (x] is itself minimal prime

        let c3 = fixture("C3");
        let m = Ideal::principal(&c3, c3.index_of("m").unwrap());
        assert_eq!(s_p(&c3, &m).unwrap(), Ideal::zero(&c3));
    }

    #[test]
    fn spectrum_report_rejects_non_distributive() {
        let m3 = fixture("M3");
        assert!(matches!(
            SpectrumReport::compute(&m3),
            Err(IdealsError::NotDistributive)
        ));
    }

    #[test]
    #[should_panic(expected = "distributive")]
    fn ops_panic_on_non_distributive_input() {
        let m3 = fixture("M3");
        let _ = enumerate_ideals(&m3);
    }

    #[test]
    fn spectrum_report_of_kite() {
        let k5 = fixture("K5");
        let r = SpectrumReport::compute(&k5).unwrap();
        assert_eq!(r.all_ideals.len(), 5);
        assert_eq!(gens(&r.primes), gens(&r.values));
        assert_eq!(gens(&r.values), gens(&r.specials));
        assert_eq!(r.min_primes.len(), 1);
        assert_eq!(r.ultrafilters.len(), 1);
        let json = r.to_json(&k5);
        assert_eq!(json["primes"].as_array().unwrap().len(), 3);
        assert_eq!(json["s_p"]["a"], "0");
    }
}
