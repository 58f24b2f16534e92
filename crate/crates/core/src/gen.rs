//! Lattice producers: the named fixture catalog, exhaustive enumeration of
//! distributive lattices up to isomorphism, and seeded random generation.
//!
//! Enumeration runs through the dual side: posets are generated up to
//! isomorphism by repeatedly attaching a new maximal point over every
//! down-set (each class is reached, since deleting a maximal point of any
//! poset lands one level down), deduplicated by canonical key, and turned
//! into their down-set lattices.

use crate::decomp;
use crate::lattice::{Lattice, MAX_ELEMENTS};
use crate::poset::Poset;
use crate::set::ElemSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::OnceLock;
use thiserror::Error;

/// Default bound on poset points. Enumerating distributive lattices with
/// up to `n` elements is complete for `n <= POSET_POINT_CAP + 1`.
pub const POSET_POINT_CAP: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("requested size {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A poset representative together with its canonical key.
pub struct PosetSpec {
    pub poset: Poset,
    pub canon: Vec<u64>,
}

/// Poset isomorphism classes level by level, `levels[k]` holding one
/// representative per class of k-point posets satisfying `keep`. The
/// predicate must be preserved by deleting a maximal point.
fn poset_levels(max_points: usize, keep: &dyn Fn(&Poset) -> bool) -> Vec<Vec<Poset>> {
    let mut levels: Vec<Vec<Poset>> = vec![vec![Poset::antichain(0)]];
    for k in 1..=max_points {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut level = Vec::new();
        for parent in &levels[k - 1] {
            for d in parent.downsets() {
                let cand = parent.with_new_maximal(d);
                if !keep(&cand) {
                    continue;
                }
                if seen.insert(cand.canonical_key()) {
                    level.push(cand);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// One representative per isomorphism class of posets on `k` points.
pub fn enumerate_posets(k: usize) -> Result<Vec<PosetSpec>, GenError> {
    enumerate_posets_with_cap(k, POSET_POINT_CAP)
}

/// Same with a custom point cap (hard limit 9: canonicalization and
/// down-set enumeration are exhaustive).
pub fn enumerate_posets_with_cap(k: usize, cap: usize) -> Result<Vec<PosetSpec>, GenError> {
    assert!(cap <= 9, "poset enumeration is desk-scale only");
    if k > cap {
        return Err(GenError::CapExceeded { requested: k, cap });
    }
    let levels = poset_levels(k, &|_| true);
    Ok(levels[k]
        .iter()
        .map(|p| PosetSpec {
            canon: p.canonical_key(),
            poset: p.clone(),
        })
        .collect())
}

fn downset_label(m: ElemSet) -> String {
    let points: Vec<String> = m.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", points.join(","))
}

/// The lattice of down-sets of `p`, ordered by inclusion. Bottom is the
/// empty set; the result is always distributive.
pub fn downset_lattice(p: &Poset, name: &str) -> Result<Lattice, GenError> {
    let downs = p.downsets();
    if downs.len() > MAX_ELEMENTS {
        return Err(GenError::CapExceeded {
            requested: downs.len(),
            cap: MAX_ELEMENTS,
        });
    }
    let labels: Vec<String> = downs.iter().map(|&d| downset_label(d)).collect();
    let mut pairs = Vec::new();
    for (i, a) in downs.iter().enumerate() {
        for (j, b) in downs.iter().enumerate() {
            if i != j && a.is_subset(*b) {
                pairs.push((i, j));
            }
        }
    }
    let l = Lattice::from_leq_pairs(name, labels, &pairs).expect("down-sets form a lattice");
    assert!(l.is_distributive(), "down-set lattices are distributive");
    Ok(l)
}

/// Streaming enumeration of distributive lattices with at most `max_elems`
/// elements, one per isomorphism class, ordered by size. Complete only up
/// to `POSET_POINT_CAP + 1` elements (Birkhoff duals need that many
/// join-irreducibles), hence the cap.
pub fn enumerate_distributive(max_elems: usize) -> Result<DistributiveEnum, GenError> {
    let cap = POSET_POINT_CAP + 1;
    if max_elems == 0 || max_elems > cap {
        return Err(GenError::CapExceeded {
            requested: max_elems,
            cap,
        });
    }
    let levels = poset_levels(max_elems - 1, &|_| true);
    let mut specs: Vec<(usize, usize, Vec<u64>, Poset)> = Vec::new();
    for (k, level) in levels.iter().enumerate() {
        for p in level {
            let n = p.downset_count();
            if n <= max_elems {
                specs.push((n, k, p.canonical_key(), p.clone()));
            }
        }
    }
    specs.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    Ok(DistributiveEnum {
        specs: specs.into_iter(),
        last_size: 0,
        index_in_size: 0,
    })
}

/// Iterator behind [`enumerate_distributive`]; lattices are built lazily
/// so sweeps never hold them all at once.
pub struct DistributiveEnum {
    specs: std::vec::IntoIter<(usize, usize, Vec<u64>, Poset)>,
    last_size: usize,
    index_in_size: usize,
}

impl Iterator for DistributiveEnum {
    type Item = Lattice;

    fn next(&mut self) -> Option<Lattice> {
        let (n, _, _, poset) = self.specs.next()?;
        if self.last_size == n {
            self.index_in_size += 1;
        } else {
            self.last_size = n;
            self.index_in_size = 1;
        }
        let name = format!("L{}.{}", n, self.index_in_size);
        Some(downset_lattice(&poset, &name).expect("size already filtered"))
    }
}

/// Down-set lattice of a pseudo-random poset on `k` points, deterministic
/// per seed. A sample whose down-set count exceeds the element cap is
/// redrawn (possible only at k = 7).
pub fn random_distributive(seed: u64, k: usize) -> Result<Lattice, GenError> {
    if k > POSET_POINT_CAP {
        return Err(GenError::CapExceeded {
            requested: k,
            cap: POSET_POINT_CAP,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut rels = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if rng.gen_bool(0.5) {
                    rels.push((i, j));
                }
            }
        }
        let p = Poset::from_relations(k, &rels).expect("upward edges are acyclic");
        if p.downset_count() <= MAX_ELEMENTS {
            return Ok(downset_lattice(&p, &format!("R{seed}k{k}")).expect("fits the cap"));
        }
    }
}

/// A named fixture with its precomputed classification flags. The flags
/// always equal recomputation by the corresponding predicates; the
/// projectability flags are computed on distributive entries and false on
/// the others.
pub struct CatalogEntry {
    pub name: String,
    pub lattice: Lattice,
    pub distributive: bool,
    pub decomposable: bool,
    pub strongly_projectable: bool,
    pub projectable: bool,
}

static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

/// The fixture catalog: chains C1-C6, Boolean lattices B1-B4, chain grids,
/// the kite K5, the diamond M3 and the pentagon N5.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG.get_or_init(build_catalog)
}

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}

pub fn catalog_names() -> Vec<&'static str> {
    catalog().iter().map(|e| e.name.as_str()).collect()
}

fn classify(lattice: Lattice) -> CatalogEntry {
    let distributive = lattice.is_distributive();
    let decomposable = decomp::decomposable(&lattice);
    let (strongly_projectable, projectable) = if distributive {
        (
            decomp::is_strongly_projectable(&lattice),
            decomp::is_projectable(&lattice),
        )
    } else {
        (false, false)
    };
    CatalogEntry {
        name: lattice.name().to_string(),
        lattice,
        distributive,
        decomposable,
        strongly_projectable,
        projectable,
    }
}

fn chain(n: usize) -> Lattice {
    let labels: Vec<String> = match n {
        1 => vec!["0".into()],
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => {
            let mut v = vec!["0".to_string()];
            v.extend((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()));
            v.push("1".into());
            v
        }
    };
    let covers: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Lattice::from_covers(&format!("C{n}"), labels, &covers).expect("chain is a lattice")
}

fn boolean(k: usize) -> Lattice {
    let atoms: &[&str] = match k {
        1 => &["x"],
        2 => &["x", "y"],
        3 => &["x", "y", "z"],
        _ => &["w", "x", "y", "z"],
    };
    let mut subsets: Vec<u32> = (0..1u32 << k).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let label = |s: u32| {
        if s == 0 {
            "0".to_string()
        } else if s == (1 << k) - 1 {
            "1".to_string()
        } else {
            (0..k)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| atoms[i])
                .collect::<Vec<_>>()
                .join("")
        }
    };
    let labels: Vec<String> = subsets.iter().map(|&s| label(s)).collect();
    let index = |s: u32| subsets.iter().position(|&t| t == s).expect("present");
    let mut covers = Vec::new();
    for &s in &subsets {
        for i in 0..k {
            if s >> i & 1 == 0 {
                covers.push((index(s), index(s | 1 << i)));
            }
        }
    }
    Lattice::from_covers(&format!("B{k}"), labels, &covers).expect("Boolean lattice")
}

fn grid(m: usize, n: usize) -> Lattice {
    let labels: Vec<String> = (0..m)
        .flat_map(|i| (0..n).map(move |j| format!("({i},{j})")))
        .collect();
    let idx = |i: usize, j: usize| i * n + j;
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                covers.push((idx(i, j), idx(i + 1, j)));
            }
            if j + 1 < n {
                covers.push((idx(i, j), idx(i, j + 1)));
            }
        }
    }
    Lattice::from_covers(&format!("G{m}x{n}"), labels, &covers).expect("grid is a lattice")
}

fn kite() -> Lattice {
    Lattice::from_covers(
        "K5",
        vec!["0".into(), "c".into(), "a".into(), "b".into(), "1".into()],
        &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)],
    )
    .expect("kite is a lattice")
}

fn diamond() -> Lattice {
    Lattice::from_covers(
        "M3",
        vec!["0".into(), "x".into(), "y".into(), "z".into(), "1".into()],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("diamond is a lattice")
}

fn pentagon() -> Lattice {
    Lattice::from_covers(
        "N5",
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
        &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
    )
    .expect("pentagon is a lattice")
}

fn build_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(classify(chain(n)));
    }
    for k in 1..=4 {
        out.push(classify(boolean(k)));
    }
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)] {
        out.push(classify(grid(m, n)));
    }
    out.push(classify(kite()));
    out.push(classify(diamond()));
    out.push(classify(pentagon()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::lattices_isomorphic;

    #[test]
    fn poset_class_counts_small() {
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(2).unwrap().len(), 2);
        assert_eq!(enumerate_posets(3).unwrap().len(), 5);
        assert!(matches!(
            enumerate_posets(8),
            Err(GenError::CapExceeded { .. })
        ));
    }

    #[test]
    fn downset_lattices_of_tiny_posets() {
        let b2 = catalog_entry("B2").unwrap();
        let anti = Poset::antichain(2);
        assert!(lattices_isomorphic(
            &downset_lattice(&anti, "D").unwrap(),
            &b2.lattice
        ));

        let c3 = catalog_entry("C3").unwrap();
        let two_chain = Poset::from_relations(2, &[(0, 1)]).unwrap();
        assert!(lattices_isomorphic(
            &downset_lattice(&two_chain, "D").unwrap(),
            &c3.lattice
        ));

        let k5 = catalog_entry("K5").unwrap();
        let vee = Poset::from_relations(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(lattices_isomorphic(
            &downset_lattice(&vee, "D").unwrap(),
            &k5.lattice
        ));
    }

    #[test]
    fn enumerate_distributive_smallest_sizes() {
        let sizes: Vec<usize> = enumerate_distributive(2)
            .unwrap()
            .map(|l| l.len())
            .collect();
        assert_eq!(sizes, vec![1, 2]);
        assert!(matches!(
            enumerate_distributive(0),
            Err(GenError::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_distributive(9),
            Err(GenError::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumerated_names_are_stable() {
        let names: Vec<String> = enumerate_distributive(4)
            .unwrap()
            .map(|l| l.name().to_string())
            .collect();
        assert_eq!(names, vec!["L1.1", "L2.1", "L3.1", "L4.1", "L4.2"]);
    }

    #[test]
    fn random_is_deterministic_and_distributive() {
        let a = random_distributive(1, 3).unwrap();
        let b = random_distributive(1, 3).unwrap();
        assert_eq!(a.labels(), b.labels());
        assert_eq!(a.covers(), b.covers());
        for seed in 0..20 {
            let l = random_distributive(seed, 4).unwrap();
            assert!(l.is_distributive());
        }
        assert!(matches!(
            random_distributive(0, 8),
            Err(GenError::CapExceeded { .. })
        ));
    }

    #[test]
    fn catalog_flags_match_recomputation() {
        let k5 = catalog_entry("K5").unwrap();
        assert!(k5.distributive && !k5.decomposable);
        let n5 = catalog_entry("N5").unwrap();
        assert!(!n5.distributive && !n5.decomposable);
        let b3 = catalog_entry("B3").unwrap();
        assert!(b3.decomposable && b3.strongly_projectable);
        let c3 = catalog_entry("C3").unwrap();
        assert!(c3.decomposable && !c3.strongly_projectable && c3.projectable);

        for e in catalog() {
            assert_eq!(e.distributive, e.lattice.is_distributive(), "{}", e.name);
            assert_eq!(e.decomposable, decomp::decomposable(&e.lattice), "{}", e.name);
            if e.distributive {
                assert_eq!(
                    e.strongly_projectable,
                    decomp::is_strongly_projectable(&e.lattice),
                    "{}",
                    e.name
                );
                assert_eq!(e.projectable, decomp::is_projectable(&e.lattice), "{}", e.name);
            }
        }
    }

    #[test]
    fn catalog_has_the_advertised_entries() {
        for name in [
            "C1", "C2", "C3", "C4", "C5", "C6", "B1", "B2", "B3", "B4", "G2x2", "G2x3",
            "G2x4", "G3x3", "G3x4", "G4x4", "K5", "M3", "N5",
        ] {
            assert!(catalog_entry(name).is_some(), "missing {name}");
        }
    }
}
