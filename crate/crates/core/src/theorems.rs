//! Executable checkers for the structure theory of decomposable lattices.
//!
//! Every entry in [`REGISTRY`] evaluates each side of one characterization
//! statement on a concrete lattice and reports agreement or a localized
//! counterexample. Statements whose hypotheses hold automatically on
//! finite lattices (descending chain conditions, complete distributivity
//! of the ideal lattice, atomicity of a finite poset) assert the
//! nontrivial consequence instead and carry a `degenerate` mark.
//!
//! [`search_counterexamples`] scans enumerated distributive lattices for
//! failures of a single implication direction with the decomposability
//! guard dropped, the tool for showing which hypotheses are load-bearing.

use crate::decomp;
use crate::gen;
use crate::ideals::{self, Ideal};
use crate::lattice::Lattice;
use crate::set::ElemSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheoremId(String),
    #[error("unknown implication id {0:?}")]
    UnknownImplicationId(String),
    #[error(transparent)]
    Gen(#[from] gen::GenError),
}

/// Meet-closed-subset domains blow up exponentially; checkers that
/// quantify over them refuse lattices above this size.
const SEMILATTICE_DOMAIN_CAP: usize = 16;
/// Safety valve for chain enumeration inside C3.3.
const CHAIN_ENUM_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    Fails,
    Inapplicable(String),
}

#[derive(Debug, Clone)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub description: String,
    pub ideals: Vec<String>,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub theorem_id: &'static str,
    pub lattice: String,
    pub status: VerdictStatus,
    pub degenerate: bool,
    pub conditions: Vec<Condition>,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl TheoremVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    pub fn failed(&self) -> bool {
        self.status == VerdictStatus::Fails
    }

    pub fn to_json(&self) -> serde_json::Value {
        let holds = match &self.status {
            VerdictStatus::Holds => serde_json::Value::Bool(true),
            VerdictStatus::Fails => serde_json::Value::Bool(false),
            VerdictStatus::Inapplicable(_) => serde_json::Value::Null,
        };
        let mut conditions = serde_json::Map::new();
        for c in &self.conditions {
            conditions.insert(c.label.to_string(), serde_json::Value::Bool(c.holds));
        }
        let counterexample = match &self.counterexample {
            Some(ce) => serde_json::json!({
                "description": ce.description,
                "ideals": ce.ideals,
                "elements": ce.elements,
            }),
            None => serde_json::Value::Null,
        };
        let mut obj = serde_json::json!({
            "theorem": self.theorem_id,
            "lattice": self.lattice,
            "holds": holds,
            "degenerate": self.degenerate,
            "conditions": conditions,
            "counterexample": counterexample,
        });
        if let VerdictStatus::Inapplicable(reason) = &self.status {
            obj["reason"] = serde_json::Value::String(reason.clone());
        }
        obj
    }
}

/// Shared per-lattice data every checker consumes.
struct Ctx<'a> {
    l: &'a Lattice,
    ideals_all: Vec<Ideal>,
    primes: Vec<Ideal>,
    min_primes: Vec<Ideal>,
    values: Vec<Ideal>,
    specials: Vec<Ideal>,
    polars: Vec<Ideal>,
    /// values of each element; index 0 stays empty
    val_of: Vec<Vec<Ideal>>,
    elem_polar: Vec<ElemSet>,
}

impl<'a> Ctx<'a> {
    fn new(l: &'a Lattice) -> Ctx<'a> {
        assert!(l.is_distributive(), "checkers require a distributive lattice");
        let mut val_of = vec![Vec::new(); l.len()];
        for (x, slot) in val_of.iter_mut().enumerate().skip(1) {
            *slot = ideals::values_of(l, x).expect("x > 0");
        }
        Ctx {
            l,
            ideals_all: ideals::enumerate_ideals(l),
            primes: ideals::primes(l),
            min_primes: ideals::min_primes(l),
            values: ideals::regular_ideals(l),
            specials: ideals::special_ideals(l),
            polars: ideals::polar_ideals(l),
            val_of,
            elem_polar: (0..l.len())
                .map(|e| ideals::polar_of_element(l, e).carrier())
                .collect(),
        }
    }

    fn zero_mask(&self) -> ElemSet {
        ElemSet::singleton(self.l.bottom())
    }

    fn full_mask(&self) -> ElemSet {
        self.l.full_set()
    }

    fn proper_ideals(&self) -> impl Iterator<Item = &Ideal> {
        let full = self.full_mask();
        self.ideals_all.iter().filter(move |i| i.carrier() != full)
    }

    /// Polar of an arbitrary nonempty mask.
    fn polar_mask(&self, of: ElemSet) -> ElemSet {
        of.iter()
            .fold(self.full_mask(), |acc, a| acc.inter(self.elem_polar[a]))
    }

    fn prime_mask(&self, m: ElemSet) -> bool {
        if m == self.full_mask() {
            return false;
        }
        let outside = self.full_mask().minus(m);
        outside
            .iter()
            .all(|a| outside.iter().all(|b| !m.contains(self.l.meet(a, b))))
    }

    fn mask_totally_ordered(&self, m: ElemSet) -> bool {
        m.iter()
            .all(|a| m.iter().all(|b| self.l.comparable(a, b)))
    }

    /// `S_P` as a plain mask intersection; total even if `p` fails to be
    /// prime (needed for forced runs outside the guard).
    fn s_p_mask(&self, p: &Ideal) -> ElemSet {
        self.min_primes
            .iter()
            .filter(|m| m.is_subset(p))
            .fold(self.full_mask(), |acc, m| acc.inter(m.carrier()))
    }

    fn ideal_desc(&self, i: &Ideal) -> String {
        mask_desc(self.l, i.carrier())
    }

    /// Nonempty meet-closed subsets avoiding the bottom, ascending as
    /// masks; `None` when the lattice exceeds the enumeration cap.
    fn meet_closed_nonzero(&self) -> Option<Vec<ElemSet>> {
        let n = self.l.len();
        if n > SEMILATTICE_DOMAIN_CAP {
            return None;
        }
        let mut out = Vec::new();
        // masks over elements 1..n, shifted left past the bottom bit
        for bits in 1u64..(1u64 << (n - 1)) {
            let mask = ElemSet(bits << 1);
            let closed = mask
                .iter()
                .all(|a| mask.iter().all(|b| mask.contains(self.l.meet(a, b))));
            if closed {
                out.push(mask);
            }
        }
        Some(out)
    }
}

fn mask_desc(l: &Lattice, m: ElemSet) -> String {
    if m == ElemSet::singleton(l.bottom()) {
        "{0}".to_string()
    } else if m == l.full_set() {
        "L".to_string()
    } else {
        let generator = m
            .iter()
            .find(|&g| m.is_subset(l.down_set(g)));
        match generator {
            Some(g) => format!("({}]", l.label(g)),
            None => {
                let labels: Vec<&str> = m.iter().map(|e| l.label(e)).collect();
                format!("{{{}}}", labels.join(","))
            }
        }
    }
}

/// One quantified object together with its per-condition truth vector.
struct FamilyRow {
    desc: String,
    ideals: Vec<String>,
    elements: Vec<String>,
    conds: Vec<bool>,
}

impl FamilyRow {
    fn new(desc: String, conds: Vec<bool>) -> FamilyRow {
        FamilyRow {
            desc,
            ideals: Vec::new(),
            elements: Vec::new(),
            conds,
        }
    }

    fn with_ideals(mut self, ideals: Vec<String>) -> FamilyRow {
        self.ideals = ideals;
        self
    }

    fn with_elements(mut self, elements: Vec<String>) -> FamilyRow {
        self.elements = elements;
        self
    }
}

enum CheckerOutcome {
    Ran {
        conditions: Vec<Condition>,
        holds: bool,
        counterexample: Option<Counterexample>,
        note: Option<String>,
    },
    Skipped(String),
}

fn condition_vector(labels: &[&'static str], universal: &[bool]) -> Vec<Condition> {
    labels
        .iter()
        .zip(universal)
        .map(|(label, &holds)| Condition { label, holds })
        .collect()
}

fn row_counterexample(row: &FamilyRow, labels: &[&'static str]) -> Counterexample {
    let states: Vec<String> = labels
        .iter()
        .zip(&row.conds)
        .map(|(l, c)| format!("{l}={}", if *c { "true" } else { "false" }))
        .collect();
    Counterexample {
        description: format!("at {}: {}", row.desc, states.join(", ")),
        ideals: row.ideals.clone(),
        elements: row.elements.clone(),
    }
}

/// Equivalence checkers: holds iff, for every object, all conditions carry
/// the same truth value. The reported condition table is the universal
/// truth of each condition over the whole domain.
fn equivalence_outcome(labels: &[&'static str], rows: Vec<FamilyRow>) -> CheckerOutcome {
    let mut universal = vec![true; labels.len()];
    let mut mismatch: Option<Counterexample> = None;
    for row in &rows {
        for (u, &c) in universal.iter_mut().zip(&row.conds) {
            *u &= c;
        }
        if mismatch.is_none() && row.conds.iter().any(|&c| c != row.conds[0]) {
            mismatch = Some(row_counterexample(row, labels));
        }
    }
    CheckerOutcome::Ran {
        conditions: condition_vector(labels, &universal),
        holds: mismatch.is_none(),
        counterexample: mismatch,
        note: None,
    }
}

/// Statement checkers: holds iff every condition is true for every object.
fn universal_outcome(labels: &[&'static str], rows: Vec<FamilyRow>) -> CheckerOutcome {
    let mut universal = vec![true; labels.len()];
    let mut failure: Option<Counterexample> = None;
    for row in &rows {
        for (u, &c) in universal.iter_mut().zip(&row.conds) {
            *u &= c;
        }
        if failure.is_none() && row.conds.iter().any(|&c| !c) {
            failure = Some(row_counterexample(row, labels));
        }
    }
    CheckerOutcome::Ran {
        conditions: condition_vector(labels, &universal),
        holds: failure.is_none(),
        counterexample: failure,
        note: None,
    }
}

fn ideal_set(v: &[Ideal]) -> std::collections::BTreeSet<ElemSet> {
    v.iter().map(|i| i.carrier()).collect()
}

// ---------------------------------------------------------------------
// condition families (shared between checkers and the implication search)
// ---------------------------------------------------------------------

/// Prime-ideal characterizations, per proper ideal: (1) prime; (2) meets
/// to zero land inside; (3) the complement is meet-closed; (4) ideal pairs
/// intersecting into P compare into P; (5) ideals above P form a chain.
fn t31_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let l = ctx.l;
    let n = l.len();
    ctx.proper_ideals()
        .map(|p| {
            let pm = p.carrier();
            let outside = ctx.full_mask().minus(pm);
            let c1 = ideals::is_prime(l, p);
            let c2 = (0..n).all(|x| {
                (0..n).all(|y| l.meet(x, y) != l.bottom() || pm.contains(x) || pm.contains(y))
            });
            let c3 = outside
                .iter()
                .all(|x| outside.iter().all(|y| outside.contains(l.meet(x, y))));
            let c4 = ctx.ideals_all.iter().all(|i| {
                ctx.ideals_all.iter().all(|j| {
                    !i.carrier().inter(j.carrier()).is_subset(pm)
                        || i.carrier().is_subset(pm)
                        || j.carrier().is_subset(pm)
                })
            });
            let above: Vec<&Ideal> = ctx
                .ideals_all
                .iter()
                .filter(|i| pm.is_subset(i.carrier()))
                .collect();
            let c5 = above
                .iter()
                .all(|i| above.iter().all(|j| i.comparable(j)));
            FamilyRow::new(format!("P={}", ctx.ideal_desc(p)), vec![c1, c2, c3, c4, c5])
                .with_ideals(vec![ctx.ideal_desc(p)])
        })
        .collect()
}

/// Minimal-prime characterizations, per prime.
fn t43_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let min_set = ideal_set(&ctx.min_primes);
    ctx.primes
        .iter()
        .map(|p| {
            let pm = p.carrier();
            let c1 = min_set.contains(&pm);
            let union_polars = ctx
                .full_mask()
                .minus(pm)
                .iter()
                .fold(ElemSet::EMPTY, |acc, a| acc.union(ctx.elem_polar[a]));
            let c2 = union_polars == pm;
            let c3 = pm.iter().all(|x| !ctx.elem_polar[x].is_subset(pm));
            FamilyRow::new(format!("P={}", ctx.ideal_desc(p)), vec![c1, c2, c3])
                .with_ideals(vec![ctx.ideal_desc(p)])
        })
        .collect()
}

/// Totally-ordered-ideal characterizations, per nonzero ideal.
fn t46_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let zero = ctx.zero_mask();
    let full = ctx.full_mask();
    let min_set = ideal_set(&ctx.min_primes);
    let polar_set = ideal_set(&ctx.polars);
    ctx.ideals_all
        .iter()
        .filter(|i| i.carrier() != zero)
        .map(|i| {
            let im = i.carrier();
            let ipolar = ctx.polar_mask(im);
            let idouble = ctx.polar_mask(ipolar);
            let nonzero_members = im.minus(zero);
            let c1 = ctx.mask_totally_ordered(im);
            let c2 = nonzero_members.iter().all(|a| ctx.elem_polar[a] == ipolar);
            let c3 = ctx.prime_mask(ipolar);
            let c4 = min_set.contains(&ipolar);
            let c5 = ctx.mask_totally_ordered(idouble)
                && ctx.ideals_all.iter().all(|j| {
                    let jm = j.carrier();
                    !(idouble.is_subset(jm) && jm != idouble) || !ctx.mask_totally_ordered(jm)
                });
            // "minimal polar" / "maximal polar" read among nonzero
            // respectively proper polars; {0} and L are polar in every
            // lattice and would make the bounds trivial otherwise
            let c6 = idouble != zero
                && polar_set
                    .iter()
                    .all(|&d| d == zero || !(d.is_subset(idouble) && d != idouble));
            let c7 = ipolar != full
                && polar_set
                    .iter()
                    .all(|&d| d == full || !(ipolar.is_subset(d) && d != ipolar));
            let c8 = nonzero_members.iter().all(|a| ctx.val_of[a].len() == 1);
            FamilyRow::new(
                format!("I={}", ctx.ideal_desc(i)),
                vec![c1, c2, c3, c4, c5, c6, c7, c8],
            )
            .with_ideals(vec![ctx.ideal_desc(i)])
        })
        .collect()
}

/// Special-ideal characterizations, per proper ideal. The family form of
/// condition (2) is evaluated on ideal pairs only: a finite intersection
/// collapses to iterated binary intersections, so the pair form is
/// equivalent on finite lattices.
fn t51_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let l = ctx.l;
    let special_set = ideal_set(&ctx.specials);
    ctx.proper_ideals()
        .map(|m| {
            let mm = m.carrier();
            let c1 = special_set.contains(&mm);
            let c2 = ctx.ideals_all.iter().all(|i| {
                ctx.ideals_all.iter().all(|j| {
                    !i.carrier().inter(j.carrier()).is_subset(mm)
                        || i.carrier().is_subset(mm)
                        || j.carrier().is_subset(mm)
                })
            });
            let star = ideals::m_star(l, m).expect("proper ideal");
            let c3 = mm != star.carrier()
                && star
                    .carrier()
                    .minus(mm)
                    .iter()
                    .any(|x| ctx.val_of[x] == vec![*m]);
            FamilyRow::new(format!("M={}", ctx.ideal_desc(m)), vec![c1, c2, c3])
                .with_ideals(vec![ctx.ideal_desc(m)])
        })
        .collect()
}

/// Characterizations of primes comparable with everything, per proper
/// ideal K. "x > K" is read pointwise: x dominates every member of K.
fn t55_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let l = ctx.l;
    let zero = ctx.zero_mask();
    let full = ctx.full_mask();
    ctx.proper_ideals()
        .map(|k| {
            let km = k.carrier();
            let outside = full.minus(km);
            let prime = ideals::is_prime(l, k);
            let c1 = prime && outside.iter().all(|x| km.iter().all(|e| l.leq(e, x)));
            let c2 = prime
                && ctx.ideals_all.iter().all(|i| {
                    km.is_subset(i.carrier()) || i.carrier().is_subset(km)
                });
            let c3 = ctx
                .polars
                .iter()
                .all(|p| p.carrier() == full || p.carrier().is_subset(km));
            let c4 = ctx.min_primes.iter().all(|m| m.carrier().is_subset(km));
            let c5 = outside.iter().all(|a| ctx.elem_polar[a] == zero);
            let c6 = outside.iter().all(|a| ctx.val_of[a].len() == 1);
            FamilyRow::new(
                format!("K={}", ctx.ideal_desc(k)),
                vec![c1, c2, c3, c4, c5, c6],
            )
            .with_ideals(vec![ctx.ideal_desc(k)])
        })
        .collect()
}

/// Ultrafilter characterizations, per nonempty meet-closed subset avoiding
/// the bottom. `None` when the subset domain exceeds the enumeration cap.
fn l41_family(ctx: &Ctx) -> Option<Vec<FamilyRow>> {
    let l = ctx.l;
    let ultra: std::collections::BTreeSet<ElemSet> = ideals::ultrafilters(l)
        .iter()
        .map(|f| f.carrier())
        .collect();
    let min_set = ideal_set(&ctx.min_primes);
    Some(
        ctx.meet_closed_nonzero()?
            .into_iter()
            .map(|u| {
                let c1 = ultra.contains(&u);
                let c2 = ctx
                    .full_mask()
                    .minus(u)
                    .iter()
                    .all(|x| u.iter().any(|f| l.meet(x, f) == l.bottom()));
                let c3 = min_set.contains(&ctx.full_mask().minus(u));
                let labels: Vec<String> =
                    u.iter().map(|e| l.label(e).to_string()).collect();
                FamilyRow::new(format!("U={{{}}}", labels.join(",")), vec![c1, c2, c3])
                    .with_elements(labels)
            })
            .collect(),
    )
}

/// Disjointness vs. value-set splitting, per pair of nonzero elements.
fn l45_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let l = ctx.l;
    let mut rows = Vec::new();
    for a in 1..l.len() {
        for b in a..l.len() {
            let c1 = l.meet(a, b) == l.bottom();
            let va = ideal_set(&ctx.val_of[a]);
            let vb = ideal_set(&ctx.val_of[b]);
            let vjoin = ideal_set(&ctx.val_of[l.join(a, b)]);
            let c2 = va.intersection(&vb).count() == 0
                && va.union(&vb).copied().collect::<std::collections::BTreeSet<_>>() == vjoin;
            rows.push(
                FamilyRow::new(
                    format!("a={}, b={}", l.label(a), l.label(b)),
                    vec![c1, c2],
                )
                .with_elements(vec![l.label(a).to_string(), l.label(b).to_string()]),
            );
        }
    }
    rows
}

/// `S_{P1} ⊆ P2` iff `P1, P2` comparable, per ordered prime pair.
fn l52_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let mut rows = Vec::new();
    for p1 in &ctx.primes {
        for p2 in &ctx.primes {
            let c1 = ctx.s_p_mask(p1).is_subset(p2.carrier());
            let c2 = p1.comparable(p2);
            rows.push(
                FamilyRow::new(
                    format!("P1={}, P2={}", ctx.ideal_desc(p1), ctx.ideal_desc(p2)),
                    vec![c1, c2],
                )
                .with_ideals(vec![ctx.ideal_desc(p1), ctx.ideal_desc(p2)]),
            );
        }
    }
    rows
}

/// Unique-value-over-I vs. `S_P ⊆ I ⊆ P`, per (element, ideal) pair. The
/// value `P` in condition (2) is quantified existentially.
fn t54_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let l = ctx.l;
    let mut rows = Vec::new();
    for g in 1..l.len() {
        for i in &ctx.ideals_all {
            let im = i.carrier();
            let containing: Vec<&Ideal> = ctx.val_of[g]
                .iter()
                .filter(|q| im.is_subset(q.carrier()))
                .collect();
            let c1 = containing.len() == 1
                && ctx
                    .full_mask()
                    .minus(im)
                    .iter()
                    .all(|x| !im.contains(l.meet(x, g)));
            let c2 = ctx.val_of[g]
                .iter()
                .any(|p| ctx.s_p_mask(p).is_subset(im) && im.is_subset(p.carrier()));
            rows.push(
                FamilyRow::new(
                    format!("g={}, I={}", l.label(g), ctx.ideal_desc(i)),
                    vec![c1, c2],
                )
                .with_elements(vec![l.label(g).to_string()])
                .with_ideals(vec![ctx.ideal_desc(i)]),
            );
        }
    }
    rows
}

/// Minimal primes vs. intersections of maximal chains of values, per
/// ideal. Chain maximality is taken inside the value poset.
fn l49_family(ctx: &Ctx) -> Vec<FamilyRow> {
    let intersections = value_chain_intersections(ctx, ChainScope::Values);
    let min_set = ideal_set(&ctx.min_primes);
    ctx.ideals_all
        .iter()
        .map(|m| {
            let c1 = min_set.contains(&m.carrier());
            let c2 = intersections.contains(&m.carrier());
            FamilyRow::new(format!("M={}", ctx.ideal_desc(m)), vec![c1, c2])
                .with_ideals(vec![ctx.ideal_desc(m)])
        })
        .collect()
}

/// Which ideals count as "maximal chains of V(L)": chains unextendable by
/// further values (the default), or chains of values unextendable by any
/// ideal at all (the rejected alternative reading, exposed so tests can
/// demonstrate it fails).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainScope {
    Values,
    AllIdeals,
}

fn value_chain_intersections(
    ctx: &Ctx,
    scope: ChainScope,
) -> std::collections::BTreeSet<ElemSet> {
    let values = &ctx.values;
    let mut out = std::collections::BTreeSet::new();
    // maximal chains of the finite value poset: saturated cover paths from
    // a minimal value to a maximal value
    let is_minimal = |i: usize| {
        values
            .iter()
            .enumerate()
            .all(|(j, v)| j == i || !(v.is_subset(&values[i]) && *v != values[i]))
    };
    let covers_in_values = |i: usize| -> Vec<usize> {
        // j covers i in the value poset
        (0..values.len())
            .filter(|&j| {
                j != i && values[i].is_subset(&values[j]) && {
                    (0..values.len()).all(|k| {
                        k == i
                            || k == j
                            || !(values[i].is_subset(&values[k])
                                && values[k].is_subset(&values[j])
                                && values[k] != values[i]
                                && values[k] != values[j])
                    })
                }
            })
            .collect()
    };
    let mut stack: Vec<(usize, Vec<usize>)> = (0..values.len())
        .filter(|&i| is_minimal(i))
        .map(|i| (i, vec![i]))
        .collect();
    while let Some((top, chain)) = stack.pop() {
        let next = covers_in_values(top);
        if next.is_empty() {
            let chain_ideals: Vec<&Ideal> = chain.iter().map(|&i| &values[i]).collect();
            let keep = match scope {
                ChainScope::Values => true,
                ChainScope::AllIdeals => ctx.ideals_all.iter().all(|i| {
                    chain_ideals.iter().any(|c| c.carrier() == i.carrier())
                        || !chain_ideals.iter().all(|c| {
                            c.carrier().is_subset(i.carrier())
                                || i.carrier().is_subset(c.carrier())
                        })
                }),
            };
            if keep {
                let inter = chain_ideals
                    .iter()
                    .fold(ctx.full_mask(), |acc, c| acc.inter(c.carrier()));
                out.insert(inter);
            }
        } else {
            for j in next {
                let mut c = chain.clone();
                c.push(j);
                stack.push((j, c));
            }
        }
    }
    out
}

/// Does the minimal-prime/value-chain correspondence hold on `l` under the
/// given reading of chain maximality?
pub fn minimal_primes_match_value_chains(l: &Lattice, scope: ChainScope) -> bool {
    let ctx = Ctx::new(l);
    let intersections = value_chain_intersections(&ctx, scope);
    let min_set = ideal_set(&ctx.min_primes);
    ctx.ideals_all.iter().all(|m| {
        min_set.contains(&m.carrier()) == intersections.contains(&m.carrier())
    })
}

// ---------------------------------------------------------------------
// checkers
// ---------------------------------------------------------------------

fn check_e22(ctx: &Ctx) -> CheckerOutcome {
    let sp = decomp::is_strongly_projectable(ctx.l);
    let dec = decomp::decomposable(ctx.l);
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "strongly projectable", holds: sp },
            Condition { label: "decomposable", holds: dec },
        ],
        holds: !sp || dec,
        counterexample: (sp && !dec).then(|| Counterexample {
            description: "strongly projectable lattice that is not decomposable".into(),
            ideals: vec![],
            elements: vec![],
        }),
        note: None,
    }
}

fn check_t31(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(&["(1)", "(2)", "(3)", "(4)", "(5)"], t31_family(ctx))
}

fn check_c32(ctx: &Ctx) -> CheckerOutcome {
    let zero = ctx.zero_mask();
    let prime_set = ideal_set(&ctx.primes);
    let c1 = ctx.values.iter().all(|v| prime_set.contains(&v.carrier()));
    let inter = |family: &[Ideal]| {
        family
            .iter()
            .fold(ctx.full_mask(), |acc, i| acc.inter(i.carrier()))
    };
    let c2 = inter(&ctx.values) == zero && inter(&ctx.primes) == zero;
    let mut witness = None;
    let c3 = ctx.ideals_all.iter().all(|i| {
        let im = i.carrier();
        let from_values = ctx
            .values
            .iter()
            .filter(|v| im.is_subset(v.carrier()))
            .fold(ctx.full_mask(), |acc, v| acc.inter(v.carrier()));
        let from_primes = ctx
            .primes
            .iter()
            .filter(|p| im.is_subset(p.carrier()))
            .fold(ctx.full_mask(), |acc, p| acc.inter(p.carrier()));
        let ok = from_values == im && from_primes == im;
        if !ok && witness.is_none() {
            witness = Some(Counterexample {
                description: format!(
                    "I={} is not the intersection of the values/primes above it",
                    ctx.ideal_desc(i)
                ),
                ideals: vec![ctx.ideal_desc(i)],
                elements: vec![],
            });
        }
        ok
    });
    if witness.is_none() && !(c1 && c2) {
        witness = Some(Counterexample {
            description: if !c1 {
                "some value is not prime".into()
            } else {
                "the values/primes do not intersect to the zero ideal".into()
            },
            ideals: vec![],
            elements: vec![],
        });
    }
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) V(L) within Spe(L)", holds: c1 },
            Condition { label: "(2) intersections are zero", holds: c2 },
            Condition { label: "(3) ideals are value intersections", holds: c3 },
        ],
        holds: c1 && c2 && c3,
        counterexample: if c1 && c2 && c3 { None } else { witness },
        note: None,
    }
}

fn check_c33(ctx: &Ctx) -> CheckerOutcome {
    let l = ctx.l;
    // (1): enumerate chains of primes depth-first; intersection must be
    // prime. Above the cap fall back to the finite reduction: a finite
    // chain contains its least member, which the intersection equals.
    let mut note = None;
    let mut c1_witness = None;
    let mut chains_seen = 0usize;
    let mut c1 = true;
    let mut stack: Vec<Vec<usize>> = (0..ctx.primes.len()).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        chains_seen += 1;
        if chains_seen > CHAIN_ENUM_CAP {
            note = Some(
                "chain domain exceeded the enumeration cap; remaining chains verified \
                 by the least-member reduction"
                    .to_string(),
            );
            break;
        }
        let inter = chain
            .iter()
            .fold(ctx.full_mask(), |acc, &i| acc.inter(ctx.primes[i].carrier()));
        if !ctx.prime_mask(inter) {
            c1 = false;
            c1_witness = Some(Counterexample {
                description: format!(
                    "chain {} intersects to the non-prime {}",
                    chain
                        .iter()
                        .map(|&i| ctx.ideal_desc(&ctx.primes[i]))
                        .collect::<Vec<_>>()
                        .join(" ⊇ "),
                    mask_desc(l, inter)
                ),
                ideals: chain.iter().map(|&i| ctx.ideal_desc(&ctx.primes[i])).collect(),
                elements: vec![],
            });
            break;
        }
        let last = *chain.last().expect("nonempty");
        for next in last + 1..ctx.primes.len() {
            if chain
                .iter()
                .all(|&i| ctx.primes[i].comparable(&ctx.primes[next]))
            {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
    }

    // (2): ideals above a prime form a chain
    let mut c2_witness = None;
    let c2 = ctx.primes.iter().all(|p| {
        let above: Vec<&Ideal> = ctx
            .ideals_all
            .iter()
            .filter(|i| p.carrier().is_subset(i.carrier()))
            .collect();
        let ok = above.iter().all(|i| above.iter().all(|j| i.comparable(j)));
        if !ok && c2_witness.is_none() {
            c2_witness = Some(Counterexample {
                description: format!(
                    "ideals above P={} are not totally ordered",
                    ctx.ideal_desc(p)
                ),
                ideals: vec![ctx.ideal_desc(p)],
                elements: vec![],
            });
        }
        ok
    });

    // (3): totally ordered iff the zero ideal is prime. In the one-element
    // lattice the zero ideal is the whole lattice and thereby improper;
    // the biconditional is recorded vacuously there.
    let c3 = if l.len() == 1 {
        true
    } else {
        l.is_totally_ordered() == ideals::is_prime(l, &Ideal::zero(l))
    };
    if l.len() == 1 && note.is_none() {
        note = Some("one-element lattice: zero ideal is improper, (3) vacuous".into());
    }
    let c3_witness = (!c3).then(|| Counterexample {
        description: format!(
            "totally ordered: {}, zero ideal prime: {}",
            l.is_totally_ordered(),
            ideals::is_prime(l, &Ideal::zero(l))
        ),
        ideals: vec!["{0}".into()],
        elements: vec![],
    });

    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) chain intersections prime", holds: c1 },
            Condition { label: "(2) ideals above a prime form a chain", holds: c2 },
            Condition { label: "(3) totally ordered iff zero prime", holds: c3 },
        ],
        holds: c1 && c2 && c3,
        counterexample: c1_witness.or(c2_witness).or(c3_witness),
        note,
    }
}

fn check_c34(ctx: &Ctx) -> CheckerOutcome {
    let full = Ideal::full(ctx.l);
    let join_is_full = |a: &Ideal, b: &Ideal| ideals::ideal_join(ctx.l, a, b) == full;
    let pairwise = |family: &[Ideal]| {
        family.iter().enumerate().all(|(i, a)| {
            family[i + 1..]
                .iter()
                .all(|b| a.comparable(b) || join_is_full(a, b))
        })
    };
    let c1 = ctx.primes.iter().all(|p| {
        ctx.min_primes
            .iter()
            .filter(|m| m.is_subset(p))
            .count()
            == 1
    });
    let c2 = pairwise(&ctx.min_primes);
    let c3 = pairwise(&ctx.primes);
    let c4 = pairwise(&ctx.values);
    let conds = [c1, c2, c3, c4];
    let holds = conds.iter().all(|&c| c == c1);
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) unique minimal prime below each prime", holds: c1 },
            Condition { label: "(2) incomparable minimal primes join to L", holds: c2 },
            Condition { label: "(3) incomparable primes join to L", holds: c3 },
            Condition { label: "(4) incomparable values join to L", holds: c4 },
        ],
        holds,
        counterexample: (!holds).then(|| Counterexample {
            description: format!(
                "normality conditions disagree: (1)={c1}, (2)={c2}, (3)={c3}, (4)={c4}"
            ),
            ideals: vec![],
            elements: vec![],
        }),
        note: None,
    }
}

fn check_t35(ctx: &Ctx) -> CheckerOutcome {
    let eq = ideal_set(&ctx.primes) == ideal_set(&ctx.values);
    let diff_desc = || {
        let ps = ideal_set(&ctx.primes);
        let vs = ideal_set(&ctx.values);
        let d = ps.symmetric_difference(&vs).next().copied();
        d.map(|m| mask_desc(ctx.l, m)).unwrap_or_default()
    };
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) Spe(L) = V(L)", holds: eq },
            Condition { label: "(2) V(L) satisfies DCC", holds: true },
            Condition { label: "(3) Spe(L) satisfies DCC", holds: true },
        ],
        holds: eq,
        counterexample: (!eq).then(|| Counterexample {
            description: format!("{} separates Spe(L) from V(L)", diff_desc()),
            ideals: vec![diff_desc()],
            elements: vec![],
        }),
        note: Some(
            "descending chain conditions hold automatically on a finite lattice; \
             the checker asserts the consequence Spe(L) = V(L)"
                .into(),
        ),
    }
}

fn check_l41(ctx: &Ctx) -> CheckerOutcome {
    let Some(rows) = l41_family(ctx) else {
        return CheckerOutcome::Skipped(format!(
            "meet-closed subset domain needs n <= {SEMILATTICE_DOMAIN_CAP}"
        ));
    };
    let labels: &[&'static str] = &["(1)", "(2)", "(3)"];
    let base = equivalence_outcome(labels, rows);
    // complement map must be a bijection between ultrafilters and MinSpe
    let complements: std::collections::BTreeSet<ElemSet> = ideals::ultrafilters(ctx.l)
        .iter()
        .map(|u| ctx.full_mask().minus(u.carrier()))
        .collect();
    let bijection = complements == ideal_set(&ctx.min_primes);
    match base {
        CheckerOutcome::Ran { mut conditions, holds, counterexample, note } => {
            conditions.push(Condition {
                label: "complement bijection onto MinSpe",
                holds: bijection,
            });
            let ce = counterexample.or_else(|| {
                (!bijection).then(|| Counterexample {
                    description: "ultrafilter complements do not match MinSpe(L)".into(),
                    ideals: vec![],
                    elements: vec![],
                })
            });
            CheckerOutcome::Ran {
                conditions,
                holds: holds && bijection,
                counterexample: ce,
                note,
            }
        }
        skipped => skipped,
    }
}

fn check_l42(ctx: &Ctx) -> CheckerOutcome {
    let l = ctx.l;
    let Some(subsets) = ctx.meet_closed_nonzero() else {
        return CheckerOutcome::Skipped(format!(
            "meet-closed subset domain needs n <= {SEMILATTICE_DOMAIN_CAP}"
        ));
    };
    let mut rows: Vec<FamilyRow> = subsets
        .into_iter()
        .map(|x| {
            let union_polars = x
                .iter()
                .fold(ElemSet::EMPTY, |acc, a| acc.union(ctx.elem_polar[a]));
            let inter_primes = ctx
                .primes
                .iter()
                .filter(|p| p.carrier().inter(x).is_empty())
                .fold(ctx.full_mask(), |acc, p| acc.inter(p.carrier()));
            let inter_min = ctx
                .min_primes
                .iter()
                .filter(|m| m.carrier().inter(x).is_empty())
                .fold(ctx.full_mask(), |acc, m| acc.inter(m.carrier()));
            let labels: Vec<String> = x.iter().map(|e| l.label(e).to_string()).collect();
            FamilyRow::new(
                format!("X={{{}}}", labels.join(",")),
                vec![union_polars == inter_primes, union_polars == inter_min],
            )
            .with_elements(labels)
        })
        .collect();
    // the prime-complement instance: ⋃{a⊥ : a ∉ P} = ⋂{M ∈ MinSpe : M ⊆ P}
    for p in &ctx.primes {
        let union_polars = ctx
            .full_mask()
            .minus(p.carrier())
            .iter()
            .fold(ElemSet::EMPTY, |acc, a| acc.union(ctx.elem_polar[a]));
        let ok = union_polars == ctx.s_p_mask(p);
        rows.push(
            FamilyRow::new(format!("complement of P={}", ctx.ideal_desc(p)), vec![ok, ok])
                .with_ideals(vec![ctx.ideal_desc(p)]),
        );
    }
    universal_outcome(
        &["polar union = prime intersection", "polar union = minimal prime intersection"],
        rows,
    )
}

fn check_t43(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(&["(1)", "(2)", "(3)"], t43_family(ctx))
}

fn check_l44(ctx: &Ctx) -> CheckerOutcome {
    let zero = ctx.zero_mask();
    let rows = ctx
        .ideals_all
        .iter()
        .filter(|a| a.carrier() != zero)
        .map(|a| {
            let am = a.carrier();
            let polar = ctx.polar_mask(am);
            let from_primes = ctx
                .primes
                .iter()
                .filter(|m| !am.is_subset(m.carrier()))
                .fold(ctx.full_mask(), |acc, m| acc.inter(m.carrier()));
            let from_min = ctx
                .min_primes
                .iter()
                .filter(|m| !am.is_subset(m.carrier()))
                .fold(ctx.full_mask(), |acc, m| acc.inter(m.carrier()));
            FamilyRow::new(
                format!("A={}", ctx.ideal_desc(a)),
                vec![polar == from_primes, polar == from_min],
            )
            .with_ideals(vec![ctx.ideal_desc(a)])
        })
        .collect();
    universal_outcome(
        &["A⊥ = ⋂ primes omitting A", "A⊥ = ⋂ minimal primes omitting A"],
        rows,
    )
}

fn check_l45(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(&["(1) disjoint", "(2) values split"], l45_family(ctx))
}

fn check_t46(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(
        &["(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)"],
        t46_family(ctx),
    )
}

fn check_t47(ctx: &Ctx) -> CheckerOutcome {
    let full_ideal = Ideal::full(ctx.l);
    let hyp = ctx.polars.iter().enumerate().all(|(i, p)| {
        ctx.polars[i..].iter().all(|q| {
            p.comparable(q) || ideals::ideal_join(ctx.l, p, q) == full_ideal
        })
    });
    let zero = ctx.zero_mask();
    let full = ctx.full_mask();
    let min_set = ideal_set(&ctx.min_primes);
    let mut offender = None;
    let concl = ctx.polars.iter().all(|p| {
        let pm = p.carrier();
        let ok = pm == zero || pm == full || min_set.contains(&pm);
        if !ok && offender.is_none() {
            offender = Some(ctx.ideal_desc(p));
        }
        ok
    });
    let holds = !hyp || concl;
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "hypothesis: polar pairs comparable or join to L", holds: hyp },
            Condition { label: "conclusion: nonzero proper polars are minimal prime", holds: concl },
        ],
        holds,
        counterexample: (!holds).then(|| Counterexample {
            description: format!(
                "polar {} is not minimal prime although the polar hypothesis holds",
                offender.clone().unwrap_or_default()
            ),
            ideals: offender.into_iter().collect(),
            elements: vec![],
        }),
        note: Some("the zero ideal and L are polar in every lattice; the conclusion reads over the remaining polars".into()),
    }
}

fn check_t48(ctx: &Ctx) -> CheckerOutcome {
    let c1 = ideal_set(&ctx.primes) == ideal_set(&ctx.min_primes);
    let c2 = decomp::is_strongly_projectable(ctx.l);
    let c3 = decomp::is_projectable(ctx.l)
        && (0..ctx.l.len()).all(|x| {
            ctx.polar_mask(ctx.elem_polar[x]) == ctx.l.down_set(x)
        });
    let holds = c1 == c2 && c2 == c3;
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) Spe(L) = MinSpe(L)", holds: c1 },
            Condition { label: "(2) strongly projectable", holds: c2 },
            Condition { label: "(3) projectable with (x] = x⊥⊥", holds: c3 },
        ],
        holds,
        counterexample: (!holds).then(|| Counterexample {
            description: format!("conditions disagree: (1)={c1}, (2)={c2}, (3)={c3}"),
            ideals: vec![],
            elements: vec![],
        }),
        note: None,
    }
}

fn check_l49(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(
        &["(1) minimal prime", "(2) intersection of a maximal value chain"],
        l49_family(ctx),
    )
}

fn check_t410(ctx: &Ctx) -> CheckerOutcome {
    let value_set = ideal_set(&ctx.values);
    let c1 = ctx
        .min_primes
        .iter()
        .all(|m| value_set.contains(&m.carrier()));
    let minimal_values: Vec<&Ideal> = ctx
        .values
        .iter()
        .filter(|v| {
            !ctx.values
                .iter()
                .any(|w| w.is_subset(v) && w.carrier() != v.carrier())
        })
        .collect();
    let c2 = ctx
        .values
        .iter()
        .all(|v| minimal_values.iter().any(|m| m.is_subset(v)));
    let holds = c1 == c2;
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) MinSpe(L) within V(L)", holds: c1 },
            Condition { label: "(2) V(L) atomic", holds: c2 },
        ],
        holds,
        counterexample: (!holds).then(|| Counterexample {
            description: format!("conditions disagree: (1)={c1}, (2)={c2}"),
            ideals: vec![],
            elements: vec![],
        }),
        note: Some(
            "every prime contains finitely many minimal primes and V(L) is atomic \
             by finiteness; the equivalence reduces to (1)"
                .into(),
        ),
    }
}

fn check_t51(ctx: &Ctx) -> CheckerOutcome {
    match equivalence_outcome(&["(1)", "(2)", "(3)"], t51_family(ctx)) {
        CheckerOutcome::Ran { conditions, holds, counterexample, .. } => CheckerOutcome::Ran {
            conditions,
            holds,
            counterexample,
            note: Some(
                "family condition (2) evaluated on ideal pairs; finite intersections \
                 reduce to iterated binary ones"
                    .into(),
            ),
        },
        skipped => skipped,
    }
}

fn check_l52(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(&["(1) S_P1 within P2", "(2) comparable"], l52_family(ctx))
}

fn check_l53(ctx: &Ctx) -> CheckerOutcome {
    let l = ctx.l;
    let rows = ctx
        .primes
        .iter()
        .map(|p| {
            let direct: ElemSet = (0..l.len())
                .filter(|&a| {
                    a == l.bottom()
                        || ctx
                            .primes
                            .iter()
                            .all(|q| q.contains(a) || !q.comparable(p))
                })
                .collect();
            FamilyRow::new(
                format!("P={}", ctx.ideal_desc(p)),
                vec![ctx.s_p_mask(p) == direct],
            )
            .with_ideals(vec![ctx.ideal_desc(p)])
        })
        .collect();
    universal_outcome(&["S_P = elements avoiding primes comparable with P"], rows)
}

fn check_t54(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(
        &["(1) unique value over I, meets stay outside", "(2) S_P within I within P"],
        t54_family(ctx),
    )
}

fn check_t55(ctx: &Ctx) -> CheckerOutcome {
    equivalence_outcome(
        &["(1)", "(2)", "(3)", "(4)", "(5)", "(6)"],
        t55_family(ctx),
    )
}

fn check_t56(ctx: &Ctx) -> CheckerOutcome {
    let eq = ideal_set(&ctx.values) == ideal_set(&ctx.specials);
    let diff = ideal_set(&ctx.values)
        .symmetric_difference(&ideal_set(&ctx.specials))
        .next()
        .copied()
        .map(|m| mask_desc(ctx.l, m));
    CheckerOutcome::Ran {
        conditions: vec![
            Condition { label: "(1) V(L) = S(L)", holds: eq },
            Condition { label: "(2) Ide(L) completely distributive", holds: true },
            Condition { label: "(3) Ide(L) α-distributive", holds: true },
        ],
        holds: eq,
        counterexample: (!eq).then(|| Counterexample {
            description: format!(
                "{} separates V(L) from S(L)",
                diff.clone().unwrap_or_default()
            ),
            ideals: diff.into_iter().collect(),
            elements: vec![],
        }),
        note: Some(
            "the ideal lattice of a finite lattice is completely distributive; \
             the checker asserts the consequence V(L) = S(L)"
                .into(),
        ),
    }
}

fn check_t59(ctx: &Ctx) -> CheckerOutcome {
    let l = ctx.l;
    let mut rows = Vec::new();
    for a in 1..l.len() {
        let ok = match decomp::decompose_special(l, a) {
            Ok(d) => {
                let joined = d.parts.iter().fold(l.bottom(), |acc, &p| l.join(acc, p));
                let disjoint = d.parts.iter().enumerate().all(|(i, &p)| {
                    d.parts[i + 1..].iter().all(|&q| l.meet(p, q) == l.bottom())
                });
                let special = d.value_map.iter().all(|(part, q)| {
                    ideals::values_of(l, *part).expect("parts nonzero") == vec![*q]
                });
                let distinct = d.parts.len() == ctx.val_of[a].len();
                joined == a && disjoint && special && distinct
            }
            Err(_) => false,
        };
        rows.push(
            FamilyRow::new(format!("a={}", l.label(a)), vec![true, ok])
                .with_elements(vec![l.label(a).to_string()]),
        );
    }
    match equivalence_outcome(
        &["(1) finitely many values", "(2) disjoint special decomposition"],
        rows,
    ) {
        CheckerOutcome::Ran { conditions, holds, counterexample, .. } => CheckerOutcome::Ran {
            conditions,
            holds,
            counterexample,
            note: Some("(1) holds by finiteness; (2) is rebuilt and verified per element".into()),
        },
        skipped => skipped,
    }
}

// ---------------------------------------------------------------------
// registry and entry points
// ---------------------------------------------------------------------

type CheckerFn = fn(&Ctx) -> CheckerOutcome;

pub struct CheckerEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub requires_decomposable: bool,
    pub degenerate_on_finite: bool,
    run: CheckerFn,
}

pub static REGISTRY: &[CheckerEntry] = &[
    CheckerEntry {
        id: "E2.2",
        title: "strongly projectable implies decomposable",
        requires_decomposable: false,
        degenerate_on_finite: false,
        run: check_e22,
    },
    CheckerEntry {
        id: "T3.1",
        title: "five characterizations of prime ideals",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t31,
    },
    CheckerEntry {
        id: "C3.2",
        title: "values are prime and separate ideals",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_c32,
    },
    CheckerEntry {
        id: "C3.3",
        title: "chains of primes and the totally ordered case",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_c33,
    },
    CheckerEntry {
        id: "C3.4",
        title: "normality equivalences",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_c34,
    },
    CheckerEntry {
        id: "T3.5",
        title: "Spe(L) = V(L) under DCC",
        requires_decomposable: true,
        degenerate_on_finite: true,
        run: check_t35,
    },
    CheckerEntry {
        id: "L4.1",
        title: "ultrafilters are minimal prime complements",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l41,
    },
    CheckerEntry {
        id: "L4.2",
        title: "polar unions meet prime intersections",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l42,
    },
    CheckerEntry {
        id: "T4.3",
        title: "three characterizations of minimal primes",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t43,
    },
    CheckerEntry {
        id: "L4.4",
        title: "polars of nonzero ideals as prime intersections",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l44,
    },
    CheckerEntry {
        id: "L4.5",
        title: "disjointness splits value sets",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l45,
    },
    CheckerEntry {
        id: "T4.6",
        title: "eight characterizations of totally ordered ideals",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t46,
    },
    CheckerEntry {
        id: "T4.7",
        title: "comparable-or-cofull polars are minimal prime",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t47,
    },
    CheckerEntry {
        id: "T4.8",
        title: "all primes minimal iff strongly projectable",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t48,
    },
    CheckerEntry {
        id: "L4.9",
        title: "minimal primes as maximal value-chain intersections",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l49,
    },
    CheckerEntry {
        id: "T4.10",
        title: "minimal primes regular iff V(L) atomic",
        requires_decomposable: true,
        degenerate_on_finite: true,
        run: check_t410,
    },
    CheckerEntry {
        id: "T5.1",
        title: "three characterizations of special ideals",
        requires_decomposable: false,
        degenerate_on_finite: false,
        run: check_t51,
    },
    CheckerEntry {
        id: "L5.2",
        title: "S_P containment detects comparability",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l52,
    },
    CheckerEntry {
        id: "L5.3",
        title: "S_P as elements avoiding comparable primes",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_l53,
    },
    CheckerEntry {
        id: "T5.4",
        title: "unique values over an ideal via S_P",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t54,
    },
    CheckerEntry {
        id: "T5.5",
        title: "six characterizations of dominating primes",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t55,
    },
    CheckerEntry {
        id: "T5.6",
        title: "V(L) = S(L) under complete distributivity",
        requires_decomposable: true,
        degenerate_on_finite: true,
        run: check_t56,
    },
    CheckerEntry {
        id: "T5.9",
        title: "elements split into disjoint special parts",
        requires_decomposable: true,
        degenerate_on_finite: false,
        run: check_t59,
    },
];

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}

fn entry(id: &str) -> Option<&'static CheckerEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

fn run_entry(l: &Lattice, e: &'static CheckerEntry, force: bool) -> TheoremVerdict {
    if !l.is_distributive() {
        return TheoremVerdict {
            theorem_id: e.id,
            lattice: l.name().to_string(),
            status: VerdictStatus::Inapplicable("lattice is not distributive".into()),
            degenerate: false,
            conditions: vec![],
            counterexample: None,
            note: None,
        };
    }
    if e.requires_decomposable && !force && !decomp::decomposable(l) {
        return TheoremVerdict {
            theorem_id: e.id,
            lattice: l.name().to_string(),
            status: VerdictStatus::Inapplicable("lattice is not decomposable".into()),
            degenerate: false,
            conditions: vec![],
            counterexample: None,
            note: None,
        };
    }
    let ctx = Ctx::new(l);
    match (e.run)(&ctx) {
        CheckerOutcome::Ran { conditions, holds, counterexample, note } => TheoremVerdict {
            theorem_id: e.id,
            lattice: l.name().to_string(),
            status: if holds {
                VerdictStatus::Holds
            } else {
                VerdictStatus::Fails
            },
            degenerate: e.degenerate_on_finite,
            conditions,
            counterexample,
            note,
        },
        CheckerOutcome::Skipped(reason) => TheoremVerdict {
            theorem_id: e.id,
            lattice: l.name().to_string(),
            status: VerdictStatus::Inapplicable(reason),
            degenerate: e.degenerate_on_finite,
            conditions: vec![],
            counterexample: None,
            note: None,
        },
    }
}

/// Evaluate one registry entry on `l`. Entries whose statements assume
/// decomposability are skipped (not failed) on other lattices unless
/// `force` is set.
pub fn check_with(l: &Lattice, id: &str, force: bool) -> Result<TheoremVerdict, TheoremError> {
    let e = entry(id).ok_or_else(|| TheoremError::UnknownTheoremId(id.to_string()))?;
    Ok(run_entry(l, e, force))
}

pub fn check(l: &Lattice, id: &str) -> Result<TheoremVerdict, TheoremError> {
    check_with(l, id, false)
}

/// Run every registry entry in registry order.
pub fn check_all_with(l: &Lattice, force: bool) -> Vec<TheoremVerdict> {
    REGISTRY.iter().map(|e| run_entry(l, e, force)).collect()
}

pub fn check_all(l: &Lattice) -> Vec<TheoremVerdict> {
    check_all_with(l, false)
}

// ---------------------------------------------------------------------
// implication search
// ---------------------------------------------------------------------

enum Implication {
    /// `cond_i` implies `cond_j` within a per-object condition family.
    ConditionPair {
        family: &'static str,
        i: usize,
        j: usize,
    },
    ZeroPrimeImpliesChain,
    ChainImpliesZeroPrime,
}

fn family_arity(id: &str) -> Option<usize> {
    match id {
        "T3.1" => Some(5),
        "T4.3" => Some(3),
        "T4.6" => Some(8),
        "T5.1" => Some(3),
        "T5.5" => Some(6),
        "L4.1" => Some(3),
        "L4.5" => Some(2),
        "L4.9" => Some(2),
        "L5.2" => Some(2),
        "T5.4" => Some(2),
        _ => None,
    }
}

fn family_rows(id: &str, ctx: &Ctx) -> Option<Vec<FamilyRow>> {
    match id {
        "T3.1" => Some(t31_family(ctx)),
        "T4.3" => Some(t43_family(ctx)),
        "T4.6" => Some(t46_family(ctx)),
        "T5.1" => Some(t51_family(ctx)),
        "T5.5" => Some(t55_family(ctx)),
        "L4.1" => l41_family(ctx),
        "L4.5" => Some(l45_family(ctx)),
        "L4.9" => Some(l49_family(ctx)),
        "L5.2" => Some(l52_family(ctx)),
        "T5.4" => Some(t54_family(ctx)),
        _ => None,
    }
}

fn parse_implication(spec: &str) -> Result<Implication, TheoremError> {
    let unknown = || TheoremError::UnknownImplicationId(spec.to_string());
    let norm = spec.replace('⇒', "=>").replace('⇐', "<=");
    // explicit directions of the totally-ordered biconditional C3.3(3)
    match norm.as_str() {
        "C3.3:(3)zero-prime=>chain" | "C3.3:(3)<=" => return Ok(Implication::ZeroPrimeImpliesChain),
        "C3.3:(3)chain=>zero-prime" | "C3.3:(3)=>" => return Ok(Implication::ChainImpliesZeroPrime),
        _ => {}
    }
    // generic "<ID>:(i)=>(j)" over a condition family
    let (id, rest) = norm.split_once(':').ok_or_else(unknown)?;
    let arity = family_arity(id).ok_or_else(unknown)?;
    let (lhs, rhs) = rest.split_once("=>").ok_or_else(unknown)?;
    let parse_cond = |s: &str| -> Option<usize> {
        s.trim()
            .strip_prefix('(')?
            .strip_suffix(')')?
            .parse::<usize>()
            .ok()
    };
    let i = parse_cond(lhs).ok_or_else(unknown)?;
    let j = parse_cond(rhs).ok_or_else(unknown)?;
    if i == 0 || j == 0 || i > arity || j > arity || i == j {
        return Err(unknown());
    }
    let family = family_arity(id)
        .and_then(|_| FAMILY_IDS.iter().find(|f| **f == id))
        .ok_or_else(unknown)?;
    Ok(Implication::ConditionPair { family, i, j })
}

static FAMILY_IDS: &[&str] = &[
    "T3.1", "T4.3", "T4.6", "T5.1", "T5.5", "L4.1", "L4.5", "L4.9", "L5.2", "T5.4",
];

impl Implication {
    fn falsify(&self, l: &Lattice) -> Option<Counterexample> {
        let ctx = Ctx::new(l);
        match self {
            Implication::ConditionPair { family, i, j } => {
                let rows = family_rows(family, &ctx)?;
                rows.into_iter()
                    .find(|row| row.conds[i - 1] && !row.conds[j - 1])
                    .map(|row| Counterexample {
                        description: format!(
                            "{family}: ({i}) holds but ({j}) fails at {}",
                            row.desc
                        ),
                        ideals: row.ideals,
                        elements: row.elements,
                    })
            }
            // the one-element lattice is skipped: its zero ideal is the
            // whole lattice, hence improper, and (3) is vacuous there
            Implication::ZeroPrimeImpliesChain => {
                if l.len() > 1
                    && ideals::is_prime(l, &Ideal::zero(l))
                    && !l.is_totally_ordered()
                {
                    let (a, b) = l.incomparable_pairs()[0];
                    Some(Counterexample {
                        description: format!(
                            "zero ideal is prime but {} ∥ {}",
                            l.label(a),
                            l.label(b)
                        ),
                        ideals: vec!["{0}".into()],
                        elements: vec![l.label(a).to_string(), l.label(b).to_string()],
                    })
                } else {
                    None
                }
            }
            Implication::ChainImpliesZeroPrime => {
                if l.len() > 1
                    && l.is_totally_ordered()
                    && !ideals::is_prime(l, &Ideal::zero(l))
                {
                    Some(Counterexample {
                        description: "totally ordered but the zero ideal is not prime".into(),
                        ideals: vec!["{0}".into()],
                        elements: vec![],
                    })
                } else {
                    None
                }
            }
        }
    }
}

/// A lattice on which the searched implication fails, with the smallest
/// witness found by the deterministic object scan.
pub struct SearchHit {
    pub lattice: Lattice,
    pub counterexample: Counterexample,
}

/// Scan all distributive lattices with at most `max_n` elements (no
/// decomposability guard) for failures of one implication direction.
pub fn search_counterexamples(
    implication: &str,
    max_n: usize,
) -> Result<Vec<SearchHit>, TheoremError> {
    let imp = parse_implication(implication)?;
    let mut hits = Vec::new();
    for l in gen::enumerate_distributive(max_n)? {
        if let Some(ce) = imp.falsify(&l) {
            hits.push(SearchHit {
                lattice: l,
                counterexample: ce,
            });
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn fixture(name: &str) -> Lattice {
        gen::catalog_entry(name).expect("fixture exists").lattice.clone()
    }

    #[test]
    fn registry_has_23_entries_with_unique_ids() {
        assert_eq!(REGISTRY.len(), 23);
        let ids = theorem_ids();
        let mut dedup = ids.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
    }

    #[test]
    fn check_all_on_decomposable_fixtures_holds() {
        for name in ["C1", "C2", "C3", "B2", "B3", "G2x3"] {
            let l = fixture(name);
            for v in check_all(&l) {
                assert!(
                    v.holds(),
                    "{} on {name}: {:?} {:?}",
                    v.theorem_id,
                    v.status,
                    v.counterexample
                );
            }
        }
    }

    #[test]
    fn kite_guarded_entries_are_inapplicable() {
        let k5 = fixture("K5");
        let verdicts = check_all(&k5);
        assert_eq!(verdicts.len(), 23);
        for v in &verdicts {
            if entry(v.theorem_id).unwrap().requires_decomposable {
                assert!(
                    matches!(v.status, VerdictStatus::Inapplicable(_)),
                    "{} should be guarded",
                    v.theorem_id
                );
            } else {
                assert!(v.holds(), "{} should hold on K5", v.theorem_id);
            }
        }
    }

    #[test]
    fn forced_t31_fails_on_the_kite() {
        let k5 = fixture("K5");
        let v = check_with(&k5, "T3.1", true).unwrap();
        assert!(v.failed());
        assert!(v.counterexample.is_some());
        // (2) holds universally on the kite (nonzero elements never meet
        // to 0); primality (1) and its reformulations (3)-(5) all break
        let c: Vec<bool> = v.conditions.iter().map(|c| c.holds).collect();
        assert_eq!(c, vec![false, true, false, false, false]);
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let c3 = fixture("C3");
        assert!(matches!(
            check(&c3, "T9.9"),
            Err(TheoremError::UnknownTheoremId(_))
        ));
        assert!(matches!(
            search_counterexamples("T3.1:(1)=>(9)", 3),
            Err(TheoremError::UnknownImplicationId(_))
        ));
        assert!(matches!(
            search_counterexamples("nonsense", 3),
            Err(TheoremError::UnknownImplicationId(_))
        ));
    }

    #[test]
    fn search_finds_the_kite() {
        let hits = search_counterexamples("T3.1:(2)=>(1)", 5).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(crate::iso::lattices_isomorphic(
            &hits[0].lattice,
            &fixture("K5")
        ));

        let hits = search_counterexamples("C3.3:(3)zero-prime=>chain", 5).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(crate::iso::lattices_isomorphic(
            &hits[0].lattice,
            &fixture("K5")
        ));
    }

    #[test]
    fn unicode_arrows_are_accepted() {
        assert!(search_counterexamples("T3.1:(2)⇒(1)", 3).unwrap().is_empty());
        assert!(search_counterexamples("C3.3:(3)⇐", 3).unwrap().is_empty());
    }

    #[test]
    fn chain_reading_of_l49_decides_for_value_scope() {
        let c3 = fixture("C3");
        assert!(minimal_primes_match_value_chains(&c3, ChainScope::Values));
        // under the all-ideals reading no chain of values is maximal (L
        // always extends it), so the correspondence collapses
        assert!(!minimal_primes_match_value_chains(&c3, ChainScope::AllIdeals));
    }

    #[test]
    fn non_distributive_input_is_inapplicable() {
        let m3 = fixture("M3");
        let v = check_with(&m3, "T3.1", true).unwrap();
        assert!(matches!(v.status, VerdictStatus::Inapplicable(_)));
    }

    #[test]
    fn verdict_json_shape() {
        let c3 = fixture("C3");
        let v = check(&c3, "T3.5").unwrap();
        let j = v.to_json();
        assert_eq!(j["theorem"], "T3.5");
        assert_eq!(j["lattice"], "C3");
        assert_eq!(j["holds"], true);
        assert_eq!(j["degenerate"], true);
        assert!(j["counterexample"].is_null());
    }
}
