//! Toolkit for finite lattices with a minimum element.
//!
//! The crate revolves around the [`Lattice`] type: a validated finite
//! bounded-below lattice with precomputed order relation and meet/join
//! tables. On top of it sit
//!
//! * [`ideals`]: enumeration and classification of the ideal structure
//!   (prime, minimal prime, value, special and polar ideals, filters and
//!   ultrafilters, the `S_P` intersections),
//! * [`decomp`]: decomposability and projectability predicates plus the
//!   constructive disjointification / special-decomposition procedures,
//! * [`theorems`]: a registry of executable checkers, one per structure
//!   theorem about decomposable lattices, and a counterexample search
//!   over non-decomposable instances,
//! * [`gen`]: a fixture catalog, exhaustive enumeration of distributive
//!   lattices up to isomorphism, and seeded random generation.
//!
//! Everything is desk-scale by design: lattices are capped at 64
//! elements, subsets are bitmasks, and all searches are exhaustive and
//! deterministic.

pub mod decomp;
pub mod gen;
pub mod ideals;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod set;
pub mod theorems;

pub use lattice::{Lattice, LatticeDoc, LatticeError};
pub use set::ElemSet;
