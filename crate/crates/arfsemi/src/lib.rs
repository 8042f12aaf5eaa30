//! Numerical semigroup toolkit centered on the Arf property.
//!
//! The crate computes the classical invariants of a numerical semigroup
//! (Apery sets, Frobenius number, gaps, pseudo-Frobenius and special gaps,
//! symmetry), the Arf-specific machinery (Arf test, Arf closure, Arf
//! special gaps, minimal Arf systems of generators, the leaf test) and the
//! enumeration layer built on top of them (all Arf oversemigroups, their
//! graph, chains between nested Arf semigroups and Arf-irreducible
//! decompositions). The [`oracle`] module carries independent brute-force
//! versions of the same operations for cross-checking.

pub mod arf;
pub mod enumeration;
mod error;
pub mod oracle;
pub mod semigroup;

pub use arf::{arf_closure, ArfIrreducibleOverlap, ArfSequence};
pub use enumeration::{
    arf_irreducible_oversemigroups, arf_irreducible_oversemigroups_with_cap, arf_oversemigroups,
    arf_oversemigroups_with_cap, chain_between, decompose_arf_irreducible,
    decompose_arf_irreducible_with_cap, over_graph, over_graph_with_cap, Decomposition, OverEdge,
    OverGraph, DEFAULT_GENUS_CAP,
};
pub use error::Error;
pub use semigroup::{AperySet, GapReport, NumericalSemigroup, RemoveOutcome, MAX_ELEMENT};
