//! Finite groups, their power graphs, and chordality certificates.
//!
//! The crate builds concrete finite groups (permutation groups, matrix groups
//! over finite fields, products, and a few structured presentations), derives
//! the power graph / directed power graph / commuting graph, and decides
//! chordality of the power graph with *validated* certificates: a perfect
//! elimination ordering on the one side, an induced cycle of length at least
//! four on the other.
//!
//! On top of the graph machinery sit the structure tools: classification of
//! witness vertices into in-/out-vertices, reduction of witnesses to
//! power-reduced form, the translation between power-graph witnesses and
//! commuting-graph witnesses, a set of sufficient/necessary chordality
//! criteria driven by centralizer structure, and closed-form deciders for
//! several group families (simple groups, nilpotent groups, generalized
//! dihedral and quaternion groups, direct products).
//!
//! Everything is deterministic: group elements are indexed in breadth-first
//! discovery order from a fixed generator sequence, searches iterate in
//! ascending index order, and all verdicts carry certificates that are
//! re-validated before being returned.

#![forbid(unsafe_code)]

pub mod chordal;
pub mod classify;
pub mod corpus;
pub mod criteria;
pub mod ff;
pub mod graph;
pub mod groups;
pub mod numtheory;
pub mod powergraph;
pub mod reduction;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

// The guide chapters double as doc-tests so the snippets in `book/` can never
// drift from the public API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/groups.md")]
    pub mod groups {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/chordality.md")]
    pub mod chordality {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    pub mod reduction {}
    #[doc = include_str!("../../../book/src/criteria.md")]
    pub mod criteria {}
    #[doc = include_str!("../../../book/src/classification.md")]
    pub mod classification {}
    #[doc = include_str!("../../../book/src/fields.md")]
    pub mod fields {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
