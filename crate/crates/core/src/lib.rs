//! Exact combinatorics of tournaments and their backedge graphs.
//!
//! Vertices and positions are 0-based in this API. Text formats and the
//! named catalog use 1-based labels.

pub mod backedge;
pub mod bits;
pub mod blockade;
pub mod catalog;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod numbering;
pub mod optimal;
pub mod ordered;
pub mod patterns;
pub mod search;
pub mod tournament;

pub use blockade::{Blockade, Host};
pub use backedge::{backedge_count, backedge_graph, tournament_from_backedges};
pub use enumerate::{all_tournaments, backedge_census, canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use format::Object;
pub use numbering::Numbering;
pub use ordered::{walk_imbalance, OrderedGraph, Walk};
pub use tournament::Tournament;
