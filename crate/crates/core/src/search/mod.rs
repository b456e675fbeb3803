//! Exhaustive backtracking over G2 collections and bounded checks of the
//! geometric lemmas.

pub mod engine;
pub mod facts;
pub mod falsify;

pub use engine::{find_collections, find_collections_with, Engine, Visitor};
pub use facts::{fact_close, fact_forty, fact_nodmz, maxpts_search, CloseOutcome, SearchReport};
pub use falsify::{falsify, falsify_variant, FalsifierResult, LemmaId, Variant};
