//! Exact computations with exceptional collections of line bundles on the
//! flag varieties of rank-2 groups.
//!
//! The crate covers the root-system data of types A2, A1×A1, B2 and G2, the
//! Steinberg basis of the group ring over its Weyl invariants together with
//! basis-preserving substitutions, the Borel–Weil–Bott exceptionality test,
//! the G2 "crab" geometry, and a backtracking search engine that enumerates
//! exceptional collections and checks bounded instances of the G2 lemmas.

pub mod algebra;
pub mod cli;
pub mod crab;
pub mod error;
pub mod exceptional;
pub mod root_system;
pub mod search;
pub mod steinberg;

pub use error::{Error, Result};
pub use root_system::{RootKind, RootSystem, Weight, WeylElement};
