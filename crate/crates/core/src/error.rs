use thiserror::Error;

use crate::root_system::{RootKind, Weight};

/// Errors raised by the library. Each variant names the input that broke a
/// precondition so the CLI can report it without further context.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system kind `{0}` (expected a2, a1xa1, b2 or g2)")]
    UnsupportedKind(String),

    #[error("Weyl elements belong to different root systems ({0} vs {1})")]
    MixedRootSystems(RootKind, RootKind),

    #[error("no Weyl element with reduced word {0:?}")]
    UnknownWeylWord(Vec<u8>),

    #[error("Steinberg weight search box insufficient for w = {word:?}: {reason}")]
    BoxInsufficient { word: Vec<u8>, reason: String },

    #[error("substitution rejected: {0}")]
    InvalidSubstitution(String),

    #[error("basis replay failed at step {step}: {reason}")]
    ReplayFailed { step: usize, reason: String },

    #[error("collection repeats weight {0}")]
    RepeatedWeight(Weight),

    #[error("collection order mismatch: {0}")]
    OrderKind(String),

    #[error("weak Bruhat collection has {got} weights but the Weyl group has {expected} elements")]
    IncompleteWeylMap { expected: usize, got: usize },

    #[error("search precondition violated: {0}")]
    SearchPrecondition(String),

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
