//! Error types for the family model, the lemma checks and file parsing.

use thiserror::Error;

/// Errors raised by family construction and the core predicates/lemmas.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("ground set size must be at least 1")]
    EmptyGroundSet,

    #[error("element {element} outside 1..={n}")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("block ground set [{got}] does not match family ground set [{expected}]")]
    GroundMismatch { expected: u32, got: u32 },

    #[error("duplicate block {block}")]
    DuplicateBlock { block: String },

    #[error("family too small: need at least {needed} blocks, have {got}")]
    FamilyTooSmall { needed: usize, got: usize },

    #[error("kernel undefined for empty family")]
    EmptyFamily,

    #[error("block at index {index} has {size} elements, expected k = {expected}")]
    NotUniform {
        index: usize,
        size: u32,
        expected: u32,
    },

    #[error("blocks at indices {i} and {j} are disjoint")]
    DisjointPair { i: usize, j: usize },

    #[error("kernel nonempty")]
    KernelNonempty,

    #[error("the checked block is a member of the family")]
    BlockInFamily,

    #[error(
        "block at index {index} meets the reference set in {size} elements, need at least {min}"
    )]
    TraceTooSmall { index: usize, size: u32, min: u32 },

    #[error("ell_1 must be a positive integer")]
    Ell1NotPositive,

    #[error("L values must be nonempty, nonnegative and strictly increasing")]
    BadLSpec,

    #[error("L must contain only positive integers")]
    LNotPositive,

    #[error("cap exceeded: {candidates} candidate subfamilies exceed the cap {cap}")]
    CapExceeded { candidates: String, cap: u64 },
}

/// A family-file parse error, pointing at the offending line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        Self {
            line,
            msg: msg.into(),
        }
    }
}
