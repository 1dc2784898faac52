//! Ground sets, blocks, families and intersection predicates.
//!
//! Elements are 1-based externally, matching the `[n] = {1, ..., n}`
//! convention used everywhere in extremal set theory; internally element
//! `i` occupies bit `i - 1` of a word-packed set.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;

const WORD_BITS: usize = 64;

/// The ground set `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::EmptyGroundSet);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Iterates the elements `1..=n`.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.n)
    }
}

/// A subset of a ground set, stored as a packed bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSet {
    n: u32,
    words: Vec<u64>,
}

impl BlockSet {
    pub fn empty(ground: GroundSet) -> Self {
        let nwords = (ground.n() as usize).div_ceil(WORD_BITS);
        Self {
            n: ground.n(),
            words: vec![0; nwords],
        }
    }

    pub fn from_elements<I>(ground: GroundSet, elements: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut set = Self::empty(ground);
        for e in elements {
            set.insert(e)?;
        }
        Ok(set)
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    /// Inserts element `e` (1-based). Inserting an existing element is a no-op.
    pub fn insert(&mut self, e: u32) -> Result<(), CoreError> {
        if e == 0 || e > self.n {
            return Err(CoreError::ElementOutOfRange {
                element: e,
                n: self.n,
            });
        }
        let bit = (e - 1) as usize;
        self.words[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
        Ok(())
    }

    pub fn contains(&self, e: u32) -> bool {
        if e == 0 || e > self.n {
            return false;
        }
        let bit = (e - 1) as usize;
        self.words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iteration over the (1-based) elements.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((wi * WORD_BITS) as u32 + tz + 1)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn intersection_size(&self, other: &BlockSet) -> u32 {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn intersect(&self, other: &BlockSet) -> BlockSet {
        debug_assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        BlockSet { n: self.n, words }
    }

    pub fn intersect_with(&mut self, other: &BlockSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BlockSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &BlockSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BlockSet) -> bool {
        self.intersection_size(other) == 0
    }
}

/// Lexicographic order on the ascending element sequences, so that sorting
/// blocks yields the canonical file order.
impl Ord for BlockSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for BlockSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BlockSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// The set `L = {l_1 < l_2 < ... < l_s}` of allowed pairwise-intersection
/// sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LSpec {
    values: Vec<u32>,
}

impl LSpec {
    /// Builds an `LSpec` from an already strictly increasing list.
    pub fn new(values: Vec<u32>) -> Result<Self, CoreError> {
        if values.is_empty() || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::BadLSpec);
        }
        Ok(Self { values })
    }

    /// Sorts and deduplicates; the flag reports whether duplicates were dropped.
    pub fn from_unsorted(mut values: Vec<u32>) -> Result<(Self, bool), CoreError> {
        values.sort_unstable();
        let before = values.len();
        values.dedup();
        let had_duplicates = values.len() != before;
        Ok((Self::new(values)?, had_duplicates))
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Number of allowed intersection sizes, `s = |L|`.
    pub fn s(&self) -> usize {
        self.values.len()
    }

    /// The smallest allowed size, `l_1`.
    pub fn ell1(&self) -> u32 {
        self.values[0]
    }

    /// The largest allowed size, `l_s`.
    pub fn ell_max(&self) -> u32 {
        *self.values.last().unwrap()
    }

    pub fn contains(&self, size: u32) -> bool {
        self.values.binary_search(&size).is_ok()
    }

    pub fn is_positive(&self) -> bool {
        self.values[0] > 0
    }

    pub fn require_positive(&self) -> Result<(), CoreError> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(CoreError::LNotPositive)
        }
    }

    /// Sum of the allowed sizes (used by the Barg-Musin condition).
    pub fn sum(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }
}

impl TryFrom<Vec<u32>> for LSpec {
    type Error = CoreError;
    fn try_from(values: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl From<LSpec> for Vec<u32> {
    fn from(l: LSpec) -> Self {
        l.values
    }
}

impl fmt::Display for LSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered collection of pairwise-distinct blocks over one ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    ground: GroundSet,
    blocks: Vec<BlockSet>,
}

impl Family {
    pub fn new(ground: GroundSet) -> Self {
        Self {
            ground,
            blocks: Vec::new(),
        }
    }

    pub fn from_blocks(ground: GroundSet, blocks: Vec<BlockSet>) -> Result<Self, CoreError> {
        let mut family = Self::new(ground);
        for b in blocks {
            family.push(b)?;
        }
        Ok(family)
    }

    /// Builds a family from blocks already known to be distinct and over the
    /// right ground set (solver-internal fast path).
    pub(crate) fn from_blocks_unchecked(ground: GroundSet, blocks: Vec<BlockSet>) -> Self {
        debug_assert!(blocks.iter().all(|b| b.ground_size() == ground.n()));
        Self { ground, blocks }
    }

    /// Appends a block; duplicates are rejected, families are collections of
    /// distinct sets.
    pub fn push(&mut self, block: BlockSet) -> Result<(), CoreError> {
        if block.ground_size() != self.ground.n() {
            return Err(CoreError::GroundMismatch {
                expected: self.ground.n(),
                got: block.ground_size(),
            });
        }
        if self.blocks.contains(&block) {
            return Err(CoreError::DuplicateBlock {
                block: block.to_string(),
            });
        }
        self.blocks.push(block);
        Ok(())
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&BlockSet> {
        self.blocks.get(index)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BlockSet> {
        self.blocks.iter()
    }

    pub fn contains_block(&self, block: &BlockSet) -> bool {
        self.blocks.contains(block)
    }

    /// All blocks in canonical (lexicographic) order.
    pub fn sorted_blocks(&self) -> Vec<BlockSet> {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        blocks
    }

    /// Equality as sets of blocks, ignoring insertion order.
    pub fn same_blocks(&self, other: &Family) -> bool {
        self.ground == other.ground
            && self.len() == other.len()
            && self.sorted_blocks() == other.sorted_blocks()
    }

    /// True iff every block has exactly `k` elements (vacuously true when
    /// empty).
    pub fn is_uniform(&self, k: u32) -> bool {
        self.blocks.iter().all(|b| b.len() == k)
    }

    /// Returns the index and size of the first block violating k-uniformity.
    pub fn check_uniform(&self, k: u32) -> Result<(), CoreError> {
        for (index, b) in self.blocks.iter().enumerate() {
            let size = b.len();
            if size != k {
                return Err(CoreError::NotUniform {
                    index,
                    size,
                    expected: k,
                });
            }
        }
        Ok(())
    }

    /// The deduplicated, sorted set `{ |F_i ∩ F_j| : i < j }`.
    pub fn intersection_sizes(&self) -> Result<BTreeSet<u32>, CoreError> {
        if self.len() < 2 {
            return Err(CoreError::FamilyTooSmall {
                needed: 2,
                got: self.len(),
            });
        }
        let mut sizes = BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                sizes.insert(self.blocks[i].intersection_size(&self.blocks[j]));
            }
        }
        Ok(sizes)
    }

    /// True iff every pairwise intersection size lies in `L`; families with
    /// fewer than two blocks qualify vacuously.
    pub fn is_l_intersecting(&self, l: &LSpec) -> bool {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if !l.contains(self.blocks[i].intersection_size(&self.blocks[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// The common intersection of all blocks.
    pub fn kernel(&self) -> Result<BlockSet, CoreError> {
        let mut iter = self.blocks.iter();
        let first = iter.next().ok_or(CoreError::EmptyFamily)?;
        let mut kernel = first.clone();
        for b in iter {
            kernel.intersect_with(b);
        }
        Ok(kernel)
    }

    /// The union of all blocks (empty set for an empty family).
    pub fn union_all(&self) -> BlockSet {
        let mut u = BlockSet::empty(self.ground);
        for b in &self.blocks {
            u.union_with(b);
        }
        u
    }
}
