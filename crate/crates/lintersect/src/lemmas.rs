//! Executable forms of the three structural lemmas and the cover
//! decomposition built on them.
//!
//! Each check validates its preconditions loudly and returns the computed
//! quantities together with the verdict, so callers can both rely on the
//! lemma and audit it on concrete data.

use std::collections::BTreeMap;

use crate::bounds::binomial;
use crate::error::CoreError;
use crate::family::{BlockSet, Family};
use crate::util::for_each_combination;

/// Candidate-subfamily cap for the Helly witness search.
pub const HELLY_CANDIDATE_CAP: u64 = 10_000_000;

/// Outcome of the union-size inequality `|∪H| <= k + (t-1)(k-1)` for a
/// pairwise-intersecting k-uniform family of t blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionSizeCheck {
    pub union_size: u64,
    pub bound: u64,
    pub holds: bool,
}

/// Outcome of the trace inequality `|Q ∩ F| >= l1 + 1` where `Q` is the
/// union of a family with empty kernel, all of whose members meet `F` in at
/// least `l1` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceBoundCheck {
    pub trace_size: u32,
    pub holds: bool,
}

/// Searches for a small subfamily witnessing an empty kernel.
///
/// If the kernel of `f` is nonempty there is nothing to witness and the
/// result is `None`. Otherwise the Helly property of k-uniform systems
/// guarantees a subfamily of at most `k + 1` blocks with empty intersection;
/// the search scans subfamily sizes 2, 3, ..., k+1 in order and, within a
/// size, index tuples lexicographically, returning the first hit. Refuses
/// with a cap error when `C(|f|, k+1)` exceeds [`HELLY_CANDIDATE_CAP`].
pub fn helly_witness(f: &Family, k: u32) -> Result<Option<Family>, CoreError> {
    f.check_uniform(k)?;
    let kernel = f.kernel()?; // errors on the empty family
    if !kernel.is_empty() {
        return Ok(None);
    }
    let m = f.len();
    let candidates = binomial(m as u64, k as i64 + 1);
    if candidates > HELLY_CANDIDATE_CAP.into() {
        return Err(CoreError::CapExceeded {
            candidates: candidates.to_string(),
            cap: HELLY_CANDIDATE_CAP,
        });
    }

    let indices: Vec<usize> = (0..m).collect();
    for size in 2..=(k as usize + 1).min(m) {
        let mut found: Option<Vec<usize>> = None;
        for_each_combination(&indices, size, &mut |combo| {
            let mut inter = f.get(combo[0]).unwrap().clone();
            for &i in &combo[1..] {
                inter.intersect_with(f.get(i).unwrap());
                if inter.is_empty() {
                    break;
                }
            }
            if inter.is_empty() {
                found = Some(combo.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(combo) = found {
            let blocks = combo.iter().map(|&i| f.get(i).unwrap().clone()).collect();
            return Ok(Some(Family::from_blocks(f.ground(), blocks)?));
        }
    }
    // A k-uniform family with empty kernel always contains at most k+1
    // members with empty intersection, so the scan above cannot miss.
    unreachable!("empty kernel without a witness of size <= k+1");
}

/// Checks `|∪H| <= k + (t-1)(k-1)` for a pairwise-intersecting k-uniform
/// family with `t = |H| >= 2`.
pub fn union_size_check(h: &Family, k: u32) -> Result<UnionSizeCheck, CoreError> {
    let t = h.len();
    if t < 2 {
        return Err(CoreError::FamilyTooSmall { needed: 2, got: t });
    }
    h.check_uniform(k)?;
    for i in 0..t {
        for j in i + 1..t {
            if h.get(i).unwrap().is_disjoint(h.get(j).unwrap()) {
                return Err(CoreError::DisjointPair { i, j });
            }
        }
    }
    let union_size = h.union_all().len() as u64;
    let bound = k as u64 + (t as u64 - 1) * (k as u64 - 1);
    Ok(UnionSizeCheck {
        union_size,
        bound,
        holds: union_size <= bound,
    })
}

/// Checks `|Q ∩ f| >= l1 + 1` with `Q = ∪h`, under the preconditions that
/// the kernel of `h` is empty, `f` is not a member of `h`, and every member
/// meets `f` in at least `l1` elements.
pub fn trace_bound_check(h: &Family, f: &BlockSet, l1: u32) -> Result<TraceBoundCheck, CoreError> {
    if l1 == 0 {
        return Err(CoreError::Ell1NotPositive);
    }
    if f.ground_size() != h.ground().n() {
        return Err(CoreError::GroundMismatch {
            expected: h.ground().n(),
            got: f.ground_size(),
        });
    }
    let kernel = h.kernel()?;
    if !kernel.is_empty() {
        return Err(CoreError::KernelNonempty);
    }
    if h.contains_block(f) {
        return Err(CoreError::BlockInFamily);
    }
    for (index, block) in h.iter().enumerate() {
        let size = block.intersection_size(f);
        if size < l1 {
            return Err(CoreError::TraceTooSmall {
                index,
                size,
                min: l1,
            });
        }
    }
    let trace_size = h.union_all().intersection_size(f);
    Ok(TraceBoundCheck {
        trace_size,
        holds: trace_size > l1,
    })
}

/// Decomposes `f` into the cover `f = ∪_T f(T)` over all `(l1+1)`-subsets
/// `T` of `m_set`, where `f(T) = { F in f : T ⊆ m_set ∩ F }`.
///
/// Requires `|m_set ∩ F| >= l1 + 1` for every block `F`; keys with empty
/// `f(T)` are omitted.
pub fn decompose(
    f: &Family,
    m_set: &BlockSet,
    l1: u32,
) -> Result<BTreeMap<BlockSet, Family>, CoreError> {
    if l1 == 0 {
        return Err(CoreError::Ell1NotPositive);
    }
    if m_set.ground_size() != f.ground().n() {
        return Err(CoreError::GroundMismatch {
            expected: f.ground().n(),
            got: m_set.ground_size(),
        });
    }
    for (index, block) in f.iter().enumerate() {
        let size = m_set.intersection_size(block);
        if size < l1 + 1 {
            return Err(CoreError::TraceTooSmall {
                index,
                size,
                min: l1 + 1,
            });
        }
    }

    let elements = m_set.to_vec();
    let r = l1 as usize + 1;
    let mut parts: BTreeMap<BlockSet, Family> = BTreeMap::new();
    for_each_combination(&elements, r, &mut |combo| {
        let members: Vec<BlockSet> = f
            .iter()
            .filter(|block| combo.iter().all(|&e| block.contains(e)))
            .cloned()
            .collect();
        if !members.is_empty() {
            let key = BlockSet::from_elements(f.ground(), combo.iter().copied())
                .expect("subset of a valid block");
            parts.insert(key, Family::from_blocks_unchecked(f.ground(), members));
        }
        true
    });
    Ok(parts)
}
