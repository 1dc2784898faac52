//! The compatibility graph: one vertex per k-subset of [n] in
//! colexicographic order, an edge exactly between pairs whose intersection
//! size lies in L. Cliques are precisely the L-intersecting k-uniform
//! families.

use crate::bounds::binomial;
use crate::family::{BlockSet, Family, GroundSet, LSpec};

use super::SolverError;

/// Adjacency rows are materialized as bitsets while they fit comfortably in
/// memory (32768^2 bits = 128 MiB); beyond that edges are recomputed from
/// the block bitsets on demand.
const DENSE_ADJACENCY_LIMIT: usize = 1 << 15;

/// A set of vertex indices, packed 64 per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(bits: usize) -> Self {
        Self {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn full(bits: usize) -> Self {
        let mut words = vec![u64::MAX; bits.div_ceil(64)];
        let tail = bits % 64;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        if bits == 0 {
            words.clear();
        }
        Self { words }
    }

    pub fn insert(&mut self, v: u32) {
        self.words[v as usize / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: u32) {
        self.words[v as usize / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: u32) -> bool {
        self.words[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn copy_from(&mut self, other: &VertexSet) {
        self.words.copy_from_slice(&other.words);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(wi as u32 * 64 + tz)
                }
            })
        })
    }
}

#[derive(Debug)]
enum Adjacency {
    Dense(Vec<VertexSet>),
    Implicit,
}

/// Compatibility graph over all k-subsets of [n].
#[derive(Debug)]
pub struct CompatGraph {
    ground: GroundSet,
    k: u32,
    ell: LSpec,
    blocks: Vec<BlockSet>,
    allowed: Vec<bool>,
    adj: Adjacency,
}

impl CompatGraph {
    /// Builds the graph, refusing when C(n, k) exceeds `vertex_cap`.
    pub fn build(n: u32, k: u32, ell: &LSpec, vertex_cap: u64) -> Result<Self, SolverError> {
        if k == 0 || k > n {
            return Err(SolverError::BadUniformity { k, n });
        }
        if ell.ell_max() >= k {
            return Err(SolverError::EllTooLarge {
                ell: ell.ell_max(),
                k,
                max: k - 1,
            });
        }
        let vertices = binomial(n as u64, k as i64);
        if vertices > vertex_cap.into() {
            return Err(SolverError::VertexCapExceeded {
                n,
                k,
                vertices,
                cap: vertex_cap,
            });
        }

        let ground = GroundSet::new(n).expect("n >= k >= 1");
        let blocks: Vec<BlockSet> = colex_ksubsets(n, k)
            .into_iter()
            .map(|elems| BlockSet::from_elements(ground, elems).expect("elements in 1..=n"))
            .collect();
        let mut allowed = vec![false; k as usize];
        for &v in ell.values() {
            allowed[v as usize] = true;
        }

        let count = blocks.len();
        let adj = if count <= DENSE_ADJACENCY_LIMIT {
            let mut rows = vec![VertexSet::empty(count); count];
            for i in 0..count {
                for j in i + 1..count {
                    let size = blocks[i].intersection_size(&blocks[j]) as usize;
                    if allowed[size] {
                        rows[i].insert(j as u32);
                        rows[j].insert(i as u32);
                    }
                }
            }
            Adjacency::Dense(rows)
        } else {
            Adjacency::Implicit
        };

        Ok(Self {
            ground,
            k,
            ell: ell.clone(),
            blocks,
            allowed,
            adj,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> &LSpec {
        &self.ell
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, v: u32) -> &BlockSet {
        &self.blocks[v as usize]
    }

    /// Edge predicate: distinct vertices whose blocks intersect in an
    /// allowed size.
    pub fn compatible(&self, u: u32, v: u32) -> bool {
        u != v
            && self.allowed
                [self.blocks[u as usize].intersection_size(&self.blocks[v as usize]) as usize]
    }

    /// Total edge count; recomputed pairwise, intended for small graphs.
    pub fn count_edges(&self) -> u64 {
        let count = self.vertex_count();
        let mut edges = 0;
        for i in 0..count {
            for j in i + 1..count {
                if self.compatible(i as u32, j as u32) {
                    edges += 1;
                }
            }
        }
        edges
    }

    /// Writes `within ∩ N(v)` into `out`.
    pub(crate) fn restrict_neighbors(&self, v: u32, within: &VertexSet, out: &mut VertexSet) {
        match &self.adj {
            Adjacency::Dense(rows) => {
                out.copy_from(within);
                out.intersect_with(&rows[v as usize]);
            }
            Adjacency::Implicit => {
                out.clear();
                for u in within.iter() {
                    if self.compatible(u, v) {
                        out.insert(u);
                    }
                }
            }
        }
    }

    /// True iff `v` has a neighbor inside `set`.
    pub(crate) fn conflicts_with(&self, v: u32, set: &VertexSet) -> bool {
        match &self.adj {
            Adjacency::Dense(rows) => rows[v as usize].intersects(set),
            Adjacency::Implicit => set.iter().any(|u| self.compatible(u, v)),
        }
    }

    /// Materializes a vertex list as a family, blocks in ascending vertex
    /// order.
    pub fn vertices_to_family(&self, vertices: &[u32]) -> Family {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let blocks = sorted
            .iter()
            .map(|&v| self.blocks[v as usize].clone())
            .collect();
        Family::from_blocks_unchecked(self.ground, blocks)
    }
}

/// All k-subsets of [n] as ascending element lists, in colexicographic
/// order (so {1,...,k} comes first).
pub(crate) fn colex_ksubsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let k = k as usize;
    let mut a: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(a.clone());
        let mut i = 0;
        while i < k {
            let next = if i + 1 < k { a[i + 1] } else { n + 1 };
            if a[i] + 1 < next {
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
        a[i] += 1;
        for (j, slot) in a.iter_mut().enumerate().take(i) {
            *slot = j as u32 + 1;
        }
    }
    out
}
