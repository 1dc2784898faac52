//! Test-side oracle and instance generators.
//!
//! The oracle computes exact maxima by a plain exhaustive clique search over
//! u128 candidate masks, with only two elementary sound cutoffs (candidate
//! count and a greedy pairing over non-adjacent pairs). It shares nothing
//! with the library solver: subsets are enumerated in lexicographic rather
//! than colexicographic order, blocks are sorted vectors rather than
//! bitsets, there is no greedy coloring, no symmetry anchor and no theorem
//! bound.

#![allow(dead_code)]

use lintersect::{BlockSet, Family, GroundSet};
use rand::Rng;

/// All k-subsets of [n] in lexicographic order.
pub fn lex_ksubsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k as usize, 1, &mut Vec::new(), &mut out);
    }
    out
}

fn sorted_intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub struct OracleGraph {
    pub blocks: Vec<Vec<u32>>,
    adj: Vec<u128>,
    non_adj: Vec<u128>,
    full: u128,
}

impl OracleGraph {
    pub fn build(n: u32, k: u32, ell: &[u32]) -> Self {
        let blocks = lex_ksubsets(n, k);
        let v = blocks.len();
        assert!(v <= 128, "oracle instances must fit in a u128 mask");
        let mut adj = vec![0u128; v];
        for i in 0..v {
            for j in i + 1..v {
                let size = sorted_intersection_size(&blocks[i], &blocks[j]) as u32;
                if ell.contains(&size) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        let full = if v == 128 {
            u128::MAX
        } else {
            (1u128 << v) - 1
        };
        let non_adj = (0..v).map(|i| full & !adj[i] & !(1u128 << i)).collect();
        Self {
            blocks,
            adj,
            non_adj,
            full,
        }
    }

    /// Upper bound: greedily pair each remaining candidate with one
    /// non-neighbor; a clique takes at most one vertex per group.
    fn pair_bound(&self, mut cand: u128) -> u32 {
        let mut groups = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let non = cand & self.non_adj[v];
            if non != 0 {
                cand &= !(non & non.wrapping_neg());
            }
            groups += 1;
        }
        groups
    }

    fn max_rec(&self, cand: u128, size: u32, best: &mut u32) {
        if size > *best {
            *best = size;
        }
        if cand == 0 || size + cand.count_ones() <= *best {
            return;
        }
        if size + self.pair_bound(cand) <= *best {
            return;
        }
        let mut c = cand;
        while c != 0 {
            if size + c.count_ones() <= *best {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            self.max_rec(c & self.adj[v], size + 1, best);
        }
    }

    pub fn maximum_size(&self) -> u32 {
        let mut best = 0;
        self.max_rec(self.full, 0, &mut best);
        best
    }

    fn enum_rec(&self, cand: u128, clique: &mut Vec<u32>, target: usize, out: &mut Vec<Vec<u32>>) {
        if clique.len() == target {
            out.push(clique.clone());
            return;
        }
        let mut c = cand;
        while c != 0 {
            if clique.len() + (c.count_ones() as usize) < target {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            clique.push(v as u32);
            self.enum_rec(c & self.adj[v], clique, target, out);
            clique.pop();
        }
    }

    /// Every maximum clique, as families of sorted blocks. Only for tiny
    /// instances.
    pub fn maximum_families(&self) -> (u32, Vec<Vec<Vec<u32>>>) {
        let best = self.maximum_size();
        let mut out = Vec::new();
        self.enum_rec(self.full, &mut Vec::new(), best as usize, &mut out);
        let mut families: Vec<Vec<Vec<u32>>> = out
            .into_iter()
            .map(|clique| {
                let mut blocks: Vec<Vec<u32>> = clique
                    .iter()
                    .map(|&v| self.blocks[v as usize].clone())
                    .collect();
                blocks.sort();
                blocks
            })
            .collect();
        families.sort();
        families.dedup();
        (best, families)
    }
}

/// Exact oracle maximum for one instance.
pub fn oracle_max(n: u32, k: u32, ell: &[u32]) -> u32 {
    OracleGraph::build(n, k, ell).maximum_size()
}

// ---------------------------------------------------------------------------
// randomized instance generators for the lemma suites
// ---------------------------------------------------------------------------

pub fn block_from(ground: GroundSet, elems: &[u32]) -> BlockSet {
    BlockSet::from_elements(ground, elems.iter().copied()).unwrap()
}

fn random_ksubset<R: Rng>(rng: &mut R, n: u32, k: u32) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n).collect();
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let idx = rng.random_range(0..pool.len());
        out.push(pool.swap_remove(idx));
    }
    out.sort_unstable();
    out
}

/// A random pairwise-intersecting k-uniform family with `t >= 2` blocks.
/// Three modes: ground sets small enough that any two k-sets intersect,
/// star-anchored families, and rejection-sampled families on slightly
/// larger ground sets.
pub fn random_intersecting_uniform<R: Rng>(rng: &mut R) -> (Family, u32) {
    loop {
        let k = rng.random_range(2..=6u32);
        let mode = rng.random_range(0..3u32);
        let (n, anchored) = match mode {
            0 => (rng.random_range(k..=2 * k - 1), false),
            1 => (rng.random_range(k + 1..=16u32.max(k + 1)), true),
            _ => (rng.random_range(k + 1..=k + 4), false),
        };
        let t = rng.random_range(2..=8usize);
        let ground = GroundSet::new(n).unwrap();

        let mut family = Family::new(ground);
        let mut attempts = 0;
        while family.len() < t && attempts < 400 {
            attempts += 1;
            let elems = if anchored {
                let mut rest = random_ksubset(rng, n - 1, k - 1)
                    .into_iter()
                    .map(|e| e + 1)
                    .collect::<Vec<_>>();
                rest.insert(0, 1);
                rest
            } else {
                random_ksubset(rng, n, k)
            };
            let block = block_from(ground, &elems);
            if family.iter().any(|b| b.is_disjoint(&block)) {
                continue;
            }
            let _ = family.push(block); // duplicate pushes are just skipped
        }
        if family.len() >= 2 {
            return (family, k);
        }
    }
}

/// A random instance for the trace inequality: a family with empty kernel
/// and a non-member block meeting every member in at least `l1` elements.
pub fn random_trace_instance<R: Rng>(rng: &mut R) -> (Family, BlockSet, u32) {
    loop {
        let n = rng.random_range(5..=12u32);
        let l1 = rng.random_range(1..=3u32);
        let t = rng.random_range(2..=5usize);
        let ground = GroundSet::new(n).unwrap();

        let mut family = Family::new(ground);
        for _ in 0..t {
            let size = rng.random_range(l1..=(l1 + 4).min(n - 1));
            let _ = family.push(block_from(ground, &random_ksubset(rng, n, size)));
        }
        if family.len() < 2 || !family.kernel().unwrap().is_empty() {
            continue;
        }

        // pick l1 elements of every member, plus noise
        let mut elems: Vec<u32> = Vec::new();
        for block in family.iter() {
            let members = block.to_vec();
            for _ in 0..l1 {
                elems.push(members[rng.random_range(0..members.len())]);
            }
        }
        for _ in 0..rng.random_range(0..3u32) {
            elems.push(rng.random_range(1..=n));
        }
        elems.sort_unstable();
        elems.dedup();
        let f = block_from(ground, &elems);

        if family.contains_block(&f) {
            continue;
        }
        if family.iter().any(|h| h.intersection_size(&f) < l1) {
            continue;
        }
        return (family, f, l1);
    }
}

/// A random k-uniform family on small parameters for the Helly suite.
pub fn random_uniform_family<R: Rng>(rng: &mut R) -> (Family, u32) {
    loop {
        let k = rng.random_range(2..=4u32);
        let n = rng.random_range(k.max(3)..=9u32);
        let m = rng.random_range(1..=8usize);
        let ground = GroundSet::new(n).unwrap();
        let mut family = Family::new(ground);
        let mut attempts = 0;
        while family.len() < m && attempts < 200 {
            attempts += 1;
            let _ = family.push(block_from(ground, &random_ksubset(rng, n, k)));
        }
        if !family.is_empty() {
            return (family, k);
        }
    }
}
