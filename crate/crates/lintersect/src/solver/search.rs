//! Branch-and-bound maximum clique search on the compatibility graph, and
//! exhaustive enumeration of all maximum cliques.
//!
//! The search follows the classical scheme: vertices of a subproblem are
//! greedily colored in ascending index order, branching explores them in
//! descending color order, and a branch is pruned when the current clique
//! plus the branch color cannot beat the incumbent. The incumbent is also
//! capped by the best applicable theorem bound, which both prunes and lets
//! the search stop as soon as a construction-tight optimum is found.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_main, bound_rw, Applicability};
use crate::family::{Family, LSpec};

use super::graph::{CompatGraph, VertexSet};
use super::{SolverError, DEFAULT_VERTEX_CAP};

/// Knobs for one exact solve.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Refuse instances with more than this many k-subset vertices.
    pub vertex_cap: u64,
    /// Wall-clock budget; exceeding it returns the best family found so
    /// far as an explicit non-optimal lower bound.
    pub timeout: Option<Duration>,
    /// Worker threads; 1 is fully deterministic including the witness.
    pub workers: usize,
    /// Fix the lexicographically smallest block of some optimum to
    /// {1, ..., k}. Sound for the optimum size because relabeling [n]
    /// preserves the edge predicate; never used when enumerating.
    pub anchor: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
            timeout: None,
            workers: 1,
            anchor: true,
        }
    }
}

/// The theorem bound used to cap the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsedBound {
    pub name: String,
    #[serde(with = "crate::serde_util::biguint_dec")]
    pub value: BigUint,
}

/// Result of an exact solve: the maximum family size, one witness family,
/// and the search statistics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub optimum: u64,
    #[serde(with = "crate::serde_util::family_text")]
    pub witness: Family,
    pub nodes_explored: u64,
    pub upper_bound_used: UsedBound,
    #[serde(with = "crate::serde_util::duration_ms")]
    pub elapsed: Duration,
}

/// All maximum families of an instance (up to `cap`).
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub optimum: u64,
    pub families: Vec<Family>,
    /// False when the cap or the time budget cut the list short.
    pub complete: bool,
    pub nodes_explored: u64,
}

struct SearchShared {
    best: AtomicUsize,
    done: AtomicBool,
    timed_out: AtomicBool,
    deadline: Option<Instant>,
    target: usize,
}

impl SearchShared {
    fn check_deadline(&self) -> bool {
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.timed_out.store(true, Ordering::Relaxed);
                self.done.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

struct Worker<'a> {
    g: &'a CompatGraph,
    shared: &'a SearchShared,
    best_size: usize,
    best_clique: Vec<u32>,
    nodes: u64,
}

impl<'a> Worker<'a> {
    fn new(g: &'a CompatGraph, shared: &'a SearchShared) -> Self {
        Self {
            g,
            shared,
            best_size: 0,
            best_clique: Vec::new(),
            nodes: 0,
        }
    }

    fn global_best(&self) -> usize {
        self.shared.best.load(Ordering::Relaxed)
    }

    fn record(&mut self, clique: &[u32]) {
        let len = clique.len();
        let prev = self.shared.best.fetch_max(len, Ordering::Relaxed);
        if len > prev {
            self.best_size = len;
            self.best_clique = clique.to_vec();
            if len >= self.shared.target {
                self.shared.done.store(true, Ordering::Relaxed);
            }
        }
    }

    /// Greedy sequential coloring of `p` in ascending vertex order; the
    /// output lists (vertex, color) with colors ascending, so branching
    /// walks it backwards.
    fn color_sort(&self, p: &VertexSet) -> Vec<(u32, usize)> {
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in p.iter() {
            let mut placed = false;
            for class in classes.iter_mut() {
                if !self.g.conflicts_with(v, class) {
                    class.insert(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut class = VertexSet::empty(self.g.vertex_count());
                class.insert(v);
                classes.push(class);
            }
        }
        let mut order = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            for v in class.iter() {
                order.push((v, ci + 1));
            }
        }
        order
    }

    fn expand(&mut self, p: &mut VertexSet, clique: &mut Vec<u32>) {
        self.nodes += 1;
        if self.shared.check_deadline() {
            return;
        }
        if self.shared.done.load(Ordering::Relaxed) {
            return;
        }
        let order = self.color_sort(p);
        let mut child = VertexSet::empty(self.g.vertex_count());
        for idx in (0..order.len()).rev() {
            let (v, color) = order[idx];
            if clique.len() + color <= self.global_best() {
                return;
            }
            self.g.restrict_neighbors(v, p, &mut child);
            clique.push(v);
            if clique.len() > self.global_best() {
                self.record(clique);
            }
            if !child.is_empty() && !self.shared.done.load(Ordering::Relaxed) {
                let mut sub = child.clone();
                self.expand(&mut sub, clique);
            }
            clique.pop();
            if self.shared.done.load(Ordering::Relaxed) {
                return;
            }
            p.remove(v);
        }
    }
}

struct SearchOutcome {
    best: usize,
    witness: Vec<u32>,
    nodes: u64,
    timed_out: bool,
}

/// The bound that caps the search: the s-subset bound always applies, and
/// the l1-shift bound replaces it when its hypothesis holds and it is
/// smaller. Only these two are used for pruning.
fn solver_upper_bound(n: u32, k: u32, ell: &LSpec) -> UsedBound {
    let rw = bound_rw(n as u64, ell.s() as u64).expect("1 <= s <= k <= n for solver instances");
    let mut used = UsedBound {
        name: rw.name,
        value: rw.value,
    };
    if ell.is_positive() {
        if let Ok(main) = bound_main(n as u64, k as u64, ell) {
            if main.applicable == Applicability::Yes && main.value < used.value {
                used = UsedBound {
                    name: main.name,
                    value: main.value,
                };
            }
        }
    }
    used
}

fn run_search(g: &CompatGraph, opts: &SolveOptions, target: usize) -> SearchOutcome {
    let v_count = g.vertex_count();
    let shared = SearchShared {
        best: AtomicUsize::new(0),
        done: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        deadline: opts.timeout.map(|t| Instant::now() + t),
        target,
    };

    // Root: either anchored on vertex 0 (the block {1,...,k}) or the full
    // vertex set.
    let prefix: Vec<u32> = if opts.anchor { vec![0] } else { Vec::new() };
    let mut root = if opts.anchor {
        let full = VertexSet::full(v_count);
        let mut p = VertexSet::empty(v_count);
        g.restrict_neighbors(0, &full, &mut p);
        debug_assert!(!p.contains(0), "the edge predicate is irreflexive");
        p
    } else {
        VertexSet::full(v_count)
    };

    let mut seed_witness = Vec::new();
    if opts.anchor && v_count > 0 {
        shared.best.store(1, Ordering::Relaxed);
        seed_witness = vec![0];
        if 1 >= target {
            shared.done.store(true, Ordering::Relaxed);
        }
    }
    shared.check_deadline();

    let workers = opts.workers.max(1);
    let mut results: Vec<(usize, Vec<u32>, u64)> = Vec::new();

    if shared.done.load(Ordering::Relaxed) {
        // target already met or timed out before starting
    } else if workers == 1 {
        let mut w = Worker::new(g, &shared);
        let mut clique = prefix.clone();
        w.expand(&mut root, &mut clique);
        results.push((w.best_size, w.best_clique, w.nodes));
    } else {
        // Snapshot the root branches in processing order, then let workers
        // pull them from a shared counter. Branch i explores the cliques
        // containing its vertex and none of the earlier-processed ones, so
        // the branches partition the search space.
        struct Branch {
            v: u32,
            color: usize,
            cand: VertexSet,
        }
        let seed = Worker::new(g, &shared);
        let order = seed.color_sort(&root);
        let mut branches = Vec::with_capacity(order.len());
        {
            let mut p = root.clone();
            for idx in (0..order.len()).rev() {
                let (v, color) = order[idx];
                let mut cand = VertexSet::empty(v_count);
                g.restrict_neighbors(v, &p, &mut cand);
                branches.push(Branch { v, color, cand });
                p.remove(v);
            }
        }
        let counter = AtomicUsize::new(0);
        let counter_ref = &counter;
        let branches = &branches;
        let shared_ref = &shared;
        let prefix_ref = &prefix;
        results = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(move || {
                        let mut w = Worker::new(g, shared_ref);
                        loop {
                            if shared_ref.done.load(Ordering::Relaxed) {
                                break;
                            }
                            let i = counter_ref.fetch_add(1, Ordering::Relaxed);
                            if i >= branches.len() {
                                break;
                            }
                            let b = &branches[i];
                            if prefix_ref.len() + b.color <= shared_ref.best.load(Ordering::Relaxed)
                            {
                                continue;
                            }
                            let mut clique = prefix_ref.clone();
                            clique.push(b.v);
                            if clique.len() > w.global_best() {
                                w.record(&clique);
                            }
                            let mut p = b.cand.clone();
                            w.expand(&mut p, &mut clique);
                        }
                        (w.best_size, w.best_clique, w.nodes)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
    }

    let optimum = shared.best.load(Ordering::Relaxed);
    let mut witness = seed_witness;
    let mut nodes = 0;
    for (size, clique, n) in results {
        nodes += n;
        if size == optimum && witness.len() != optimum {
            witness = clique;
        }
    }
    // Every increase of the shared best is mirrored into that worker's
    // local clique, so a witness of the final size always exists.
    debug_assert_eq!(witness.len(), optimum, "optimum without a witness");
    SearchOutcome {
        best: optimum,
        witness,
        nodes,
        timed_out: shared.timed_out.load(Ordering::Relaxed),
    }
}

/// Computes the exact maximum size of an L-intersecting k-uniform family
/// over [n], with a witness of that size.
pub fn max_family(
    n: u32,
    k: u32,
    ell: &LSpec,
    opts: &SolveOptions,
) -> Result<SolveCertificate, SolverError> {
    let started = Instant::now();
    let g = CompatGraph::build(n, k, ell, opts.vertex_cap)?;
    let v_count = g.vertex_count();

    let ub = solver_upper_bound(n, k, ell);
    let target = ub.value.to_usize().map_or(v_count, |b| b.min(v_count));

    let outcome = run_search(&g, opts, target);
    let witness = g.vertices_to_family(&outcome.witness);
    let elapsed = started.elapsed();

    if outcome.timed_out {
        return Err(SolverError::Timeout {
            best: outcome.best,
            witness,
            nodes: outcome.nodes,
            elapsed,
        });
    }

    assert!(witness.is_uniform(k), "witness must be k-uniform");
    assert!(
        witness.is_l_intersecting(ell),
        "witness must be L-intersecting"
    );
    assert_eq!(
        witness.len(),
        outcome.best,
        "witness must realize the optimum"
    );
    debug_assert!(
        BigUint::from(outcome.best) <= ub.value,
        "optimum exceeded the theorem bound"
    );

    Ok(SolveCertificate {
        optimum: outcome.best as u64,
        witness,
        nodes_explored: outcome.nodes,
        upper_bound_used: UsedBound {
            name: ub.name,
            value: ub.value,
        },
        elapsed,
    })
}

struct EnumState<'a> {
    g: &'a CompatGraph,
    target: usize,
    cap: usize,
    out: Vec<Vec<u32>>,
    complete: bool,
    nodes: u64,
    deadline: Option<Instant>,
    stopped: bool,
}

impl EnumState<'_> {
    fn color_sort(&self, p: &VertexSet) -> Vec<(u32, usize)> {
        // same greedy coloring as the optimizer, duplicated here to keep the
        // enumerator self-contained
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in p.iter() {
            let mut placed = false;
            for class in classes.iter_mut() {
                if !self.g.conflicts_with(v, class) {
                    class.insert(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut class = VertexSet::empty(self.g.vertex_count());
                class.insert(v);
                classes.push(class);
            }
        }
        let mut order = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            for v in class.iter() {
                order.push((v, ci + 1));
            }
        }
        order
    }

    fn expand(&mut self, p: &mut VertexSet, clique: &mut Vec<u32>) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.complete = false;
                self.stopped = true;
                return;
            }
        }
        if clique.len() == self.target {
            if self.out.len() == self.cap {
                self.complete = false;
                self.stopped = true;
            } else {
                self.out.push(clique.clone());
            }
            return;
        }
        if clique.len() + p.count() < self.target {
            return;
        }
        let order = self.color_sort(p);
        let mut child = VertexSet::empty(self.g.vertex_count());
        for idx in (0..order.len()).rev() {
            let (v, color) = order[idx];
            // strict: equality may still reach the target
            if clique.len() + color < self.target {
                return;
            }
            self.g.restrict_neighbors(v, p, &mut child);
            clique.push(v);
            let mut sub = child.clone();
            self.expand(&mut sub, clique);
            clique.pop();
            if self.stopped {
                return;
            }
            p.remove(v);
        }
    }
}

/// Lists every maximum family of the instance, deduplicated as sets of
/// blocks and capped at `cap` families. Enumeration itself never uses the
/// symmetry anchor; the internal optimum computation may.
pub fn enumerate_maximum(
    n: u32,
    k: u32,
    ell: &LSpec,
    cap: usize,
    opts: &SolveOptions,
) -> Result<Enumeration, SolverError> {
    let started = Instant::now();
    let g = CompatGraph::build(n, k, ell, opts.vertex_cap)?;
    let v_count = g.vertex_count();

    let ub = solver_upper_bound(n, k, ell);
    let target = ub.value.to_usize().map_or(v_count, |b| b.min(v_count));

    let size_pass = run_search(&g, opts, target);
    if size_pass.timed_out {
        return Err(SolverError::Timeout {
            best: size_pass.best,
            witness: g.vertices_to_family(&size_pass.witness),
            nodes: size_pass.nodes,
            elapsed: started.elapsed(),
        });
    }
    let optimum = size_pass.best;

    let mut state = EnumState {
        g: &g,
        target: optimum,
        cap,
        out: Vec::new(),
        complete: true,
        nodes: size_pass.nodes,
        deadline: opts.timeout.map(|t| Instant::now() + t),
        stopped: false,
    };
    let mut root = VertexSet::full(v_count);
    let mut clique = Vec::new();
    if optimum > 0 {
        state.expand(&mut root, &mut clique);
    }

    let mut families: Vec<Family> = state
        .out
        .iter()
        .map(|vertices| g.vertices_to_family(vertices))
        .collect();
    families.sort_by_key(|f| f.sorted_blocks());
    for f in &families {
        debug_assert!(f.is_uniform(k) && f.is_l_intersecting(ell));
    }

    Ok(Enumeration {
        optimum: optimum as u64,
        families,
        complete: state.complete,
        nodes_explored: state.nodes,
    })
}
