//! Exact maximum L-intersecting k-uniform families via maximum clique
//! search on the compatibility graph, plus exhaustive optimum enumeration
//! and the small-case conjecture scan.

mod graph;
mod scan;
mod search;

use std::time::Duration;

use num_bigint::BigUint;
use thiserror::Error;

use crate::family::Family;

pub use graph::CompatGraph;
pub use scan::{
    scan_conjecture, KernelSizeCount, KernelVerdict, ScanEntry, ScanOptions, ScanReport, ScanRow,
};
pub use search::{
    enumerate_maximum, max_family, Enumeration, SolveCertificate, SolveOptions, UsedBound,
};

/// Default cap on the number of k-subset vertices.
pub const DEFAULT_VERTEX_CAP: u64 = 1 << 20;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("C({n},{k}) = {vertices} k-subsets exceed the vertex cap {cap}")]
    VertexCapExceeded {
        n: u32,
        k: u32,
        vertices: BigUint,
        cap: u64,
    },

    #[error("k must satisfy 1 <= k <= n (k = {k}, n = {n})")]
    BadUniformity { k: u32, n: u32 },

    #[error("L contains {ell}, but distinct {k}-sets intersect in at most {max} elements")]
    EllTooLarge { ell: u32, k: u32, max: u32 },

    #[error("L must contain only positive integers for this operation")]
    LNotPositive,

    #[error(
        "timed out after {elapsed:?}; best family found has {best} blocks (a lower bound, NOT proven optimal)"
    )]
    Timeout {
        best: usize,
        witness: Family,
        nodes: u64,
        elapsed: Duration,
    },

    #[error(
        "hypothesis violated: n must exceed k^2 - k + 1 = {threshold} (got n_from = {n_from})"
    )]
    HypothesisViolated { n_from: u32, threshold: u64 },

    #[error("empty scan range: n_from = {from} > n_to = {to}")]
    EmptyRange { from: u32, to: u32 },
}
