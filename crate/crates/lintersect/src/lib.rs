//! Exact workbench for k-uniform, L-intersecting set families.
//!
//! A family of sets over the ground set `[n] = {1, ..., n}` is
//! *L-intersecting* when every pairwise intersection of distinct members has
//! a size belonging to `L`, and *k-uniform* when every member has exactly
//! `k` elements. This crate provides:
//!
//! - the ground-set/family data model with the intersection predicates
//!   ([`family`]),
//! - executable forms of the Helly, union-size and trace lemmas, plus the
//!   cover decomposition they support ([`lemmas`]),
//! - exact evaluation of the classical upper bounds on the family size,
//!   each with its applicability condition ([`bounds`]),
//! - generators for the known extremal families: stars, sunflowers and the
//!   lines of PG(2,q) ([`constructions`], [`gf`]),
//! - exact maximum computation via branch-and-bound clique search on the
//!   compatibility graph, exhaustive optimum enumeration and a small-case
//!   conjecture scan ([`solver`]).
//!
//! All arithmetic that can exceed machine words (binomials, rational bound
//! values) is exact; nothing is ever rounded except by an explicit floor.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod family;
pub mod gf;
pub mod io;
pub mod lemmas;
pub mod solver;

pub(crate) mod serde_util;
pub(crate) mod util;

pub use error::{CoreError, ParseError};
pub use family::{BlockSet, Family, GroundSet, LSpec};
