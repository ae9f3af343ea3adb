//! Exact solvers and certified constructions relating the independence
//! number of a graph to the order of its largest complete minor.
//!
//! The crate provides:
//!
//! - compact graph and vertex-set types ([`Graph`], [`VertexSet`]) with
//!   graph6 I/O ([`graph6`]) and deterministic generators ([`generate`]);
//! - exact solvers for independence, clique, chromatic number, degeneracy,
//!   and complete-minor detection with verifiable certificates ([`exact`]);
//! - the connected dominating pair construction and the peeling procedure
//!   built on it, which outputs an auditable certificate ([`dominating`],
//!   [`peeling`]);
//! - inequality checking over graph corpora, exhaustive small-graph
//!   enumeration, and a seeded tightness search ([`verify`], [`enumerate`]).
//!
//! Everything is deterministic: ties break toward smaller vertex indices,
//! and all randomness flows from caller-supplied seeds.

pub mod bitset;
pub mod dominating;
pub mod enumerate;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod peeling;
pub mod verify;

pub use bitset::VertexSet;
pub use dominating::DominatingPair;
pub use exact::{ExactStats, Limits, MinorEmbedding};
pub use graph::{Graph, GraphError, Relabeling, INFINITY};
pub use peeling::{BoundParams, PeelingCertificate, Rational};
pub use verify::BoundReport;
