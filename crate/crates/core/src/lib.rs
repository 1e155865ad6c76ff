//! Connected coalition partitions of small graphs.
//!
//! Two disjoint vertex sets form a *connected coalition* when neither is a
//! connected dominating set (CDS) but their union is. A *connected coalition
//! partition* is a vertex partition in which every part is either a
//! single-vertex CDS or forms a coalition with another part; its *coalition
//! graph* has one vertex per part and an edge per coalition. This crate
//! enumerates such partitions exhaustively, classifies their coalition
//! graphs, computes the connected coalition number `CC(G)`, and checks the
//! known structural results for subcubic graphs against the enumeration.
//!
//! Modules, bottom up:
//!
//! - [`graph`], [`graph6`], [`named`], [`corpus`]: bitset graphs, generators,
//!   serialisation and isomorph-free corpora.
//! - [`domination`]: dominating / connected / CDS predicates.
//! - [`iso`]: canonical certificates, the coalition-graph catalog, subgraph
//!   containment and matching number.
//! - [`coalition`]: partition validation, enumeration, coalition graphs and `CC(G)`.
//! - [`verify`]: claim-by-claim verification suites and witness search.
//! - [`tables`]: reference count tables and their reproduction.
//! - [`commands`]: the command-line front end, independent of argument parsing.

pub mod coalition;
pub mod commands;
pub mod corpus;
pub mod domination;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod named;
pub mod tables;
pub mod verify;
mod vertex_set;

pub use coalition::{
    build_ccg, cc_number, classify_and_count, enumerate_partitions, is_coalition,
    validate_partition, CoalitionGraph, EnumerationConfig, EnumerationReport, Mode, Partition,
};
pub use error::{Error, Result};
pub use graph::{mobius_ladder, prism, Graph};
pub use named::named_graph;
pub use vertex_set::VertexSet;
