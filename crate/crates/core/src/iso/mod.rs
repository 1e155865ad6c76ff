//! Isomorphism tools for small graphs: certificates, the coalition-graph
//! catalog, subgraph containment and matchings.

pub mod catalog;
pub mod certificate;
pub mod subgraph;

pub use catalog::{classify, is_unknown, star_name, star_order, Catalog, CatalogEntry, Classifier};
pub use certificate::{canonical_form, certificate, is_isomorphic, Certificate, MAX_CERT_ORDER};
pub use subgraph::{contains_subgraph, matching_number};
