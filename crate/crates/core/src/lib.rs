//! Edge intersection hypergraphs.
//!
//! `EI(H)` keeps the vertex set of `H` and takes as edges every intersection
//! `e1 ∩ e2` of two distinct edges with at least two vertices. This crate
//! computes the operator and its iterates, generates the standard uniform
//! families, checks closed forms for their iterates, builds 3-uniform
//! hypergraphs whose EI hypergraph is a prescribed tree, and decides by
//! search whether a small graph admits such a hypergraph at all.
//!
//! ```
//! use eihyper::{ei, Hypergraph};
//!
//! let h = Hypergraph::from_labels(&[1, 2, 3, 4], &[&[1, 2, 3], &[2, 3, 4]])?;
//! assert_eq!(ei(&h), Hypergraph::from_labels(&[1, 2, 3, 4], &[&[2, 3]])?);
//! # Ok::<(), eihyper::Error>(())
//! ```

pub mod decider;
pub mod digraph;
pub mod digraph_ops;
pub mod ei;
pub mod error;
pub mod exec;
pub mod format;
pub mod generators;
pub mod helly;
pub mod hypergraph;
pub mod laws;
pub mod random;
pub mod realizer;
pub mod suite;

pub use decider::{
    decide_3uniform, decide_3uniform_with, decide_exhaustive, DeciderConfig, DecisionOutcome,
    Verdict,
};
pub use digraph::Digraph;
pub use digraph_ops::{check_neighborhood_identity, neighborhood_hypergraph, NeighborhoodKind};
pub use ei::{augment_linear, ei, ei_iterate, ei_number, satisfies_necessary_condition};
pub use error::{Error, Result};
pub use exec::Execution;
pub use generators::{generate, generate_graph, Family, FamilySpec};
pub use helly::{is_helly, is_helly_bruteforce};
pub use hypergraph::{Edge, Graph, Hypergraph, VertexId};
pub use laws::{verify_law, LawId, LawParams, LawReport, LawValue};
pub use realizer::{realize_tree, RealizationCertificate, RealizationStats};
