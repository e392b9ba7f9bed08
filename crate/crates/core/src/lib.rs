//! Split interval witnesses for `box(G) <= chi(G)`.
//!
//! The library builds, for a proper coloring with one witness set per vertex,
//! one split interval supergraph per color class whose edge sets intersect to
//! exactly `E(G)`, realizes each as an interval model and assembles the
//! product into a box representation. Everything it produces is re-verified,
//! and the [`oracle`] module computes exact boxicity on small graphs as
//! independent ground truth.

pub mod circulant;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod realization;
pub mod recognition;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{generate, Graph, VertexSet};
