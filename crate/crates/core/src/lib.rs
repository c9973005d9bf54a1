//! Arc-connectedness of finite topological graphs.
//!
//! Graphs are multigraphs with loops and parallel edges, considered up to
//! homeomorphism. The crate decides n-arc-connectedness by exhausting point
//! placements, classifies graphs against the six ω-ac shapes, and enumerates
//! small graphs for exhaustive searches.

pub mod arc;
pub mod canon;
pub mod classify;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod planar;
pub mod search;
pub mod shapes;
pub mod text;

pub use arc::{ac_number, is_n_ac, AcNumber, AcProfile, ArcWitness, Placement};
pub use canon::{are_homeomorphic, are_isomorphic, canonical_form, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Multigraph, VertexId};
pub use classify::{homeo_class, is_7ac_theorem, HomeoClass};
pub use text::{parse_graph, to_text};
