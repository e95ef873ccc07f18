pub mod certificate;
pub mod decision;
pub mod error;
pub mod families;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod io;
pub mod limits;
pub mod matching;
pub mod verify;
pub mod vertex_classes;
pub mod vertex_set;

#[cfg(test)]
mod testing;

pub use certificate::{Certificate, Evidence, ExhaustionMethod, UnicyclicRoute, Verdict};
pub use decision::{decide, has_two_disjoint_mis, Strategy};
pub use error::{Error, Result};
pub use graph::{Bipartiteness, Edge, Girth, Graph, VertexMap};
pub use independence::OmegaFamily;
pub use limits::Limits;
pub use matching::Matching;
pub use vertex_set::{VertexSet, MAX_ORDER};
