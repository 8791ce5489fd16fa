//! Certified colorings of (P5, 4-wheel)-free graphs using at most ⌊3ω/2⌋ colors.
//!
//! Every atom of the clique-cutset decomposition is shown perfect, quasi-line,
//! or nice (three stable sets whose removal drops ω by two), and each claim
//! is re-checked before it is used.

pub mod error;
pub mod graph;
pub mod detect;
pub mod decompose;
pub mod c5;
pub mod harness;
pub mod nice;
pub mod color;

pub use error::{Error, Result};
pub use graph::{blowup, Blowup, BlowupSpec, Graph, Part, Relation, VertexSet, VERTEX_CAP};
