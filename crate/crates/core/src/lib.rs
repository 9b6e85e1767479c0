//! Graph-associahedra: tubes and tubings of simple graphs, their face
//! lattices, exact polytopal realizations, and the minimally blown-up
//! Coxeter complexes tiled by them.

pub mod catalog;
pub mod coxeter;
mod error;
pub mod exact;
pub mod graph;
pub mod lattice;
pub mod poset;
pub mod promotion;
pub mod realization;

pub use error::{Error, Result};
pub use graph::{Graph, NodeSet, Tube, TubeRelation};
pub use lattice::{face_poset, FaceLattice, Tubing};
