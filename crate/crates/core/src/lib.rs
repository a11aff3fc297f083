//! Perfect matchings, 3-edge-colourings and Berge covers of cubic graphs.

pub mod arrays;
pub mod colouring;
pub mod covers;
pub mod cuts;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{CubicGraph, EdgeId, Graph, Subgraph, Vertex};
