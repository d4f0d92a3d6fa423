mod bits;
pub mod chromatic;
pub mod cli;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod io;
pub mod minor;
pub mod planarity;
pub mod topo;

pub use error::{GraphError, Result};
pub use graph::{EditStep, Graph, LayerDecomposition, Vertex};
