//! Graph classes between 3- and 4-connectivity, the reduction operations that
//! stay inside them, and chains of such reductions down to small base graphs.

pub mod bits;
pub mod chains;
pub mod connectivity;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod operations;

pub use graph::{Edge, Graph, GraphError};
