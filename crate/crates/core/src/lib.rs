//! Search trees on graphs (elimination trees / maximal tubings), rotations
//! between them, projections onto connected subgraphs, and the constructions
//! showing that rotation distance on `n`-vertex tree graphs is `Θ(n log n)`
//! in the worst case.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod projection;
pub mod rotation;
pub mod rotation_graph;
pub mod sampling;
pub mod search_tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, Vertex, VertexSet};
pub use rotation::{Rotation, RotationSequence};
pub use search_tree::{Ranking, SearchTree, Tubing};
