//! Interconnection-network topologies, h-extra connectivity, and
//! conditional diagnosability under the comparison model.

pub mod bitset;
pub mod budget;
pub mod diagnosis;
pub mod error;
pub mod extra;
pub(crate) mod flow;
pub mod graph;
pub mod iso;
pub mod perm;
pub mod topology;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
