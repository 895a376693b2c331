//! Exact computation of the graph differential `∂(G) = max |B(S)| - |S|`,
//! the `R(G)` operator, the classical invariants around them, and a harness
//! that checks structural statements about them over families and a census
//! of small connected graphs.

pub mod canon;
pub mod codec;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod roper;
pub mod solvers;
pub mod vset;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, GraphBuilder};
pub use roper::{build_r, RGraph};
pub use solvers::SearchOptions;
pub use vset::VertexSet;
