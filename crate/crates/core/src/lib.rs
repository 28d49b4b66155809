//! Decomposition-based 3-coloring for graphs with no induced subdivision
//! of K4, no diamond and no bowtie.

pub mod coloring;
pub mod cutsets;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod named;
pub mod patterns;
pub mod pipeline;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::Graph;
