//! Parameterized cycle problems on unit disk and unit square graphs.
//!
//! Point clouds are turned into clique-grid instances (a graph plus a map of
//! its vertices into grid cells). The solvers for Exact k-Cycle, Longest Path,
//! Longest Cycle, Feedback Vertex Set and Cycle Packing all work over that
//! structure, and every answer can be checked against the brute-force oracles
//! in [`oracle`].

pub mod cliquegrid;
pub mod cycles;
pub mod decomp;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod graph;
pub mod hitting;
pub mod kernel;
pub mod oracle;
pub mod witness;

pub use error::{Error, Result};
