//! Hitting and packing cycles: Feedback Vertex Set and Cycle Packing.

pub mod fvs;
pub mod packing;

pub use fvs::{fvs, mif_dp, MifOutcome};
pub use packing::{cycle_packing, packing_caps, packing_dp, shortcut_to_induced, CROSSING_BOUND};
