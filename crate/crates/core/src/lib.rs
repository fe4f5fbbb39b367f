//! Generalized splines on edge-labeled graphs.
//!
//! A graph `G` whose edges carry ideals `α(uv)` of a commutative ring `R`
//! determines the ring `R_G` of splines: vertex labelings `p` with
//! `p_u - p_v ∈ α(uv)` on every edge. This crate computes with `R_G` over
//! `Z`, `Z/m` and `Q[x]`.

pub mod analysis;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod gkm;
pub mod graph;
pub mod io;
pub mod random;
pub mod ring;
pub mod spline;
pub mod tree;

pub use analysis::{CheckMode, Claim, DecompositionReport, SplineSet};
pub use construct::GeneratingFamily;
pub use error::{Error, Result};
pub use gkm::{GkmMatrix, ReducedSystem};
pub use graph::{Edge, EdgeInput, EdgeLabeledGraph};
pub use ring::{Ideal, Modulus, QPoly, Residue, RingElement, RingSpec};
pub use spline::{verify, Spline, VerificationReport, Violation};
pub use tree::{CycleDescriptor, TreeSkeleton};
