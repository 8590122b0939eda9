//! Construction and analysis of fullerene graphs: planar cubic graphs with
//! pentagonal and hexagonal faces, exact longest-cycle search at desk scale,
//! and a mechanized charge-redistribution audit that certifies a lower bound
//! on the longest cycle length instance by instance.
//!
//! The crate is organized along the pipeline:
//!
//! * [`graph`] — rotation systems, face tracing and validation.
//! * [`generate`] — deterministic nanotube and buckyball constructions.
//! * [`io`] — the `planar_code` binary format and the JSON debug format.
//! * [`cycle`] — simple cycles stored in canonical form.
//! * [`search`] — exact branch-and-bound longest-cycle search, an
//!   independent brute-force oracle, and a seeded heuristic.
//! * [`classify`] — black/white vertex and face coloring relative to a
//!   cycle, structural checks, and the face-traversal pattern catalogue.
//! * [`discharge`] — initial charges, transfer rules A and B, the final
//!   audit, and the cycle-length bound derivation.
//! * [`reroute`] — cycle-improvement moves: face segment swaps and a
//!   bounded exhaustive local reroute.
//! * [`pipeline`] — the per-instance verification pipeline and its
//!   machine-readable report rows.

pub mod classify;
pub mod cycle;
pub mod discharge;
pub mod generate;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod reroute;
pub mod search;

mod bitset;

pub use cycle::CycleState;
pub use graph::{Face, FullereneGraph};
