//! Linear and centred colourings of graphs.
//!
//! The crate has three layers:
//!
//! - [`graph`] and [`graph6`]: simple undirected graphs, seeded `G(n, p)`
//!   sampling (including two-round exposure), graph6 I/O, components and
//!   diameters.
//! - [`chromatic`]: verifiers for proper, linear and centred colourings that
//!   return explicit witnesses, and exact solvers for the chromatic number,
//!   the linear chromatic number and tree-depth on small graphs.
//! - [`certificate`]: the pipeline that turns a colouring of a random graph
//!   into a checkable *bad path* (a path with no centre), proving that the
//!   colouring is not linear: set-pairing, pair-closed core peeling, an
//!   expansion check and a Pósa rotation-extension Hamilton path search.
//!
//! [`experiments`] wraps these in seeded, order-deterministic Monte Carlo
//! harnesses that write CSV, and [`cli`] exposes everything to the `lincol`
//! binary.

pub mod bitset;
pub mod certificate;
pub mod chromatic;
pub mod cli;
mod error;
pub mod experiments;
pub mod graph;
pub mod graph6;
pub mod seed;

pub use error::{Error, Result};
pub use graph::Graph;
pub use seed::Seed;
