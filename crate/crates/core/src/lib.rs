//! Online edge coloring with advice.
//!
//! The crate is organized around the life of one instance:
//!
//! * [`graph`]: edge streams, degeneracy orderings, generators, gadgets.
//! * [`coloring`]: offline engines (exact search, Vizing, König).
//! * [`advice`]: the oracle that turns a stream into per-edge advice.
//! * [`online`]: online algorithms and the simulator that runs them.
//! * [`adversary`]: executable lower-bound games.

pub mod advice;
pub mod coloring;
pub mod graph;
pub mod online;
pub mod adversary;
