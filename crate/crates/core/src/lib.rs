//! Algorithms for polyhedral (3-connected planar) graphs.
//!
//! Graphs have at most 64 vertices and store one `u64` adjacency row per
//! vertex. Everything here is `no_std` with `alloc`; file formats, caching and
//! parallel drivers live in the companion `polyhedra` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod canon;
pub mod catalog;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod minor;
pub mod planar;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6};
