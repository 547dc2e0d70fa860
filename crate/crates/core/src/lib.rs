//! Multigraph toolkit for grid immersions in walls.
//!
//! The crate is built around a small set of combinatorial objects:
//! multigraphs with stable edge identities, immersion maps, walls and
//! their drawing geometry, tree decompositions, edge-disjoint path
//! bundles, and the edge-lifting rewrite. On top of those sits a
//! pipeline that grows a rooted wall immersion, reduces it to a fin
//! system, and routes a grid through the wall.
//!
//! Everything here is deterministic: iteration is over ordered
//! collections, searches use canonical tie-breaking, and the only
//! randomness is an explicit seed parameter on the fixture generators.
//!
//! The crate is `no_std` (alloc only); IO and file formats live in the
//! companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod connectivity;
// pub mod generators;
pub mod immersion;
// pub mod lifting;
pub mod multigraph;
// pub mod pipeline;
pub mod treedecomp;
// pub mod wallgeom;

pub use multigraph::{EdgeId, MultiGraph, Vertex, Walk};
