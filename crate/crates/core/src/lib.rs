//! Finite lattice analysis centred on CD-independent (laminar) subsets,
//! with two concrete sources of lattices: closure lattices of circle
//! families in the plane and island systems on rectangular boards.
//!
//! Modules:
//! - [`lattice`]: bounded lattices over dense indices, text format I/O;
//! - [`props`]: distributivity-family property checks with witnesses;
//! - [`cd`]: CD-independent subsets, bounds, enumeration, and structure
//!   verification for maximal ones;
//! - [`circles`]: circle families, convex-hull closure, and their lattices
//!   of closed sets;
//! - [`islands`]: islands of a height function, laminarity, counting and
//!   extremal constructions;
//! - [`gen`]: suite generation — posets, downset lattices, seeded random
//!   circle families, and a catalog of named lattices.

pub mod bitset;
pub mod cd;
pub mod circles;
pub mod gen;
pub mod islands;
pub mod lattice;
pub mod props;
pub mod rng;

pub use bitset::ElemSet;
pub use lattice::{Lattice, LatticeError};
