//! Hierarchical rectangular dissections of order `k`.
//!
//! The crate ties together four views of the same objects:
//!
//! * [`perm`]: permutations, the Baxter and simple predicates, blocks and
//!   substitution decomposition.
//! * [`floorplan`]: mosaic floorplans on an integer grid, corner deletions and
//!   the floorplan/Baxter-permutation bijection.
//! * [`gentree`]: skewed generating trees of order `k`.
//! * [`counting`]: exact counts of `HRD_k` dissections with `n` rooms, plus
//!   brute-force oracles.
//!
//! [`lowerbound`] holds the insertion scheme and the irreducible-growth
//! construction, and [`cli`] is the command-line surface.

pub mod cli;
pub mod counting;
pub mod error;
pub mod floorplan;
pub mod gentree;
pub mod lowerbound;
pub mod perm;

pub use error::{Error, Result};
pub use floorplan::MosaicFloorplan;
pub use gentree::{GenTree, OrderK};
pub use perm::Permutation;
