//! Exact arithmetic for quaternion-weighted path sums on checkerboard
//! lattices, together with the lattice constructions the walks live on and
//! validators for tabulated particle paths.
//!
//! Everything combinatorial is computed over dyadic rationals, so results
//! are exact and byte-for-byte reproducible; floating point enters only at
//! the final evaluation step.

pub mod algebra;
pub mod checkerboard;
pub mod error;
pub mod lattice;
pub mod particles;
pub mod selfcheck;

pub use error::Error;
