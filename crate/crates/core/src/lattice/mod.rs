//! Lattice families (Z^n, D_n, glued cosets, HyperDiamond), root
//! enumeration, neighbor shells, and the decomposition scan harness.

mod decompose;
mod neighbors;
mod point;
mod roots;
mod spec;

pub use decompose::{decomposition_harness, DecompositionReport, IdentityCheck};
pub use neighbors::{is_extension_closed, nearest_neighbors, next_nearest_4hd};
pub use point::{minkowski_norm, LatticePoint};
pub use roots::{e8_roots, RootList};
pub use spec::LatticeSpec;
