//! Exact scalar and hypercomplex arithmetic: dyadic rationals, quaternions
//! over dyadics, and plain 8-component octonion coordinate vectors.

mod dyadic;
mod octonion;
mod quaternion;

pub use dyadic::Dyadic;
pub use octonion::OctonionVector;
pub use quaternion::Quaternion;
