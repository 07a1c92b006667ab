//! Quaternion-weighted path sums on the 2-D checkerboard and the 4-D
//! lightcone lattice.
//!
//! Paths move along future links only. Every direction change multiplies the
//! running weight on the right by a group unit from {±1, ±i, ±j, ±k}, and
//! amplitudes are collected as exact polynomials in the corner count before
//! any numeric coupling is substituted.

mod direction;
mod engine;
mod group;
mod numeric;
mod poly;

pub use direction::{future_links, turn_factor, Dim, Direction, TurnFactor};
pub use engine::{
    brute_force, brute_force_all, brute_force_with_budget, count_paths, count_paths_all,
    position_key, propagate, propagate_all, PathQuery, PositionKey, WeightConvention,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use group::{
    left_translators, lightcone_links, link_group_closure, right_mul_unit, two_link_products,
    Axis, GroupUnit,
};
pub use numeric::{
    effective_step_length, evaluate, phase, EvaluationParams, NumericAmplitude,
};
pub use poly::AmplitudePoly;
