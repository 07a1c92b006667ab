//! Link labeling and tabulated particle paths.
//!
//! The four future links carry two namings: T/X/Y/Z over spacetime and
//! E/R/G/B over internal charge space. Particle tables list per-constituent
//! (tick, signature) schedules; validators check the rotating, exchange, and
//! constant-signature structures those tables are meant to realize, flagging
//! deviations instead of failing.

mod label;
mod table;
mod validate;

pub use label::{
    signature_label, InternalAxis, LabelOutcome, Sign, SignPattern, SpacetimeAxis,
    SpatialSignature,
};
pub use table::{
    builtin_table, Constituent, ParticleKind, ParticlePath, PathEntry, TickSignature,
};
pub use validate::{builtin_known_anomalies, validate, Anomaly, ValidationReport};
