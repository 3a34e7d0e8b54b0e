//! Exhaustive and sampled verification over small topologies.
//!
//! [`enumerate`] lists every labelled topology on up to four points (and,
//! through the `X × E` correspondence, every soft topology with at most four
//! point-parameter pairs). [`theorems`] states each transfer claim between
//! a crisp system and its soft topology as a predicate and sweeps it over
//! those enumerations. [`fixtures`] carries the worked examples.

pub mod enumerate;
pub mod fixtures;
pub mod random;
pub mod theorems;

pub use enumerate::{
    enumerate_crisp_topologies, enumerate_crisp_topologies_in, enumerate_soft_topologies, enumerate_systems,
};
pub use fixtures::{fixture, fixtures, Fixture};
pub use random::{random_crisp_topology, random_soft_topology};
pub use theorems::{
    evaluate, search_converse_counterexample, verify_theorem, Counterexample, Instance, Status, SweepBounds, SweepMode,
    TheoremId, VerificationOutcome,
};
