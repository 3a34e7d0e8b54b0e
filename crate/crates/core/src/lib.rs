//! Finite soft topologies.
//!
//! A soft set over a universe `X` with parameters `E` assigns a subset of
//! `X` to every parameter. This crate provides the soft-set algebra, crisp
//! and soft topologies with subbasis closure, the two constructions that
//! turn a system of crisp topologies into a soft topology (the full product,
//! "Formula 1", and the constant single-set topology, "Formula 2"), checkers
//! for the separation axioms T0 through T4 in both flavors, and a lab that
//! enumerates every small topology to verify the transfer theorems between
//! the two worlds or to find counterexamples to their converses.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod context;
pub mod error;
pub mod generators;
pub mod lab;
pub mod separation;
pub mod set;
pub mod topology;

pub use context::Context;
pub use error::Error;
pub use generators::{
    associated, extract_crisp, extract_system, formula1, formula1_with, formula2, minimal_base, product_base,
    union_single_set, CrispSystem,
};
pub use separation::{check, check_crisp, check_soft, Axiom, AxiomKind, AxiomReport, Flavor};
pub use set::{PointSet, SoftSet};
pub use topology::{
    compare, generate, generate_crisp, generate_soft, is_crisp_topology, is_soft_base, is_soft_topology, Comparison,
    CrispTopology, Lattice, SizeGuard, SoftTopology, Topology, Violation,
};
