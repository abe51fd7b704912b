//! Exact computation for locating-dominating codes and their two
//! stronger variants, self-locating-dominating and
//! solid-locating-dominating codes, in finite simple graphs.
//!
//! The crate verifies codes, computes optimal code numbers by exact
//! search, evaluates the closed forms known for standard families,
//! generates extremal and realization constructions, simulates the
//! sensor-network semantics that motivate the codes, and machine-checks
//! the inequalities relating all of these parameters on streams of
//! graphs.

pub mod codes;
pub mod constructions;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod locate;
pub mod order;
pub mod solvers;

pub use codes::{Code, CodeKind};
pub use error::{Error, Result};
pub use graph::Graph;
