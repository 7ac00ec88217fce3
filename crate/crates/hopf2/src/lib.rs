//! JSON wire formats, verification drivers, the acceptance suite and the
//! command-line interface for [`hopf2_core`].
//!
//! * [`wire`] — documents for quasigroups, Hopf structures, pairs,
//!   algebroids and coherent Hopf 2-algebra bundles;
//! * [`render`] — reports as JSON or as aligned tables;
//! * [`verify`] — the full verifier for each object kind;
//! * [`fuzz`] — seeded single-entry corruptions of a bundle;
//! * [`suite`] — the acceptance criteria with runtime budgets;
//! * [`cli`] — the `hopf2` command.

#![warn(missing_docs)]

pub mod cli;
pub mod fuzz;
pub mod render;
pub mod suite;
pub mod verify;
pub mod wire;
