//! Exact computer algebra for coherent Hopf 2-algebras.
//!
//! The crate constructs the finite objects behind coherent Hopf 2-algebras
//! and verifies their axioms by exhaustive exact computation over ℚ:
//!
//! * [`linear`] — labeled tensor spaces, sparse maps, echelon forms and
//!   quotient spaces (balanced tensor products);
//! * [`quasigroup`] — finite quasigroups, nucleus, associator,
//!   quasiassociativity, the 3-cocycle condition and bracket trees;
//! * [`two_group`] — crossed modules, strict and coherent 2-groups;
//! * [`cayley`] — Cayley–Dickson sign cochains, the quasigroups `G_n`, and
//!   the 3-cocycle of a cochain;
//! * [`hopf`] — Hopf algebras, Hopf (co)quasigroups, coassociators,
//!   coassociative pairs, dual pairings, nuclei and quotients;
//! * [`algebroid`] — central Hopf algebroids over a commutative base;
//! * [`hopf2`] — crossed comodules, the `H = A ⊗ B` construction, the
//!   coassociator `α`, and the coherent Hopf 2-algebra axioms;
//! * [`examples`] — the Cayley-basis and group-algebra instances.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebroid;
pub mod cayley;
pub mod error;
pub mod examples;
pub mod hopf;
pub mod hopf2;
pub mod linear;
pub mod quasigroup;
pub mod report;
pub mod scalar;
pub mod two_group;

pub use error::{Error, Result};
pub use scalar::Scalar;
