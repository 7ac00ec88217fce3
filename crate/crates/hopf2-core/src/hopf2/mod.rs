//! Coherent Hopf 2-algebras: crossed comodules of Hopf coquasigroups, the
//! `H = A⊗B` construction with its Hopf-coquasigroup and Hopf-algebroid
//! layers, the coassociator `α`, and the verifier for axioms (i)–(ix).

pub mod axioms;
pub mod bundle;
pub mod comodule;

pub use axioms::{check_axiom, check_coherent_axioms, check_layers, check_lemma54, check_prop42, check_strict, CoherentReport, AXIOMS};
pub use bundle::{build_alpha, build_coherent, build_h, CoherentHopf2Bundle};
pub use comodule::{
    ad_with_antipode, adjoint_crossed_comodule, build_ad, check_crossed_comodule, CrossedComoduleData,
};
