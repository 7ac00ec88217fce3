//! Hopf algebras, Hopf coquasigroups and Hopf quasigroups on labeled
//! bases, with coassociators, coassociative pairs and duality.

pub mod algebra;
pub mod coassoc;
pub mod duality;
pub mod structure;

pub use coassoc::{
    beta_of, check_coassociative_pair, check_quasi_coassociative, coassociator_beta, coproduct_passthrough_check,
    iterated_coproduct, iterated_coproduct_at, CoassociativePairData, CoassociatorReport, QuasiCoassocReport,
};
pub use duality::{
    beta_star, beta_star_of, canonical_pairing, check_beta_duality, check_pairing, ideal_ib, nucleus_na, quotient_hopf,
    BetaStarReport, DualPairingData, IdealReport, NucleusReport, QuotientHopf,
};
pub use algebra::{flatten_pair, mul_tensors, split_pair, tensor_algebra, Algebra};
pub use structure::{
    antipode_properties, check_associativity, check_claim, check_coassociativity, check_hopf_algebra,
    check_hopf_coquasigroup, check_hopf_quasigroup, check_unit, function_algebra, function_label_of,
    linear_extension, Claim, HopfStructure,
};
