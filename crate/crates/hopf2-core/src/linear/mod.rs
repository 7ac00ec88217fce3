//! Exact sparse linear algebra over labeled bases.
//!
//! Spaces are tensor products of labeled bases; vectors and maps are sparse
//! and canonically ordered, so equality is structural. Quotient spaces are
//! represented by a reduced echelon basis of the relations together with a
//! normal-form projection, which is how balanced tensor products `M ⊗_B M`
//! are realized.

mod echelon;
mod map;
mod space;
mod vector;

pub use echelon::{kernel, preimage, pure_decomposition, quotient, rank, Echelon, QuotientSpace, Subspace};
pub use map::{add_maps, compose, maps_equal_mod, scale_map, tensor_map, LinearMap};
pub use space::{Basis, Index, Indices, Space, MAX_FACTOR_DIM, SCALAR_LABEL, TENSOR_SEP};
pub use vector::Vector;

/// Builds a multi-index from a slice.
pub fn ix(parts: &[u16]) -> Index {
    Index::from_slice(parts)
}
