//! Exact weight multiplicities and tensor-product coefficients for the
//! special linear Lie algebras (root system A_r).
//!
//! Every quantity reduces to the Kostant partition function, which is
//! evaluated as a signed sum of iterated residues of an explicit rational
//! function. The cost of one evaluation depends on the rank, not on the size
//! of the weights, so multiplicities for weights with coordinates around
//! `10^9` are as cheap as for small ones.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature pulls in
//! `std` and evaluates the outer signed sums on a rayon pool.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod count;
mod error;
pub mod lattice;
mod par;
mod permutation;
pub mod reference;
pub mod rep;
pub mod residue;
pub mod series;
pub mod weyl;

pub use count::BigCount;
pub use error::{Error, Result};
pub use lattice::{DominantWeight, FundamentalCoords, RationalVector};
pub use permutation::Permutation;
pub use rep::{
    multiplicity, multiplicity_polynomial, tensor_polynomial, tensor_product, MultiplicityQuery,
    RayFit, RayPolynomial, TensorQuery,
};
pub use residue::{kostant_partition, SignRule};

/// Re-exported so downstream crates name the same integer types.
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
