//! Causal energy-momentum flow for the complex massive vector (Proca) field.
//!
//! The crate builds constrained plane-wave field configurations, classifies
//! their spin content with the Pauli-Lubanski operator, assembles the symmetric
//! stress-energy tensor, decomposes it through duality-rotated null tetrads and
//! a general 4×4 eigen-solver, and integrates flow lines along its unit
//! time-like eigenvector field.
//!
//! Natural units (ħ = c = 1), metric signature (+,−,−,−), ε_{0123} = +1.
//!
//! Normalization: [`stress::stress_real`] returns the full tensor T_μν. The
//! closed-form eigenvalue quantities (`k`, the roots `K`, the worked-example
//! landscape) are stated for ½T_μν, whose maxwellian eigenvalues are ±k.

// Index loops mirror the tensor notation; `!(x <= tol)` deliberately fails on NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod example;
pub mod export;
pub mod field;
pub mod linalg;
pub mod minkowski;
pub mod spin;
pub mod stress;
pub mod tetrad;
pub mod verify;

pub use error::{Error, Result};
pub use minkowski::{
    AntisymmetricTensor, ComplexAntisymmetricTensor, ComplexFourVector, FourVector, Invariants,
    SymmetricTensor,
};
pub use num_complex::Complex64;
