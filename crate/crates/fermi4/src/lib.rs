//! Entanglement analysis for two-fermion pure states with four
//! single-particle modes.
//!
//! A state is a normalized antisymmetric 4x4 complex amplitude matrix P
//! (six Pluecker amplitudes). The crate computes the correlation measure
//! eta, the reduced one-particle density matrix and its doubly degenerate
//! spectrum, von Neumann and Renyi entropies, the real-coefficient Slater
//! canonical form, and the dual / spin-flip / Klein-quadric geometric
//! characterizations, each cross-checked against a brute-force Jacobi
//! eigensolver oracle.

pub mod decomposition;
pub mod error;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod random;
pub mod state;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use state::FermionState;
