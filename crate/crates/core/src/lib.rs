//! Numerical laboratory for random Schrodinger operators on long boxes
//! rG x Z_n: transfer-matrix spectra cross-validated against direct
//! diagonalization, oscillatory-sum covariance experiments, the limiting
//! matrix SDE, and GOE spacing statistics.

pub mod chaos;
pub mod error;
pub mod experiments;
pub mod jacobi;
pub mod lattice;
pub mod oscillatory;
pub mod phase;
pub mod rmt;
pub mod rng;
pub mod sde;
pub mod spectrum;
pub mod transfer;

pub use error::{Error, ErrorClass, Result};
