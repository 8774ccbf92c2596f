//! Exact computations for Howe duality of the unitary dual pair
//! `(U_l, U_{l'})`: occurrence, the correspondence of Harish-Chandra
//! parameters, intertwining distributions as Gaussian-times-polynomial
//! functions, their normalization constants and the multiplicity-one
//! identity, together with numeric checks of the underlying integrals.

pub mod constants;
pub mod error;
pub mod exact;
pub mod intertwine;
pub mod linalg;
pub mod pab;
pub mod par;
pub mod poly;
pub mod reps;
pub mod rng;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{HalfInt, Rat, SymScalar};
pub use reps::{DualPair, HCParam};
