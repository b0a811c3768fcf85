//! Bound localized states of a planar electron in a uniform magnetic field
//! with one or more attractive zero-range (delta) potentials.
//!
//! The crate is organized bottom-up:
//!
//! * [`params`]: physical constants, unit systems and derived scales
//! * [`special`]: Hermite functions, digamma/trigamma, `K0`, quadrature,
//!   bracketed root finding and finite-difference operators
//! * [`landau`]: Landau-gauge eigenstates of the free magnetic Hamiltonian
//! * [`bound`]: the regularized energy condition, the closed-form ground
//!   state and its spectral reconstruction
//! * [`current`]: probability currents, curl, vortex intensity and
//!   multi-center superposition
//! * [`zero_field`]: the field-free `K0` state and localization ratios
//! * [`cli`]: configuration, export formats and the command implementations

pub mod bound;
pub mod cli;
pub mod current;
mod error;
pub mod landau;
pub mod params;
pub mod special;
pub mod zero_field;

pub use error::{Error, Result};
pub use num_complex::Complex64;
