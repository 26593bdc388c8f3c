//! Relativistic scattering, bound states, angular solutions and
//! thermodynamics for a Coulomb potential dressed with Poschl-Teller
//! ring-shaped barriers, plus the special functions they rest on.
//!
//! Units are natural (hbar = c = 1). Every fallible operation returns
//! [`Result`] with a typed [`Error`]; no public function yields NaN.

pub mod angular_solutions;
pub mod bound_states;
pub mod cli;
pub mod cross_sections;
pub mod error;
pub mod quadrature;
pub mod radial_scattering;
pub mod roots;
pub mod special_functions;
pub mod thermodynamics;

pub use error::{Error, ErrorCategory, Result};
