//! Bound states from the Gamma-pole condition
//!
//! ```text
//! (2 n_r + 1) sqrt(M^2 - E^2) - 2 (E + M) delta + 2 sqrt(l^2 (M^2 - E^2)) = 0
//! ```
//!
//! Writing `Lambda = 2 n_r + 1 + 2 l`, squaring and solving linearly in E
//! gives `E = M (Lambda^2 - 4 delta^2) / (Lambda^2 + 4 delta^2)`. The
//! residual vanishes at `E = -M` as well, rises to a single maximum at
//! `E* = -2 delta M / sqrt(Lambda^2 + 4 delta^2)` and decreases to `-4 M delta`
//! at `E = M`, so `[E*, M)` brackets the physical root.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::roots::bisect;

/// A bound level labelled by radial and angular quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundLevel {
    pub n_r: u32,
    pub ell: u32,
    pub energy: f64,
    /// Nonrelativistic limit with the reduced mass taken equal to `M`.
    pub nonrel_energy: f64,
}

impl BoundLevel {
    pub fn new(mass: f64, coupling_delta: f64, n_r: u32, ell: u32) -> Result<Self> {
        Ok(BoundLevel {
            n_r,
            ell,
            energy: bound_energy(mass, coupling_delta, n_r, ell)?,
            nonrel_energy: nonrel_energy(mass, coupling_delta, n_r, ell)?,
        })
    }
}

fn lambda(n_r: u32, ell: u32) -> f64 {
    (2 * n_r + 1 + 2 * ell) as f64
}

fn check_parameters(mass: f64, coupling_delta: f64) -> Result<()> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::domain(format!("mass must be positive and finite, got {mass}")));
    }
    if !(coupling_delta > 0.0 && coupling_delta.is_finite()) {
        return Err(Error::domain(format!(
            "coupling delta must be positive and finite, got {coupling_delta}"
        )));
    }
    Ok(())
}

/// `(2 n_r + 1 + 2 l) sqrt(M^2 - E^2) - 2 (E + M) delta` for |E| < M.
pub fn energy_equation_residual(
    energy: f64,
    mass: f64,
    coupling_delta: f64,
    n_r: u32,
    ell: u32,
) -> Result<f64> {
    if !(energy.abs() < mass) {
        return Err(Error::domain(format!(
            "|E| = {} must lie strictly below M = {mass}",
            energy.abs()
        )));
    }
    let kappa = ((mass - energy) * (mass + energy)).sqrt();
    Ok(lambda(n_r, ell) * kappa - 2.0 * (energy + mass) * coupling_delta)
}

/// Closed-form bound-state energy.
pub fn bound_energy(mass: f64, coupling_delta: f64, n_r: u32, ell: u32) -> Result<f64> {
    check_parameters(mass, coupling_delta)?;
    let l2 = lambda(n_r, ell).powi(2);
    let d2 = 4.0 * coupling_delta * coupling_delta;
    Ok(mass * (l2 - d2) / (l2 + d2))
}

/// Location of the residual's maximum, the lower end of the root bracket.
pub fn residual_peak(mass: f64, coupling_delta: f64, n_r: u32, ell: u32) -> f64 {
    let l = lambda(n_r, ell);
    -2.0 * coupling_delta * mass / (l * l + 4.0 * coupling_delta * coupling_delta).sqrt()
}

/// Bound-state energy by bisection of the residual on `[E*, M)`.
pub fn bound_energy_bisection(mass: f64, coupling_delta: f64, n_r: u32, ell: u32) -> Result<f64> {
    check_parameters(mass, coupling_delta)?;
    let lo = residual_peak(mass, coupling_delta, n_r, ell);
    let hi = mass * (1.0 - f64::EPSILON);
    let f = |e: f64| {
        energy_equation_residual(e, mass, coupling_delta, n_r, ell).unwrap_or(f64::NAN)
    };
    bisect(f, lo, hi)
}

/// `l + 1/2 - i eta` continued to imaginary wave number `k = i sqrt(M^2 - E^2)`.
/// Equals `-n_r` at a bound-state energy.
pub fn pole_parameter(energy: f64, mass: f64, coupling_delta: f64, ell: u32) -> Result<Complex64> {
    if !(energy.abs() < mass) {
        return Err(Error::domain("pole parameter needs |E| < M"));
    }
    let kappa = ((mass - energy) * (mass + energy)).sqrt();
    Ok(Complex64::new(ell as f64 + 0.5 - (mass + energy) * coupling_delta / kappa, 0.0))
}

/// Nonrelativistic limit `E_nl = -8 mu delta^2 / (2n + 2l + 1)^2`.
///
/// Obtained from the closed form with `E + M ~ 2 mu`; the printed
/// `-mu (2n + 2l + 1)^2 / 2 delta^2` has coupling and quantum number swapped.
pub fn nonrel_energy(mu: f64, coupling_delta: f64, n: u32, ell: u32) -> Result<f64> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::domain(format!("reduced mass must be positive, got {mu}")));
    }
    if !coupling_delta.is_finite() {
        return Err(Error::domain("coupling delta must be finite"));
    }
    Ok(-8.0 * mu * coupling_delta * coupling_delta / lambda(n, ell).powi(2))
}
