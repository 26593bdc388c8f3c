//! High-temperature partition function and derived thermodynamic quantities.
//!
//! With `x = (xi / tau) sqrt(beta)` the integral form of the partition
//! function is `Z = tau sqrt(pi) Erfi(x) / (2 sqrt(beta))`. Everything else
//! follows from ln Z by beta-derivatives at fixed `xi` and `tau`, written in
//! terms of Dawson's function `F`:
//!
//! ```text
//! U = (1 - x/F(x)) / (2 beta)
//! C = (k/2) [1 - x/(2F) - x^2/(2F^2) + x^3/F]
//! F_free = -ln Z / beta
//! S = k ln Z + k beta U
//! ```

use std::f64::consts::PI;

use crate::error::{finite, Error, Result};
use crate::special_functions::{dawson, dawson_deficit, erfi, ln_erfi};

/// Above this `x` the partition function is handled in log space only.
pub const LOG_SPACE_THRESHOLD: f64 = 25.0;
const SMALL_ARGUMENT: f64 = 0.1;

// (k/2)-scaled Taylor coefficients of C in powers x^4, x^6, ..., x^18.
const HEAT_SERIES: [f64; 8] = [
    8.0 / 45.0,
    32.0 / 945.0,
    -32.0 / 4725.0,
    -256.0 / 93555.0,
    2944.0 / 127_702_575.0,
    11776.0 / 91_216_125.0,
    80384.0 / 6_343_666_875.0,
    -795_041_792.0 / 194_896_477_400_625.0,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoState {
    /// Inverse temperature 1/(k_B T).
    pub beta: f64,
    /// Upper bound of the level integral; a model cutoff chosen by the caller.
    pub xi: f64,
    /// Level spacing scale, held fixed when differentiating in beta.
    pub tau: f64,
    pub boltzmann_k: f64,
}

impl ThermoState {
    pub fn new(beta: f64, xi: f64, tau: f64, boltzmann_k: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::domain(format!("beta must be positive, got {beta}")));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::domain(format!("tau must be positive, got {tau}")));
        }
        if !(boltzmann_k > 0.0 && boltzmann_k.is_finite()) {
            return Err(Error::domain(format!(
                "Boltzmann constant must be positive, got {boltzmann_k}"
            )));
        }
        if !xi.is_finite() {
            return Err(Error::domain("xi must be finite"));
        }
        Ok(ThermoState { beta, xi, tau, boltzmann_k })
    }

    /// State for Coulomb strength `delta` and reduced mass `mu`, with
    /// `tau = delta / sqrt(2 mu)`.
    pub fn from_physical(beta: f64, xi: f64, delta: f64, mu: f64, boltzmann_k: f64) -> Result<Self> {
        if !(delta > 0.0 && mu > 0.0) {
            return Err(Error::domain("delta and mu must be positive"));
        }
        ThermoState::new(beta, xi, delta / (2.0 * mu).sqrt(), boltzmann_k)
    }

    /// `x = (xi / tau) sqrt(beta)`.
    pub fn argument(&self) -> f64 {
        self.xi / self.tau * self.beta.sqrt()
    }

    pub fn temperature(&self) -> f64 {
        1.0 / (self.boltzmann_k * self.beta)
    }

    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        ThermoState::new(beta, self.xi, self.tau, self.boltzmann_k)
    }
}

/// `Z = tau sqrt(pi) Erfi(x) / (2 sqrt(beta))`; odd in `xi`.
pub fn partition_function(state: &ThermoState) -> Result<f64> {
    let x = state.argument();
    let e = erfi(x).map_err(|err| match err {
        Error::Overflow(msg) => Error::Overflow(format!(
            "partition function at beta = {}, xi = {}, tau = {}: {msg}; use ln_partition_function",
            state.beta, state.xi, state.tau
        )),
        other => other,
    })?;
    finite(state.tau * PI.sqrt() * e / (2.0 * state.beta.sqrt()), "partition function")
}

/// ln Z, evaluated through Dawson's function when `x > LOG_SPACE_THRESHOLD`.
pub fn ln_partition_function(state: &ThermoState) -> Result<f64> {
    let x = state.argument();
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "partition function is not positive for xi = {} (choose xi > 0)",
            state.xi
        )));
    }
    let ln_e = if x > LOG_SPACE_THRESHOLD {
        std::f64::consts::FRAC_2_SQRT_PI.ln() + x * x + dawson(x)?.ln()
    } else {
        ln_erfi(x)?
    };
    Ok((state.tau * PI.sqrt() / 2.0).ln() - 0.5 * state.beta.ln() + ln_e)
}

/// Discrete level sum `sum_{n=0}^{n_max} exp(beta ((n + l + 1/2) / tau)^2)`.
pub fn partition_sum(state: &ThermoState, ell: u32, n_max: u64) -> Result<f64> {
    let scale = state.beta / (state.tau * state.tau);
    let mut sum = 0.0;
    for n in 0..=n_max {
        let y = n as f64 + ell as f64 + 0.5;
        let term = (scale * y * y).exp();
        if !term.is_finite() {
            return Err(Error::Overflow(format!("Boltzmann factor for n = {n} overflows")));
        }
        sum += term;
    }
    finite(sum, "partition sum")
}

fn require_positive_z(state: &ThermoState) -> Result<f64> {
    let x = state.argument();
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "partition function is not positive for xi = {} (choose xi > 0)",
            state.xi
        )));
    }
    Ok(x)
}

/// `x/F(x) - 1`, accurate for small x.
fn dawson_ratio_minus_one(x: f64) -> Result<f64> {
    Ok(dawson_deficit(x)? / dawson(x)?)
}

/// U = -d ln Z / d beta.
pub fn mean_energy(state: &ThermoState) -> Result<f64> {
    let x = require_positive_z(state)?;
    let d = dawson_ratio_minus_one(x)?;
    finite(-d / (2.0 * state.beta), "mean energy")
}

/// C = -k beta^2 dU/d beta.
pub fn specific_heat(state: &ThermoState) -> Result<f64> {
    let x = require_positive_z(state)?;
    let half_k = 0.5 * state.boltzmann_k;
    if x < SMALL_ARGUMENT {
        let x2 = x * x;
        let mut power = x2 * x2;
        let mut sum = 0.0;
        for c in HEAT_SERIES {
            sum += c * power;
            power *= x2;
        }
        return Ok(half_k * sum);
    }
    let f = dawson(x)?;
    let bracket = 1.0 - x / (2.0 * f) - x * x / (2.0 * f * f) + x * x * x / f;
    finite(half_k * bracket, "specific heat")
}

/// F = -ln Z / beta.
pub fn free_energy(state: &ThermoState) -> Result<f64> {
    require_positive_z(state)?;
    finite(-ln_partition_function(state)? / state.beta, "free energy")
}

/// S = k ln Z - k beta d ln Z / d beta.
pub fn entropy(state: &ThermoState) -> Result<f64> {
    require_positive_z(state)?;
    let k = state.boltzmann_k;
    finite(
        k * ln_partition_function(state)? + k * state.beta * mean_energy(state)?,
        "entropy",
    )
}

/// All thermodynamic quantities at one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoQuantities {
    pub ln_z: f64,
    pub mean_energy: f64,
    pub specific_heat: f64,
    pub free_energy: f64,
    pub entropy: f64,
}

impl ThermoQuantities {
    pub fn evaluate(state: &ThermoState) -> Result<Self> {
        Ok(ThermoQuantities {
            ln_z: ln_partition_function(state)?,
            mean_energy: mean_energy(state)?,
            specific_heat: specific_heat(state)?,
            free_energy: free_energy(state)?,
            entropy: entropy(state)?,
        })
    }
}
