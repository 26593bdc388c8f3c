//! Integral observables of a differential cross section and the screened
//! Rutherford model `dsigma/dOmega = Phi / (1 - cos theta + Gamma)^2`.
//!
//! The screening constant is called `gamma_screen` to keep it apart from
//! the Gamma function.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::roots::brent;

/// Relative tolerance of every angular quadrature.
pub const QUADRATURE_TOLERANCE: f64 = 1e-11;

/// A differential cross section in area per steradian on `theta in (0, pi]`.
pub trait DifferentialCrossSection {
    fn dcs(&self, theta: f64) -> f64;
}

impl<F: Fn(f64) -> f64> DifferentialCrossSection for F {
    fn dcs(&self, theta: f64) -> f64 {
        self(theta)
    }
}

// 2 pi int_a^b w(theta) dcs(theta) sin(theta) dtheta, rejecting negative values.
fn weighted_integral<D, W>(dcs: &D, weight: W, a: f64, b: f64) -> Result<f64>
where
    D: DifferentialCrossSection + ?Sized,
    W: Fn(f64) -> f64,
{
    let negative = Cell::new(None);
    let value = integrate(
        |t| {
            let v = dcs.dcs(t);
            if v < 0.0 && negative.get().is_none() {
                negative.set(Some((t, v)));
            }
            v * weight(t) * t.sin()
        },
        a,
        b,
        QUADRATURE_TOLERANCE,
        0.0,
    )?;
    if let Some((t, v)) = negative.get() {
        return Err(Error::domain(format!(
            "differential cross section is negative ({v}) at theta = {t}"
        )));
    }
    Ok(2.0 * PI * value)
}

fn unit(_: f64) -> f64 {
    1.0
}

// 1 - cos theta without cancellation at small angles.
fn one_minus_cos(theta: f64) -> f64 {
    let s = (0.5 * theta).sin();
    2.0 * s * s
}

/// Forward and backward hemisphere pieces of sigma_tot.
fn hemispheres<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<(f64, f64)> {
    Ok((
        weighted_integral(dcs, unit, 0.0, FRAC_PI_2)?,
        weighted_integral(dcs, unit, FRAC_PI_2, PI)?,
    ))
}

pub fn sigma_total<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<f64> {
    let (f, b) = hemispheres(dcs)?;
    Ok(f + b)
}

pub fn sigma_transport<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<f64> {
    Ok(weighted_integral(dcs, one_minus_cos, 0.0, FRAC_PI_2)?
        + weighted_integral(dcs, one_minus_cos, FRAC_PI_2, PI)?)
}

/// `sigma_tr / sigma_tot`, in `(0, 2)` for any nonzero cross section.
pub fn transport_ratio<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<f64> {
    let total = sigma_total(dcs)?;
    if !(total > 0.0) {
        return Err(Error::domain("cross section integrates to zero"));
    }
    Ok(sigma_transport(dcs)? / total)
}

/// Mean number of wide-angle collisions `N R sigma_tr` over path length `R`
/// in a medium of number density `N`.
pub fn mean_wide_angle_collisions(number_density: f64, path_length: f64, sigma_tr: f64) -> f64 {
    number_density * path_length * sigma_tr
}

/// Probability of scattering into `[0, theta]`.
pub fn scatter_probability<D: DifferentialCrossSection + ?Sized>(dcs: &D, theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::domain(format!("theta = {theta} outside [0, pi]")));
    }
    let (fwd, bwd) = hemispheres(dcs)?;
    let total = fwd + bwd;
    if !(total > 0.0) {
        return Err(Error::domain("cross section integrates to zero"));
    }
    let partial = if theta <= FRAC_PI_2 {
        weighted_integral(dcs, unit, 0.0, theta)?
    } else if theta == PI {
        total
    } else {
        fwd + weighted_integral(dcs, unit, FRAC_PI_2, theta)?
    };
    Ok((partial / total).clamp(0.0, 1.0))
}

pub fn forward_probability<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<f64> {
    let (fwd, bwd) = hemispheres(dcs)?;
    Ok(fwd / (fwd + bwd))
}

pub fn backward_probability<D: DifferentialCrossSection + ?Sized>(dcs: &D) -> Result<f64> {
    let (fwd, bwd) = hemispheres(dcs)?;
    Ok(bwd / (fwd + bwd))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScreenedRutherford {
    pub phi: f64,
    pub gamma_screen: f64,
}

impl ScreenedRutherford {
    pub fn new(phi: f64, gamma_screen: f64) -> Result<Self> {
        if !(phi > 0.0 && phi.is_finite()) {
            return Err(Error::domain(format!("Phi must be positive, got {phi}")));
        }
        if !(gamma_screen > 0.0 && gamma_screen.is_finite()) {
            return Err(Error::domain(format!(
                "screening constant must be positive, got {gamma_screen}"
            )));
        }
        Ok(ScreenedRutherford { phi, gamma_screen })
    }

    /// `4 pi Phi / (Gamma (Gamma + 2))`.
    pub fn sigma_total_analytic(&self) -> f64 {
        let g = self.gamma_screen;
        4.0 * PI * self.phi / (g * (g + 2.0))
    }

    /// `2 pi Phi [ln((Gamma + 2)/Gamma) - 2/(Gamma + 2)]`.
    pub fn sigma_transport_analytic(&self) -> f64 {
        2.0 * PI * self.phi * transport_bracket(2.0 / self.gamma_screen)
    }

    pub fn transport_ratio_analytic(&self) -> f64 {
        screened_ratio(self.gamma_screen)
    }
}

impl DifferentialCrossSection for ScreenedRutherford {
    fn dcs(&self, theta: f64) -> f64 {
        screened_rutherford_dcs(self, theta)
    }
}

pub fn screened_rutherford_dcs(model: &ScreenedRutherford, theta: f64) -> f64 {
    let d = one_minus_cos(theta) + model.gamma_screen;
    model.phi / (d * d)
}

// ln(1 + t) - t/(1 + t) = sum_{k>=2} (-1)^k (k-1)/k t^k
fn transport_bracket(t: f64) -> f64 {
    if t < 0.1 {
        let mut power = t;
        let mut sum = 0.0;
        for k in 2..40 {
            power *= -t;
            let term = power * (k - 1) as f64 / k as f64;
            sum -= term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        // power carries (-1)^(k-1) t^k; the subtraction restores (-1)^k
        sum
    } else {
        t.ln_1p() - t / (1.0 + t)
    }
}

/// Analytic `sigma_tr / sigma_tot` as a function of the screening constant.
pub fn screened_ratio(gamma_screen: f64) -> f64 {
    let g = gamma_screen;
    0.5 * g * (g + 2.0) * transport_bracket(2.0 / g)
}

/// `(Phi, Gamma)` reproducing the two targets; the ratio fixes `Gamma` and
/// `sigma_tot` then fixes `Phi`.
pub fn fit_screened(sigma_tot_target: f64, sigma_tr_target: f64) -> Result<ScreenedRutherford> {
    if !(sigma_tot_target > 0.0 && sigma_tr_target > 0.0)
        || !(sigma_tot_target.is_finite() && sigma_tr_target.is_finite())
    {
        return Err(Error::domain("fit targets must be positive and finite"));
    }
    let ratio = sigma_tr_target / sigma_tot_target;
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::NoRoot(format!(
            "transport ratio {ratio} is outside the screened Rutherford range (0, 1)"
        )));
    }
    let ln_gamma = brent(|u| screened_ratio(u.exp()) - ratio, -60.0, 40.0, 1e-15)?;
    let g = ln_gamma.exp();
    ScreenedRutherford::new(sigma_tot_target * g * (g + 2.0) / (4.0 * PI), g)
}
