//! Poschl-Teller eigenproblems for the polar and azimuthal equations.
//!
//! Both angular equations reduce to
//!
//! ```text
//! -H''/2 + (zeta^2/2) [chi(chi-1)/sin^2(zeta q) + lam(lam-1)/cos^2(zeta q)] H = eps H
//! ```
//!
//! on `q in [0, pi/(2 zeta)]`, with `eps = (zeta^2/2)(chi + lam + 2 n_r)^2` and
//! `H = sin^chi cos^lam 2F1(-n_r, chi + lam + n_r; chi + 1/2; sin^2)`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::special_functions::hyp2f1_terminating;

const NORM_TOLERANCE: f64 = 1e-13;

/// Normalizable root `chi = (1 + sqrt(1 + 4c))/2` of `chi(chi - 1) = c`.
pub fn pt_parameter_from_strength(c: f64) -> Result<f64> {
    if c.is_nan() {
        return Err(Error::domain("strength is NaN"));
    }
    if c < -0.25 {
        return Err(Error::ComplexBranch(c));
    }
    Ok(0.5 * (1.0 + (1.0 + 4.0 * c).sqrt()))
}

/// Eigenvalue `(zeta^2/2)(chi + lam + 2 n_r)^2`.
pub fn polar_eigenvalue(chi: f64, lam: f64, n_r: u32, zeta: f64) -> f64 {
    0.5 * zeta * zeta * (chi + lam + 2.0 * n_r as f64).powi(2)
}

/// Eigenvalue of the collapsed problem, `2 zeta^2 (lam/2 + n_r)^2 - zeta^2/2`.
pub fn degenerate_eigenvalue(lam: f64, n_r: u32, zeta: f64) -> f64 {
    2.0 * zeta * zeta * (0.5 * lam + n_r as f64).powi(2) - 0.5 * zeta * zeta
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularKind {
    /// Both barriers present, `chi >= 1`.
    Polar,
    /// The `chi` barrier has collapsed (`chi in {0, 1}` strength zero).
    Degenerate,
}

/// A normalized eigenfunction of the angular problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSolution {
    pub chi: f64,
    pub lam: f64,
    pub zeta: f64,
    pub n_r: u32,
    pub eigenvalue: f64,
    pub kind: AngularKind,
    norm: f64,
}

fn check_common(lam: f64, zeta: f64) -> Result<()> {
    if !(zeta > 0.0 && zeta.is_finite()) {
        return Err(Error::domain(format!("zeta must be positive, got {zeta}")));
    }
    if !(lam >= 1.0 && lam.is_finite()) {
        return Err(Error::domain(format!("lam must be >= 1, got {lam}")));
    }
    if lam == 1.0 {
        log::warn!("lam = 1 sits on the boundary of the normalizable branch");
    }
    Ok(())
}

impl AngularSolution {
    pub fn polar(chi: f64, lam: f64, n_r: u32, zeta: f64) -> Result<Self> {
        check_common(lam, zeta)?;
        if !(chi >= 1.0 && chi.is_finite()) {
            return Err(Error::domain(format!("chi must be >= 1, got {chi}")));
        }
        if chi == 1.0 {
            log::warn!("chi = 1 sits on the boundary of the normalizable branch");
        }
        AngularSolution {
            chi,
            lam,
            zeta,
            n_r,
            eigenvalue: polar_eigenvalue(chi, lam, n_r, zeta),
            kind: AngularKind::Polar,
            norm: 1.0,
        }
        .normalized()
    }

    pub fn degenerate(lam: f64, n_r: u32, zeta: f64) -> Result<Self> {
        check_common(lam, zeta)?;
        AngularSolution {
            chi: 0.0,
            lam,
            zeta,
            n_r,
            eigenvalue: degenerate_eigenvalue(lam, n_r, zeta),
            kind: AngularKind::Degenerate,
            norm: 1.0,
        }
        .normalized()
    }

    fn normalized(mut self) -> Result<Self> {
        let raw = self;
        let n2 = integrate(
            |q| raw.unnormalized(q).map(|h| h * h).unwrap_or(f64::NAN),
            0.0,
            self.q_max(),
            NORM_TOLERANCE,
            0.0,
        )?;
        if !(n2 > 0.0) {
            return Err(Error::NoConvergence("eigenfunction has zero norm".into()));
        }
        self.norm = 1.0 / n2.sqrt();
        Ok(self)
    }

    pub fn q_max(&self) -> f64 {
        FRAC_PI_2 / self.zeta
    }

    /// Multiplier giving unit L2 norm on `[0, q_max]`.
    pub fn normalization(&self) -> f64 {
        self.norm
    }

    fn unnormalized(&self, q: f64) -> Result<f64> {
        let x = self.zeta * q;
        let s = x.sin().max(0.0);
        let c = x.cos().max(0.0);
        let (lower, envelope) = match self.kind {
            AngularKind::Polar => (self.chi + 0.5, s.powf(self.chi) * c.powf(self.lam)),
            AngularKind::Degenerate => (0.5, c.powf(self.lam)),
        };
        let poly = hyp2f1_terminating(self.n_r, self.chi + self.lam + self.n_r as f64, lower, (s * s).min(1.0))?;
        Ok(envelope * poly)
    }

    pub fn eval(&self, q: f64) -> Result<f64> {
        let q_max = self.q_max();
        let slack = 1e-12 * q_max;
        if !(q >= -slack && q <= q_max + slack) {
            return Err(Error::domain(format!("q = {q} outside [0, {q_max}]")));
        }
        Ok(self.norm * self.unnormalized(q.clamp(0.0, q_max))?)
    }

    /// Energy in `-H''/2 + V H = eps H`; the degenerate eigenvalue is
    /// reported shifted by `-zeta^2/2`.
    pub fn ode_energy(&self) -> f64 {
        match self.kind {
            AngularKind::Polar => self.eigenvalue,
            AngularKind::Degenerate => self.eigenvalue + 0.5 * self.zeta * self.zeta,
        }
    }

    pub fn effective_potential(&self, q: f64) -> f64 {
        let x = self.zeta * q;
        let z2 = 0.5 * self.zeta * self.zeta;
        let chi_term = match self.kind {
            AngularKind::Polar => self.chi * (self.chi - 1.0) / x.sin().powi(2),
            AngularKind::Degenerate => 0.0,
        };
        z2 * (chi_term + self.lam * (self.lam - 1.0) / x.cos().powi(2))
    }

    /// `l^2 = 2 E + zeta^2`, the separation constant implied by the eigenvalue.
    pub fn separation_constant_squared(&self) -> f64 {
        2.0 * self.eigenvalue + self.zeta * self.zeta
    }
}

fn check_energy_sum(e_plus_m: f64) -> Result<()> {
    if !(e_plus_m > 0.0 && e_plus_m.is_finite()) {
        return Err(Error::domain(format!("E + M must be positive, got {e_plus_m}")));
    }
    Ok(())
}

fn flag_sub_unit(name: &str, value: f64) {
    if value < 1.0 {
        log::warn!("{name} = {value} < 1 lies on the non-normalizable branch");
    }
}

/// `(chi, lam)` for the polar equation with barrier strengths
/// `2(E+M) B + m^2 - 1/4` and `2(E+M) A(A-1)`.
pub fn map_polar(a: f64, b: f64, m: i32, e_plus_m: f64) -> Result<(f64, f64)> {
    check_energy_sum(e_plus_m)?;
    if !(a >= 1.0 && a.is_finite()) {
        return Err(Error::domain(format!("A must be >= 1, got {a}")));
    }
    if !(b >= 0.0 && b.is_finite()) {
        return Err(Error::domain(format!("B must be >= 0, got {b}")));
    }
    let m = m as f64;
    let chi = pt_parameter_from_strength(2.0 * e_plus_m * b + m * m - 0.25)?;
    let lam = pt_parameter_from_strength(2.0 * e_plus_m * a * (a - 1.0))?;
    flag_sub_unit("chi", chi);
    Ok((chi, lam))
}

/// `(chi, lam)` for the azimuthal equation with strengths
/// `2(E+M) alpha^2 D(D-1)` and `2(E+M) alpha^2 C(C-1)`; here `zeta = alpha`.
pub fn map_azimuthal(c: f64, d: f64, alpha: u32, e_plus_m: f64) -> Result<(f64, f64)> {
    check_energy_sum(e_plus_m)?;
    if alpha < 1 {
        return Err(Error::domain("alpha must be >= 1"));
    }
    for (name, v) in [("C", c), ("D", d)] {
        if !(v >= 1.0 && v.is_finite()) {
            return Err(Error::domain(format!("{name} must be >= 1, got {v}")));
        }
    }
    let a2 = (alpha as f64).powi(2);
    let chi = pt_parameter_from_strength(2.0 * e_plus_m * a2 * d * (d - 1.0))?;
    let lam = pt_parameter_from_strength(2.0 * e_plus_m * a2 * c * (c - 1.0))?;
    Ok((chi, lam))
}

/// `m^2 = E + zeta^2/2` for the azimuthal level `(chi, lam, n_r)` with `zeta = alpha`.
pub fn azimuthal_m_squared(chi: f64, lam: f64, n_r: u32, alpha: u32) -> f64 {
    let zeta = alpha as f64;
    polar_eigenvalue(chi, lam, n_r, zeta) + 0.5 * zeta * zeta
}
