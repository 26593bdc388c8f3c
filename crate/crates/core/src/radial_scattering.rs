//! Continuum radial solutions of the upper-component equation
//!
//! ```text
//! g'' + [k^2 + 2 (M+E) delta / r - (l - 1/2)(l + 1/2) / r^2] g = 0
//! ```
//!
//! with `k = sqrt(E^2 - M^2)` and `eta = (M+E) delta / k`. The regular
//! solution normalized on the k/2pi scale is
//! `g = A (kr)^(l+1/2) e^(ikr) 1F1(l + 1/2 - i eta; 2l + 1; -2ikr)`, which is
//! real and behaves like `2 sin(kr + delta_l - l pi/2 + pi/4 + eta ln 2kr)`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{finite, Error, Result};
use crate::special_functions::{coulomb_f, hyp1f1, log_gamma, wrap_angle};

/// Tolerance on |Im g| / |g| before a wavefunction value is rejected.
pub const REALNESS_TOLERANCE: f64 = 1e-8;

/// Kinematics of a scattering state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativisticContext {
    pub mass: f64,
    pub energy: f64,
    pub coupling_delta: f64,
    /// k = sqrt(E^2 - M^2)
    pub wave_number: f64,
    /// eta = (M + E) delta / k
    pub sommerfeld: f64,
}

/// Builds the scattering context for mass `mass`, total energy `energy` and
/// Coulomb strength `coupling_delta`.
pub fn make_context(mass: f64, energy: f64, coupling_delta: f64) -> Result<RelativisticContext> {
    if !(mass.is_finite() && energy.is_finite() && coupling_delta.is_finite()) {
        return Err(Error::domain("context parameters must be finite"));
    }
    if mass <= 0.0 {
        return Err(Error::domain(format!("mass must be positive, got {mass}")));
    }
    if coupling_delta <= 0.0 {
        return Err(Error::domain(format!(
            "coupling delta must be positive, got {coupling_delta}"
        )));
    }
    if energy <= mass {
        return Err(Error::domain(format!(
            "energy {energy} <= mass {mass}: not a scattering state (use bound_states)"
        )));
    }
    let wave_number = ((energy - mass) * (energy + mass)).sqrt();
    let sommerfeld = (mass + energy) * coupling_delta / wave_number;
    Ok(RelativisticContext {
        mass,
        energy,
        coupling_delta,
        wave_number,
        sommerfeld: finite(sommerfeld, "Sommerfeld parameter")?,
    })
}

impl RelativisticContext {
    pub fn new(mass: f64, energy: f64, coupling_delta: f64) -> Result<Self> {
        make_context(mass, energy, coupling_delta)
    }
}

/// Coulomb-type phase arg Gamma(l + 1/2 - i eta), reduced to (-pi, pi].
///
/// Takes `eta` of either sign; `phase_shift` is the context-bound wrapper.
pub fn coulomb_phase(ell: u32, eta: f64) -> Result<f64> {
    let a = Complex64::new(ell as f64 + 0.5, -eta);
    Ok(wrap_angle(log_gamma(a)?.im))
}

/// delta_l = arg Gamma(l + 1/2 - i eta).
pub fn phase_shift(ctx: &RelativisticContext, ell: u32) -> Result<f64> {
    coulomb_phase(ell, ctx.sommerfeld)
}

/// delta'_l = delta_l + pi (l' - l + 1/2) / 2.
///
/// The result is not reduced mod 2*pi, so shifting `ell_prime` by 2 adds
/// exactly pi.
pub fn short_range_phase_shift(ctx: &RelativisticContext, ell: u32, ell_prime: u32) -> Result<f64> {
    let delta = phase_shift(ctx, ell)?;
    Ok(delta + PI * (ell_prime as f64 - ell as f64 + 0.5) / 2.0)
}

/// ln A_{kl} = (l + 1/2) ln 2 + ln|Gamma(l + 1/2 - i eta)| + pi eta / 2 - ln Gamma(2l + 1).
pub fn ln_normalization_for(ell: u32, eta: f64) -> Result<f64> {
    let l = ell as f64;
    let a = Complex64::new(l + 0.5, -eta);
    let ln_fact = log_gamma(Complex64::new(2.0 * l + 1.0, 0.0))?.re;
    Ok((l + 0.5) * LN_2 + log_gamma(a)?.re + PI * eta / 2.0 - ln_fact)
}

/// Log-scale normalization constant; never overflows.
pub fn ln_normalization_constant(ctx: &RelativisticContext, ell: u32) -> Result<f64> {
    ln_normalization_for(ell, ctx.sommerfeld)
}

/// A_{kl} = 2^(l+1/2) |Gamma(l + 1/2 - i eta)| e^(pi eta/2) / Gamma(2l + 1).
pub fn normalization_constant(ctx: &RelativisticContext, ell: u32) -> Result<f64> {
    let ln_a = ln_normalization_constant(ctx, ell)?;
    if ln_a > f64::MAX.ln() {
        return Err(Error::Overflow(format!(
            "normalization constant e^{ln_a} overflows; use ln_normalization_constant"
        )));
    }
    Ok(ln_a.exp())
}

/// Complex value of `A (kr)^(l+1/2) e^(ikr) 1F1(l + 1/2 - i eta; 2l+1; -2ikr)`
/// before the realness check. Parameterized by `rho = kr`.
///
/// Where neither 1F1 branch reaches full accuracy (rho of a few tens with l
/// or eta of a few units) the same function is evaluated as
/// `2 F_{l-1/2}(-eta, rho)` by Steed's method, with zero imaginary part.
pub fn radial_wavefunction_complex(ell: u32, eta: f64, rho: f64) -> Result<Complex64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::domain(format!("radius must be positive and finite, got kr = {rho}")));
    }
    let l = ell as f64;
    let a = Complex64::new(l + 0.5, -eta);
    let b = Complex64::new(2.0 * l + 1.0, 0.0);
    let f = match hyp1f1(a, b, Complex64::new(0.0, -2.0 * rho)) {
        Err(Error::NoConvergence(reason)) => {
            log::debug!("1F1 fallback to Coulomb continued fractions: {reason}");
            let g = coulomb_f(l - 0.5, -eta, rho)?;
            return Ok(Complex64::new(finite(2.0 * g, "radial wavefunction")?, 0.0));
        }
        other => other?,
    };
    let ln_mod = ln_normalization_for(ell, eta)? + (l + 0.5) * rho.ln();
    Ok(Complex64::from_polar(1.0, rho) * f * ln_mod.exp())
}

/// Real regular solution g_{kl}(r) from its complex representation, with the
/// imaginary residue checked against [`REALNESS_TOLERANCE`].
pub fn radial_wavefunction(ctx: &RelativisticContext, ell: u32, r: f64) -> Result<f64> {
    let rho = ctx.wave_number * r;
    let g = radial_wavefunction_complex(ell, ctx.sommerfeld, rho)?;
    let size = g.norm();
    if size > 0.0 {
        let ratio = g.im.abs() / size;
        if ratio > REALNESS_TOLERANCE {
            return Err(Error::RealnessViolation { r, ratio });
        }
    }
    finite(g.re, "radial wavefunction")
}

/// One angular channel of the continuum solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWave {
    pub ell: u32,
    pub phase_shift: f64,
    pub short_range_shift: f64,
    pub norm_constant: f64,
    context: RelativisticContext,
}

impl PartialWave {
    pub fn new(ctx: &RelativisticContext, ell: u32, ell_prime: u32) -> Result<Self> {
        Ok(PartialWave {
            ell,
            phase_shift: phase_shift(ctx, ell)?,
            short_range_shift: short_range_phase_shift(ctx, ell, ell_prime)?,
            norm_constant: normalization_constant(ctx, ell)?,
            context: *ctx,
        })
    }

    pub fn context(&self) -> &RelativisticContext {
        &self.context
    }

    pub fn wavefunction(&self, r: f64) -> Result<f64> {
        radial_wavefunction(&self.context, self.ell, r)
    }
}

/// Summation weights for the truncated partial-wave series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Smoothing {
    None,
    /// e^(-eps |m|) with eps = 10 / L
    #[default]
    Abel,
    /// 1 - |m| / (L + 1)
    Cesaro,
}

impl Smoothing {
    fn weight(self, m: usize, l_max: usize) -> f64 {
        match self {
            Smoothing::None => 1.0,
            Smoothing::Abel if l_max == 0 => 1.0,
            Smoothing::Abel => (-(10.0 / l_max as f64) * m as f64).exp(),
            Smoothing::Cesaro => 1.0 - m as f64 / (l_max as f64 + 1.0),
        }
    }
}

impl std::str::FromStr for Smoothing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(Smoothing::None),
            "abel" => Ok(Smoothing::Abel),
            "cesaro" => Ok(Smoothing::Cesaro),
            other => Err(Error::domain(format!("unknown smoothing '{other}'"))),
        }
    }
}

/// Partial-wave amplitude
/// `f(theta) = -(i / sqrt(2 pi k)) sum_{m=-L}^{L} w_m [e^(2i delta_|m|) - 1] e^(i m theta)`.
///
/// `phase_shifts[j]` is delta_j for j = 0..=L; the symmetric index range is
/// implied. The `- 1` term is kept so the truncated sum converges for
/// theta != 0.
pub fn scattering_amplitude(
    phase_shifts: &[f64],
    wave_number: f64,
    theta: f64,
    smoothing: Smoothing,
) -> Result<Complex64> {
    if phase_shifts.is_empty() {
        return Err(Error::domain("at least one phase shift is required"));
    }
    if !(wave_number > 0.0) {
        return Err(Error::domain(format!("wave number must be positive, got {wave_number}")));
    }
    if theta == 0.0 {
        return Err(Error::domain("scattering amplitude is singular at theta = 0"));
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::domain(format!("theta = {theta} outside (0, pi]")));
    }
    let l_max = phase_shifts.len() - 1;
    let channel = |delta: f64| Complex64::from_polar(1.0, 2.0 * delta) - 1.0;
    let mut sum = channel(phase_shifts[0]) * smoothing.weight(0, l_max);
    for (m, &delta) in phase_shifts.iter().enumerate().skip(1) {
        let w = smoothing.weight(m, l_max);
        sum += channel(delta) * (2.0 * w * (m as f64 * theta).cos());
    }
    let prefactor = Complex64::new(0.0, -1.0 / (2.0 * PI * wave_number).sqrt());
    Ok(prefactor * sum)
}

/// Closed-form Coulomb cross section `alpha tanh(pi alpha) / (2k sin^2(theta/2))`.
pub fn coulomb_cross_section(alpha: f64, wave_number: f64, theta: f64) -> Result<f64> {
    if !(wave_number > 0.0) {
        return Err(Error::domain(format!("wave number must be positive, got {wave_number}")));
    }
    if theta == 0.0 {
        return Err(Error::domain("Coulomb cross section diverges at theta = 0"));
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::domain(format!("theta = {theta} outside (0, pi]")));
    }
    let s = (0.5 * theta).sin();
    finite(
        alpha * (PI * alpha).tanh() / (2.0 * wave_number * s * s),
        "Coulomb cross section",
    )
}

/// delta_0 .. delta_{l_max} for a pure Coulomb problem of strength `eta`.
pub fn coulomb_phases(eta: f64, l_max: u32) -> Result<Vec<f64>> {
    (0..=l_max).map(|l| coulomb_phase(l, eta)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn context_examples() {
        let ctx = make_context(1.0, 2f64.sqrt(), 1.0).unwrap();
        assert_relative_eq!(ctx.wave_number, 1.0, max_relative = 1e-15);
        assert_relative_eq!(ctx.sommerfeld, 1.0 + 2f64.sqrt(), max_relative = 1e-15);

        let ctx = make_context(1.0, 1.25, 0.5).unwrap();
        assert_relative_eq!(ctx.wave_number, 0.75, max_relative = 1e-15);
        assert_relative_eq!(ctx.sommerfeld, 1.5, max_relative = 1e-15);
        let k2 = ctx.energy * ctx.energy - ctx.mass * ctx.mass;
        assert_relative_eq!(ctx.wave_number * ctx.wave_number, k2, max_relative = 4.0 * f64::EPSILON);

        assert!(matches!(make_context(1.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(make_context(1.0, 0.5, 1.0), Err(Error::Domain(_))));
        assert!(matches!(make_context(-1.0, 2.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(make_context(1.0, 2.0, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn phase_limits_and_symmetry() {
        for l in 0..6 {
            assert_eq!(coulomb_phase(l, 0.0).unwrap(), 0.0);
            for eta in [0.3, 1.0, 4.0] {
                let p = coulomb_phase(l, eta).unwrap();
                let m = coulomb_phase(l, -eta).unwrap();
                assert!((p + m).abs() < 1e-14, "l={l} eta={eta}");
            }
        }
    }

    #[test]
    fn short_range_offsets() {
        let ctx = make_context(1.0, 1.25, 0.5).unwrap();
        let d = phase_shift(&ctx, 2).unwrap();
        assert_relative_eq!(short_range_phase_shift(&ctx, 2, 2).unwrap(), d + PI / 4.0);
        let s0 = short_range_phase_shift(&ctx, 1, 1).unwrap();
        let s2 = short_range_phase_shift(&ctx, 1, 3).unwrap();
        assert_relative_eq!(s2 - s0, PI, max_relative = 1e-15);
    }

    #[test]
    fn normalization_free_limit() {
        let v = ln_normalization_for(0, 0.0).unwrap().exp();
        assert_relative_eq!(v, (2.0 * PI).sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn amplitude_trivial_cases() {
        let f = scattering_amplitude(&[0.0; 30], 1.3, 1.0, Smoothing::None).unwrap();
        assert_eq!(f, Complex64::new(0.0, 0.0));

        let k = 0.8;
        let d0 = 0.37;
        for theta in [0.2, 1.0, PI] {
            let f = scattering_amplitude(&[d0], k, theta, Smoothing::Abel).unwrap();
            let expect = Complex64::new(0.0, -1.0 / (2.0 * PI * k).sqrt())
                * (Complex64::from_polar(1.0, 2.0 * d0) - 1.0);
            assert!((f - expect).norm() < 1e-15);
        }
    }

    #[test]
    fn amplitude_rejects_forward_direction() {
        assert!(matches!(
            scattering_amplitude(&[0.1, 0.2], 1.0, 0.0, Smoothing::Abel),
            Err(Error::Domain(_))
        ));
        assert!(matches!(coulomb_cross_section(1.0, 1.0, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn coulomb_cross_section_values() {
        let v = coulomb_cross_section(1.0, 1.0, PI).unwrap();
        assert!((v - 0.498_136_0).abs() < 5e-8);
        assert_relative_eq!(v, PI.tanh() / 2.0, max_relative = 1e-15);
        assert_eq!(coulomb_cross_section(0.0, 1.0, 1.0).unwrap(), 0.0);
        let a = coulomb_cross_section(0.7, 2.0, 0.4).unwrap() * (0.2f64).sin().powi(2);
        let b = coulomb_cross_section(0.7, 2.0, 2.9).unwrap() * (1.45f64).sin().powi(2);
        assert_relative_eq!(a, b, max_relative = 1e-14);
    }

    #[test]
    fn wavefunction_requires_positive_radius() {
        let ctx = make_context(1.0, 1.25, 0.5).unwrap();
        assert!(matches!(radial_wavefunction(&ctx, 0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(radial_wavefunction(&ctx, 0, -1.0), Err(Error::Domain(_))));
    }
}
