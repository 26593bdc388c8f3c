//! Complex log-Gamma.
//!
//! Lanczos rational approximation (g = 671/128, 15 coefficients) on the half
//! plane Re z >= 1/2, reflection formula below it. The imaginary part is the
//! continuous argument of Gamma along paths from the positive real axis, so
//! `log_gamma(z + 1) - log_gamma(z) = ln z` holds without 2*pi jumps.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 5.242_187_5;
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;
const LN_PI: f64 = 1.144_729_885_849_400_2;

const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS_COEF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

/// Distance from a non-positive integer below which `log_gamma` reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Returns the nearest non-positive integer when `z` sits on a pole of Gamma.
pub(crate) fn pole_index(z: Complex64) -> Option<i64> {
    if z.re > POLE_TOLERANCE {
        return None;
    }
    let n = z.re.round();
    if (z - Complex64::new(n, 0.0)).norm() < POLE_TOLERANCE {
        Some(n as i64)
    } else {
        None
    }
}

/// Principal-branch log Gamma(z).
///
/// `exp(re)` is |Gamma(z)| and `im` is arg Gamma(z) (not reduced mod 2*pi).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("log_gamma argument {z} is not finite")));
    }
    if pole_index(z).is_some() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    let value = if z.re >= 0.5 {
        lanczos(z)
    } else {
        reflected(z)
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("log_gamma({z}) is not representable")))
    }
}

/// Gamma(z) itself; overflows to an error instead of infinity.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    let lg = log_gamma(z)?;
    if lg.re > f64::MAX.ln() {
        return Err(Error::Overflow(format!("Gamma({z}) exceeds f64 range")));
    }
    Ok(lg.exp())
}

/// 1/Gamma(z), which is entire: zero at the poles of Gamma.
pub fn reciprocal_gamma(z: Complex64) -> Result<Complex64> {
    if pole_index(z).is_some() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((-log_gamma(z)?).exp())
}

fn lanczos(z: Complex64) -> Complex64 {
    let t = z + LANCZOS_G;
    let mut series = Complex64::new(LANCZOS_C0, 0.0);
    for (j, c) in LANCZOS_COEF.iter().enumerate() {
        series += *c / (z + (j + 1) as f64);
    }
    (z + 0.5) * t.ln() - t + SQRT_TWO_PI.ln() + series.ln() - z.ln()
}

// log Gamma(z) = ln pi - ln sin(pi z) - log Gamma(1 - z), with the 2*pi*i
// correction that keeps the imaginary part on the continuous branch.
fn reflected(z: Complex64) -> Complex64 {
    let upper = lanczos(Complex64::new(1.0, 0.0) - z);
    if z.im == 0.0 {
        let s = (PI * z.re).sin();
        let arg = if s < 0.0 { PI } else { 0.0 };
        return Complex64::new(LN_PI - s.abs().ln() - upper.re, arg - upper.im);
    }
    let branch = (2.0 * PI).copysign(z.im) * (0.5 * z.re + 0.25).floor();
    Complex64::new(LN_PI, branch) - log_sin_pi(z) - upper
}

/// Principal log of sin(pi z) that stays finite for large |Im z|.
fn log_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 100.0 {
        let s = Complex64::new(
            (PI * z.re).sin() * (PI * z.im).cosh(),
            (PI * z.re).cos() * (PI * z.im).sinh(),
        );
        return s.ln();
    }
    if z.im < 0.0 {
        return log_sin_pi(z.conj()).conj();
    }
    // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) / (2i), and e^{2 i pi z} is negligible.
    let i = Complex64::new(0.0, 1.0);
    let raw = -i * PI * z - (2.0 * i).ln() + (Complex64::new(1.0, 0.0) - (2.0 * i * PI * z).exp()).ln();
    Complex64::new(raw.re, wrap_angle(raw.im))
}

/// Reduces an angle into (-pi, pi].
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = theta % two_pi;
    if r <= -PI {
        r += two_pi;
    } else if r > PI {
        r -= two_pi;
    }
    r
}
