//! Kummer's confluent hypergeometric function 1F1(a; b; z) for complex
//! parameters and argument.
//!
//! Two branches:
//!
//! * the Maclaurin series, summed in double-double so the cancellation along
//!   the imaginary axis (terms of size ~e^|z| summing to O(1)) costs nothing
//!   at f64 output precision;
//! * the large-|z| expansion
//!   `F ~ G(b)/G(a) e^z z^(a-b) S2 + G(b)/G(b-a) e^(+-i pi a) z^(-a) S1`,
//!   upper sign for `-pi/2 < arg z < 3pi/2`, lower sign for
//!   `-3pi/2 < arg z < -pi/2`. The ray `arg z = -pi/2` itself takes the lower
//!   sign; that is the ray `z = -2ikr` used by the radial continuum solution.
//!
//! Each branch carries an error estimate. `hyp1f1` uses the series up to
//! `|z| = SWITCH_RADIUS` and the expansion beyond, falling back to the other
//! branch when the preferred one misses the accuracy target.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::double_double::{ComplexDd, Dd};
use super::gamma::{log_gamma, pole_index};
use crate::error::{Error, Result};

/// |z| above which the asymptotic expansion is tried first.
pub const SWITCH_RADIUS: f64 = 30.0;
/// Relative accuracy a branch must certify for its value to be returned.
pub const ACCURACY: f64 = 1e-10;

const MAX_SERIES_TERMS: usize = 100_000;
const MAX_ASYMPTOTIC_TERMS: usize = 2_000;
// Unit roundoff of double-double arithmetic, padded for accumulated rounding.
const DD_ROUNDOFF: f64 = 1e-30;

/// A branch value together with its estimated relative error.
#[derive(Debug, Clone, Copy)]
pub struct BranchEvaluation {
    pub value: Complex64,
    pub relative_error: f64,
}

/// 1F1(a; b; z) to relative accuracy [`ACCURACY`].
pub fn hyp1f1(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    check_arguments(a, b, z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let series_first = z.norm() <= SWITCH_RADIUS;
    let first = if series_first {
        series_branch(a, b, z)
    } else {
        asymptotic_branch(a, b, z)
    };
    if let Ok(eval) = &first {
        if eval.relative_error <= 0.1 * ACCURACY {
            return Ok(eval.value);
        }
    }
    let second = if series_first {
        asymptotic_branch(a, b, z)
    } else {
        series_branch(a, b, z)
    };
    let best = match (first, second) {
        (Ok(x), Ok(y)) => Ok(if x.relative_error <= y.relative_error { x } else { y }),
        (Ok(x), Err(_)) => Ok(x),
        (Err(_), Ok(y)) => Ok(y),
        (Err(e), Err(_)) => Err(e),
    }?;
    if best.relative_error <= ACCURACY {
        Ok(best.value)
    } else {
        Err(Error::NoConvergence(format!(
            "1F1({a}; {b}; {z}): best branch error estimate {:.3e}",
            best.relative_error
        )))
    }
}

/// Series branch alone; errors if it cannot certify [`ACCURACY`].
pub fn hyp1f1_series(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    check_arguments(a, b, z)?;
    certify(series_branch(a, b, z)?, "series", a, b, z)
}

/// Asymptotic branch alone; errors if it cannot certify [`ACCURACY`].
pub fn hyp1f1_asymptotic(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    check_arguments(a, b, z)?;
    certify(asymptotic_branch(a, b, z)?, "asymptotic expansion", a, b, z)
}

fn certify(
    eval: BranchEvaluation,
    branch: &str,
    a: Complex64,
    b: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    if eval.relative_error <= ACCURACY {
        Ok(eval.value)
    } else {
        Err(Error::NoConvergence(format!(
            "1F1({a}; {b}; {z}) {branch}: error estimate {:.3e}",
            eval.relative_error
        )))
    }
}

fn check_arguments(a: Complex64, b: Complex64, z: Complex64) -> Result<()> {
    let all = [a.re, a.im, b.re, b.im, z.re, z.im];
    if all.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("1F1 arguments must be finite"));
    }
    if let Some(n) = pole_index(b) {
        return Err(Error::ParameterPole(format!(
            "1F1 lower parameter b = {b} is the non-positive integer {n}"
        )));
    }
    Ok(())
}

/// Maclaurin series with error estimate. Kummer's transformation
/// `F(a;b;z) = e^z F(b-a;b;-z)` is applied for Re z < 0.
pub fn series_branch(a: Complex64, b: Complex64, z: Complex64) -> Result<BranchEvaluation> {
    if z.re < 0.0 {
        let inner = series_sum(b - a, b, -z)?;
        let value = z.exp() * inner.value;
        return Ok(BranchEvaluation {
            value,
            relative_error: inner.relative_error + 4.0 * f64::EPSILON * (1.0 + z.norm()),
        });
    }
    series_sum(a, b, z)
}

fn series_sum(a: Complex64, b: Complex64, z: Complex64) -> Result<BranchEvaluation> {
    let z_dd = ComplexDd::from(z);
    let b_is_real = b.im == 0.0;
    let one = Complex64::new(1.0, 0.0);
    let mut term = ComplexDd::from(one);
    let mut sum = term;
    let mut abs_sum = 1.0_f64;
    let mut small_run = 0;
    let mut converged = false;

    for n in 0..MAX_SERIES_TERMS {
        let nf = Dd::new(n as f64);
        let a_n = ComplexDd::new(Dd::new(a.re) + nf, Dd::new(a.im));
        term = term * a_n * z_dd;
        let n1 = Dd::new((n + 1) as f64);
        if b_is_real {
            term = term.div_real((Dd::new(b.re) + nf) * n1);
        } else {
            let br = Dd::new(b.re) + nf;
            let bi = Dd::new(b.im);
            let denom = (br * br + bi * bi) * n1;
            term = (term * ComplexDd::new(br, -bi)).div_real(denom);
        }
        sum = sum + term;
        let t = term.l1_norm();
        abs_sum += t;
        if !abs_sum.is_finite() {
            return Err(Error::Overflow(format!("1F1 series terms overflow for z = {z}")));
        }
        if t <= 1e-16 * sum.l1_norm() {
            small_run += 1;
            if small_run >= 3 {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "1F1 series did not converge in {MAX_SERIES_TERMS} terms"
        )));
    }
    let value = sum.to_c64();
    let magnitude = value.norm();
    let relative_error = if magnitude > 0.0 {
        (DD_ROUNDOFF * abs_sum) / magnitude + f64::EPSILON
    } else if abs_sum == 1.0 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(BranchEvaluation { value, relative_error })
}

/// Large-|z| expansion with optimal truncation; the error estimate is the
/// first omitted term of each series plus the Stokes ambiguity of whichever
/// exponential is subdominant: the spread between the two sign choices of the
/// `z^-a` term for `|arg z| < pi/2`, and the whole `e^z` term for
/// `|arg z| > pi/2`.
pub fn asymptotic_branch(a: Complex64, b: Complex64, z: Complex64) -> Result<BranchEvaluation> {
    let ln_z = z.ln();
    let arg = ln_z.im;
    let upper_sign = arg > -FRAC_PI_2;
    let i_pi_a = Complex64::new(0.0, PI) * a;
    let ln_gamma_b = log_gamma(b)?;

    // z^(-a) term
    let (recessive, recessive_err, spread) = if pole_index(b - a).is_some() {
        (Complex64::new(0.0, 0.0), 0.0, 0.0)
    } else {
        let sign_phase = if upper_sign { i_pi_a } else { -i_pi_a };
        let log_pref = ln_gamma_b - log_gamma(b - a)? - a * ln_z;
        let pref = exp_checked(log_pref + sign_phase)?;
        let (s, err) = asymptotic_series(a, a - b + 1.0, -z);
        let value = pref * s;
        let spread = if arg.abs() < FRAC_PI_2 {
            let other = exp_checked(log_pref - sign_phase)? * s;
            let weight = if arg > 0.0 { 0.5 } else { 1.0 };
            weight * (value - other).norm()
        } else {
            0.0
        };
        (value, pref.norm() * err, spread)
    };

    // e^z z^(a-b) term; for |arg z| > pi/2 it is the subdominant one and its
    // Stokes multiplier is uncertain by about its own size (twice it, to be safe)
    let (dominant, dominant_err, dominant_spread) = if pole_index(a).is_some() {
        (Complex64::new(0.0, 0.0), 0.0, 0.0)
    } else {
        let log_pref = ln_gamma_b - log_gamma(a)? + z + (a - b) * ln_z;
        let pref = exp_checked(log_pref)?;
        let (s, err) = asymptotic_series(b - a, 1.0 - a, z);
        let value = pref * s;
        let spread = if arg.abs() > FRAC_PI_2 { 2.0 * value.norm() } else { 0.0 };
        (value, pref.norm() * err, spread)
    };

    let value = recessive + dominant;
    let magnitude = value.norm();
    let abs_error = recessive_err + dominant_err + spread + dominant_spread;
    let relative_error = if magnitude > 0.0 {
        abs_error / magnitude + 8.0 * f64::EPSILON * (1.0 + ln_z.norm() * (a.norm() + b.norm()))
    } else {
        f64::INFINITY
    };
    Ok(BranchEvaluation { value, relative_error })
}

fn exp_checked(w: Complex64) -> Result<Complex64> {
    if w.re > f64::MAX.ln() {
        return Err(Error::Overflow(format!("exp({w}) exceeds f64 range")));
    }
    Ok(w.exp())
}

/// `sum_s (p)_s (q)_s / s! * w^-s` truncated at its smallest term. Returns
/// the partial sum and the magnitude of the first omitted term.
fn asymptotic_series(p: Complex64, q: Complex64, w: Complex64) -> (Complex64, f64) {
    let inv_w = 1.0 / w;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = 1.0_f64;
    for s in 0..MAX_ASYMPTOTIC_TERMS {
        let sf = s as f64;
        let next = term * (p + sf) * (q + sf) * inv_w / (sf + 1.0);
        let size = next.norm();
        if size == 0.0 {
            return (sum, 0.0);
        }
        if size > last {
            return (sum, last.min(size));
        }
        if size <= 1e-17 * sum.norm() {
            return (sum + next, size * 1e-1);
        }
        sum += next;
        term = next;
        last = size;
    }
    (sum, last)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(x: Complex64, y: Complex64, tol: f64) -> bool {
        (x - y).norm() <= tol * y.norm().max(1e-300)
    }

    #[test]
    fn zero_argument_is_one() {
        assert_eq!(hyp1f1(c(0.3, -2.0), c(4.0, 0.0), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn kummer_identity_exp() {
        for z in [c(0.0, -2.0), c(1.5, 0.3), c(-7.0, 2.0), c(0.0, 45.0), c(-40.0, -10.0)] {
            let v = hyp1f1(c(1.0, 0.0), c(1.0, 0.0), z).unwrap();
            assert!(close(v, z.exp(), 1e-12), "z={z}: {v} vs {}", z.exp());
        }
        let v = hyp1f1(c(1.0, 0.0), c(1.0, 0.0), c(0.0, -2.0)).unwrap();
        assert!(close(v, c(2f64.cos(), -(2f64.sin())), 1e-14));
    }

    #[test]
    fn forbidden_lower_parameter() {
        for b in [0.0, -1.0, -4.0] {
            assert!(matches!(
                hyp1f1(c(0.5, 0.0), c(b, 0.0), c(1.0, 0.0)),
                Err(Error::ParameterPole(_))
            ));
        }
    }

    #[test]
    fn terminating_polynomial() {
        // 1F1(-2; 1; z) = 1 - 2z + z^2/2 (Laguerre L_2)
        for z in [c(0.7, 0.0), c(3.0, -1.0), c(50.0, 2.0)] {
            let expect = 1.0 - 2.0 * z + z * z / 2.0;
            let v = hyp1f1(c(-2.0, 0.0), c(1.0, 0.0), z).unwrap();
            assert!(close(v, expect, 1e-12), "{v} vs {expect}");
        }
    }

    #[test]
    fn lower_sign_on_negative_imaginary_ray() {
        // 1F1(a; 2a_re; -2i rho) e^{i rho} is real for a = l+1/2 - i eta.
        let a = c(2.5, -1.3);
        let b = c(5.0, 0.0);
        for rho in [20.0, 40.0, 90.0] {
            let v = asymptotic_branch(a, b, c(0.0, -2.0 * rho)).unwrap();
            let g = v.value * c(0.0, rho).exp();
            assert!(g.im.abs() <= 1e-9 * g.norm(), "rho={rho}: {g}");
        }
    }
}
