//! Dawson's integral F(x) = e^{-x^2} int_0^x e^{t^2} dt and the imaginary
//! error function Erfi(x) = (2/sqrt(pi)) int_0^x e^{t^2} dt.

use crate::error::{Error, Result};

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const MACLAURIN_LIMIT: f64 = 0.2;
const ASYMPTOTIC_LIMIT: f64 = 12.0;
const ERFI_DIRECT_LIMIT: f64 = 6.0;

/// Largest x for which e^{x^2} is finite.
pub fn erfi_overflow_threshold() -> f64 {
    f64::MAX.ln().sqrt()
}

pub fn dawson(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("dawson argument must be finite"));
    }
    let ax = x.abs();
    let v = if ax < MACLAURIN_LIMIT {
        dawson_maclaurin(ax)
    } else if ax < ASYMPTOTIC_LIMIT {
        scaled_positive_series(ax)
    } else {
        dawson_asymptotic(ax)
    };
    Ok(v.copysign(x))
}

/// x - F(x), accurate where F(x) ~ x (small |x|).
pub fn dawson_deficit(x: f64) -> Result<f64> {
    let ax = x.abs();
    if ax >= MACLAURIN_LIMIT {
        return Ok(x - dawson(x)?);
    }
    // x - F(x) = sum_{n>=1} (-1)^{n+1} 2^n x^{2n+1} / (2n+1)!!
    let x2 = ax * ax;
    let mut term = ax;
    let mut sum = 0.0;
    for n in 1..40 {
        term *= 2.0 * x2 / (2 * n + 1) as f64;
        let signed = if n % 2 == 1 { term } else { -term };
        sum += signed;
        if term < 1e-18 * sum.abs() {
            break;
        }
    }
    Ok(sum.copysign(x))
}

pub fn erfi(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("erfi argument must be finite"));
    }
    let ax = x.abs();
    if ax > erfi_overflow_threshold() {
        return Err(Error::Overflow(format!(
            "Erfi({x}) exceeds f64 range (e^(x^2) overflows)"
        )));
    }
    let v = if ax < ERFI_DIRECT_LIMIT {
        TWO_OVER_SQRT_PI * positive_series_unscaled(ax)
    } else {
        TWO_OVER_SQRT_PI * (ax * ax).exp() * dawson(ax)?
    };
    if !v.is_finite() {
        return Err(Error::Overflow(format!("Erfi({x}) exceeds f64 range")));
    }
    Ok(v.copysign(x))
}

/// ln Erfi(x) for x > 0, valid far past the overflow of Erfi itself.
pub fn ln_erfi(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("ln Erfi({x}) needs a finite x > 0")));
    }
    if x < ERFI_DIRECT_LIMIT {
        return Ok(erfi(x)?.ln());
    }
    Ok(TWO_OVER_SQRT_PI.ln() + x * x + dawson(x)?.ln())
}

// F(x) = sum (-1)^n 2^n x^{2n+1} / (2n+1)!!
fn dawson_maclaurin(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for n in 1..40 {
        term *= -2.0 * x2 / (2 * n + 1) as f64;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

// e^{-x^2} sum_n x^{2n+1} / (n! (2n+1)); every term positive.
fn scaled_positive_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut t = x * (-x2).exp();
    let mut sum = t;
    let mut n = 0usize;
    loop {
        n += 1;
        t *= x2 / n as f64;
        let term = t / (2 * n + 1) as f64;
        sum += term;
        if (n as f64) > x2 && term <= 1e-18 * sum {
            break;
        }
    }
    sum
}

fn positive_series_unscaled(x: f64) -> f64 {
    let x2 = x * x;
    let mut t = x;
    let mut sum = t;
    let mut n = 0usize;
    loop {
        n += 1;
        t *= x2 / n as f64;
        let term = t / (2 * n + 1) as f64;
        sum += term;
        if (n as f64) > x2 && term <= 1e-18 * sum {
            break;
        }
    }
    sum
}

// F(x) ~ 1/(2x) sum_n (2n-1)!! / (2x^2)^n, truncated at its smallest term.
fn dawson_asymptotic(x: f64) -> f64 {
    let w = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..400 {
        let next = term * (2 * n - 1) as f64 * w;
        if next > term || next < 1e-18 * sum {
            break;
        }
        sum += next;
        term = next;
    }
    sum / (2.0 * x)
}
