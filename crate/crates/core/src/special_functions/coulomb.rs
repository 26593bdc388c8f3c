//! Regular Coulomb wave function F_lambda(eta, rho) by Steed's method:
//! F'/F from the ratio continued fraction, (G' + iF')/(G + iF) from the
//! Thompson-Barnett continued fraction, and the Wronskian
//! `F' G - F G' = 1` for the magnitude.
//!
//! Both fractions converge fast once rho is past the turning point, which is
//! exactly where the Maclaurin series of 1F1 runs out of precision.

use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-16;
const MAX_ITERATIONS: usize = 200_000;

/// Regular Coulomb function for real order `lambda > -1`, real `eta` and
/// `rho > 0`.
pub fn coulomb_f(lambda: f64, eta: f64, rho: f64) -> Result<f64> {
    if !(lambda > -1.0 && lambda.is_finite() && eta.is_finite()) {
        return Err(Error::domain(format!("Coulomb order {lambda} must exceed -1")));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::domain(format!("Coulomb argument must be positive, got {rho}")));
    }
    let (f, sign) = log_derivative(lambda, eta, rho)?;
    let (p, q) = outgoing_log_derivative(lambda, eta, rho)?;
    let gamma = (f - p) / q;
    let w = 1.0 / (q * (1.0 + gamma * gamma)).sqrt();
    Ok(sign * w)
}

// F'_lambda / F_lambda and the sign of F_lambda, by the downward ratio
// recurrence f_L = S_{L+1} - R_{L+1}^2 / (S_{L+1} + f_{L+1}) started where F
// has no nodes left (F_L > 0 for L >> rho). Two starting depths must agree.
fn log_derivative(lambda: f64, eta: f64, rho: f64) -> Result<(f64, f64)> {
    let run = |depth: usize| {
        let s = |l: f64| l / rho + eta / l;
        let r2 = |l: f64| 1.0 + eta * eta / (l * l);
        let top = lambda + depth as f64;
        let mut f = s(top + 1.0);
        let mut sign = 1.0;
        let mut l = top - 1.0;
        while l >= lambda - 1e-9 {
            let denom = s(l + 1.0) + f;
            if denom < 0.0 {
                sign = -sign;
            }
            f = s(l + 1.0) - r2(l + 1.0) / denom;
            l -= 1.0;
        }
        (f, sign)
    };
    let mut depth = 40 + (2.0 * rho + eta.abs()) as usize;
    let mut previous = run(depth);
    for _ in 0..12 {
        depth += depth / 2;
        let next = run(depth);
        if (next.0 - previous.0).abs() <= 4.0 * f64::EPSILON * next.0.abs().max(1.0 / rho)
            && next.1 == previous.1
        {
            return Ok(next);
        }
        previous = next;
    }
    Err(Error::NoConvergence(format!(
        "Coulomb ratio fraction (lambda = {lambda}, eta = {eta}, rho = {rho})"
    )))
}

// p + iq = (G' + iF') / (G + iF), summed with Steed's algorithm.
fn outgoing_log_derivative(lambda: f64, eta: f64, rho: f64) -> Result<(f64, f64)> {
    let xi = 1.0 / rho;
    let wi = 2.0 * eta;
    let mut pk = 0.0;
    let mut p = 0.0;
    let mut q = 1.0 - eta * xi;
    let mut ar = -(eta * eta + lambda * (lambda + 1.0));
    let mut ai = eta;
    let br = 2.0 * (rho - eta);
    let mut bi = 2.0;
    let norm = br * br + bi * bi;
    let mut dr = br / norm;
    let mut di = -bi / norm;
    let mut dp = -xi * (ar * di + ai * dr);
    let mut dq = xi * (ar * dr - ai * di);
    for _ in 0..MAX_ITERATIONS {
        p += dp;
        q += dq;
        if dp.abs() + dq.abs() < (p.abs() + q.abs()) * TOLERANCE {
            if !(q > 0.0) {
                break;
            }
            return Ok((p, q));
        }
        pk += 2.0;
        ar += pk;
        ai += wi;
        bi += 2.0;
        let d = ar * dr - ai * di + br;
        let dim = ai * dr + ar * di + bi;
        let c = 1.0 / (d * d + dim * dim);
        dr = c * d;
        di = -c * dim;
        let a = br * dr - bi * di - 1.0;
        let b = bi * dr + br * di;
        let next = dp * a - dq * b;
        dq = dp * b + dq * a;
        dp = next;
    }
    Err(Error::NoConvergence(format!(
        "Coulomb outgoing fraction (lambda = {lambda}, eta = {eta}, rho = {rho})"
    )))
}
