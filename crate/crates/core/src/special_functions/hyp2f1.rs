use crate::error::{Error, Result};

/// The degree-`n` polynomial 2F1(-n, b; c; x), summed exactly in `n + 1` terms.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, x: f64) -> Result<f64> {
    if !(b.is_finite() && c.is_finite() && x.is_finite()) {
        return Err(Error::domain("2F1 arguments must be finite"));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("2F1 argument x = {x} outside [0, 1]")));
    }
    for j in 0..n {
        if c + j as f64 == 0.0 {
            return Err(Error::ParameterPole(format!(
                "2F1 lower parameter c = {c} hits zero before the series terminates at degree {n}"
            )));
        }
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (kf - n as f64) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
    }
    crate::error::finite(sum, "2F1")
}
