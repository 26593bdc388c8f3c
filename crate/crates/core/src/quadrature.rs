//! Numerical integration: adaptive Gauss-Kronrod (7/15) with a global error
//! queue, plus fixed composite Gauss-Legendre used where the integrand is
//! smooth and a fixed node set is wanted.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Maximum number of subintervals before giving up.
pub const MAX_INTERVALS: usize = 4_000;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        if !(f1.is_finite() && f2.is_finite()) {
            return Err(Error::NonIntegrable(format!(
                "integrand not finite near x = {}",
                center - dx
            )));
        }
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !fc.is_finite() {
        return Err(Error::NonIntegrable(format!("integrand not finite at x = {center}")));
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok(Panel { a, b, value, error })
}

/// Adaptive integral of `f` over `[a, b]` to `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integration limits must be finite"));
    }
    let first = kronrod15(&f, a, b)?;
    let mut total = first.value;
    let mut total_error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    while total_error > abs_tol.max(rel_tol * total.abs()) {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::NonIntegrable(format!(
                "no convergence on [{a}, {b}] after {MAX_INTERVALS} subintervals (error estimate {total_error:e})"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a).abs() <= 64.0 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::NonIntegrable(format!(
                "subinterval around x = {mid} shrank to machine precision"
            )));
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // refresh the running sums to keep cancellation from accumulating
        if heap.len() % 64 == 0 {
            total = heap.iter().map(|p| p.value).sum();
            total_error = heap.iter().map(|p| p.error).sum();
        }
    }
    let total: f64 = heap.iter().map(|p| p.value).sum();
    crate::error::finite(total, "integral")
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let (p_n, p_nm1) = if n == 0 { (1.0, 0.0) } else if n == 1 { (x, 1.0) } else { (p1, p0) };
            dp = n as f64 * (x * p_n - p_nm1) / (x * x - 1.0);
            let dx = p_n / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

/// Composite 20-point Gauss-Legendre over `panels` equal panels.
pub fn gauss_legendre_composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre_nodes(20);
    let width = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let center = lo + 0.5 * width;
        for &(x, w) in &rule {
            sum += w * f(center + 0.5 * width * x);
        }
    }
    sum * 0.5 * width
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_weights_sum_to_two() {
        let s: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let g: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((s - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn exact_for_polynomials() {
        for deg in 0..=20 {
            let p = kronrod15(&|x: f64| x.powi(deg), 0.0, 1.0).unwrap();
            assert!((p.value - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14, "deg {deg}");
        }
        // the embedded Gauss rule is exact to degree 13
        let p = kronrod15(&|x: f64| x.powi(13), 0.0, 1.0).unwrap();
        assert!(p.error < 1e-14);
    }

    #[test]
    fn adaptive_handles_peaks() {
        let v = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-12, 0.0).unwrap();
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((v - exact).abs() < 1e-10 * exact);
    }

    #[test]
    fn divergence_is_detected() {
        assert!(matches!(
            integrate(|x| 1.0 / x, 0.0, 1.0, 1e-9, 0.0),
            Err(Error::NonIntegrable(_))
        ));
    }

    #[test]
    fn gauss_legendre_rule() {
        let rule = gauss_legendre_nodes(20);
        let w: f64 = rule.iter().map(|p| p.1).sum();
        assert!((w - 2.0).abs() < 1e-14);
        let v = gauss_legendre_composite(|x| x.sin(), 0.0, std::f64::consts::PI, 4);
        assert!((v - 2.0).abs() < 1e-14);
    }
}
