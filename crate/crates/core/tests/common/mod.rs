//! Independent numerical oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::path::PathBuf;
use std::process::Command;

use nalgebra::{DMatrix, DVector};
use ptdrsc::angular_solutions::AngularSolution;
use ptdrsc::radial_scattering::{radial_wavefunction, RelativisticContext};

/// Context with M = 1, k = 1 and the requested Sommerfeld parameter.
pub fn unit_context(eta: f64) -> RelativisticContext {
    let energy = 2f64.sqrt();
    RelativisticContext::new(1.0, energy, eta / (1.0 + energy)).unwrap()
}

/// Richardson-extrapolated central differences (g', g'') at `x`.
pub fn derivatives<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> (f64, f64, f64) {
    let f0 = f(x);
    let d1 = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let d2 = |h: f64| (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h);
    let first = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
    let second = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
    (f0, first, second)
}

/// Relative residual of `g'' + Q g = 0` with
/// `Q = k^2 + 2 eta k / r - (l^2 - 1/4) / r^2`.
///
/// Normalized by the sum of the term magnitudes plus the local oscillation
/// scale `k^2 sqrt(g^2 + g'^2/k^2)`, which keeps zero crossings of g and
/// turning points of Q from producing 0/0.
pub fn radial_ode_residual(ctx: &RelativisticContext, ell: u32, r: f64) -> f64 {
    let k = ctx.wave_number;
    let h = 0.02 * r.min(1.0 / k);
    let (g, dg, d2g) = derivatives(|x| radial_wavefunction(ctx, ell, x).unwrap(), r, h);
    let l = ell as f64;
    let q = k * k + 2.0 * ctx.sommerfeld * k / r - (l * l - 0.25) / (r * r);
    let scale = d2g.abs() + (q * g).abs() + k * k * (g * g + dg * dg / (k * k)).sqrt();
    (d2g + q * g).abs() / scale
}

/// Phase and amplitude of g at large rho from a least-squares fit of
/// `g = P(1/rho) sin(psi) + Q(1/rho) cos(psi)`, with
/// `psi = rho + eta ln(2 rho) - l pi/2 + pi/4` and P, Q polynomials.
/// For `g ~ 2 sin(psi + delta)` this returns `(delta, 2)`.
pub fn fitted_asymptotic_phase(ctx: &RelativisticContext, ell: u32) -> (f64, f64) {
    let k = ctx.wave_number;
    let eta = ctx.sommerfeld;
    let degree = 6;
    let (rho_lo, rho_hi, samples) = (150.0, 600.0, 900);
    let mut a = DMatrix::<f64>::zeros(samples, 2 * (degree + 1));
    let mut b = DVector::<f64>::zeros(samples);
    for i in 0..samples {
        let rho = rho_lo + (rho_hi - rho_lo) * i as f64 / (samples - 1) as f64;
        let psi = rho + eta * (2.0 * rho).ln() - ell as f64 * FRAC_PI_2 + FRAC_PI_4;
        let (s, c) = psi.sin_cos();
        for j in 0..=degree {
            let w = (rho_lo / rho).powi(j as i32);
            a[(i, 2 * j)] = s * w;
            a[(i, 2 * j + 1)] = c * w;
        }
        b[i] = radial_wavefunction(ctx, ell, rho / k).unwrap();
    }
    let svd = a.svd(true, true);
    let x = svd.solve(&b, 1e-14).unwrap();
    let (p0, q0) = (x[0], x[1]);
    (q0.atan2(p0), p0.hypot(q0))
}

/// Smallest angle between `a` and `b` modulo 2 pi.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let d = (a - b).rem_euclid(two_pi);
    d.min(two_pi - d)
}

/// Relative residual of `-H''/2 + V H - eps H = 0` at `q`, normalized like
/// [`radial_ode_residual`] so that nodes of H stay well conditioned.
pub fn angular_ode_residual(h: &AngularSolution, q: f64) -> f64 {
    let step = 1e-3 * h.q_max();
    let (v, dv, d2) = derivatives(|x| h.eval(x).unwrap(), q, step);
    let pot = h.effective_potential(q);
    let e = h.ode_energy();
    let envelope = e * (v * v + dv * dv / (2.0 * e)).sqrt();
    let scale = (0.5 * d2).abs() + (pot * v).abs() + (e * v).abs() + envelope;
    (-0.5 * d2 + pot * v - e * v).abs() / scale
}

/// Composite Gauss-Legendre inner product on `[0, q_max]`.
pub fn angular_inner(a: &AngularSolution, b: &AngularSolution) -> f64 {
    ptdrsc::quadrature::gauss_legendre_composite(
        |q| a.eval(q).unwrap() * b.eval(q).unwrap(),
        0.0,
        a.q_max(),
        64,
    )
}

/// One CLI invocation with a golden output file.
pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub extension: &'static str,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "phase_shifts",
        args: &["phase-shifts", "--mass", "1", "--energy", "1.25", "--delta", "0.5", "--lmax", "10"],
        extension: "csv",
    },
    GoldenCase {
        name: "phase_shifts_sweep",
        args: &["phase-shifts", "--mass", "1", "--energy", "1.1:0.1:2.0", "--delta", "0.5", "--lmax", "2", "--format", "json"],
        extension: "json",
    },
    GoldenCase {
        name: "wavefunction",
        args: &["wavefunction", "--mass", "1", "--energy", "1.25", "--delta", "0.5", "--ell", "1", "--r", "0.5:0.5:20"],
        extension: "csv",
    },
    GoldenCase {
        name: "cross_section_partial_wave",
        args: &["cross-section", "--mass", "1", "--energy", "1.5", "--delta", "0.2", "--lmax", "400", "--theta", "0.5:0.25:3.0"],
        extension: "csv",
    },
    GoldenCase {
        name: "cross_section_screened",
        args: &["cross-section", "--phi", "1", "--gamma-screen", "2", "--theta", "0.25:0.25:3.0"],
        extension: "csv",
    },
    GoldenCase {
        name: "bound_states",
        args: &["bound-states", "--mass", "1", "--delta", "1", "--nmax", "3", "--lmax", "2"],
        extension: "csv",
    },
    GoldenCase {
        name: "thermo",
        args: &["thermo", "--beta", "0.1:0.1:2.0", "--xi", "3", "--tau", "1.5"],
        extension: "csv",
    },
    GoldenCase {
        name: "angular",
        args: &["angular", "--chi", "2", "--lam", "2.5", "--nmax", "3", "--q", "0:0.125:1.5", "--format", "json"],
        extension: "json",
    },
    GoldenCase {
        name: "screened_fit",
        args: &["screened-fit", "--sigma-tot", "1.5:0.5:3", "--sigma-tr", "1.2"],
        extension: "csv",
    },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_path(case: &GoldenCase) -> PathBuf {
    golden_dir().join(format!("{}.{}", case.name, case.extension))
}

/// Runs the binary and returns (status, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, Vec<u8>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ptdrsc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}
