//! Regular radial solution on a grid, with its large-r phase for comparison.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use ptdrsc::radial_scattering::{make_context, phase_shift, radial_wavefunction};

fn main() -> ptdrsc::Result<()> {
    let ctx = make_context(1.0, 1.25, 0.5)?;
    let ell = 2;
    let delta = phase_shift(&ctx, ell)?;
    println!("{:>8} {:>14} {:>14} {:>10}", "r", "g(r)", "2 sin(psi)", "diff");
    for i in 0..9 {
        let r = 5.0 * 2f64.powi(i);
        let rho = ctx.wave_number * r;
        let psi = rho + ctx.sommerfeld * (2.0 * rho).ln() - ell as f64 * FRAC_PI_2 + FRAC_PI_4 + delta;
        let (g, leading) = (radial_wavefunction(&ctx, ell, r)?, 2.0 * psi.sin());
        println!("{r:8.1} {g:14.10} {leading:14.10} {:10.2e}", g - leading);
    }
    Ok(())
}
