//! Coulomb-type phase shifts for a relativistic scattering state.

use ptdrsc::radial_scattering::{make_context, phase_shift, short_range_phase_shift, PartialWave};

fn main() -> ptdrsc::Result<()> {
    let ctx = make_context(1.0, 1.25, 0.5)?;
    println!("k = {}, eta = {}", ctx.wave_number, ctx.sommerfeld);
    for ell in 0..=5 {
        let wave = PartialWave::new(&ctx, ell, ell)?;
        println!(
            "l = {ell}: delta = {:+.12}  shifted = {:+.12}  A = {:.6e}",
            phase_shift(&ctx, ell)?,
            short_range_phase_shift(&ctx, ell, ell + 1)?,
            wave.norm_constant,
        );
    }
    Ok(())
}
