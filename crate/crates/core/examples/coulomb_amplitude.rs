//! Smoothed partial-wave sum for the Coulomb amplitude against the closed
//! form cross section.

use ptdrsc::radial_scattering::{
    coulomb_cross_section, coulomb_phases, make_context, scattering_amplitude, Smoothing,
};

fn main() -> ptdrsc::Result<()> {
    let ctx = make_context(1.0, 1.5, 0.2)?;
    let phases = coulomb_phases(ctx.sommerfeld, 1000)?;
    for theta in [0.5, 1.0, 2.0, 3.0] {
        let f = scattering_amplitude(&phases, ctx.wave_number, theta, Smoothing::Abel)?;
        let exact = coulomb_cross_section(ctx.sommerfeld, ctx.wave_number, theta)?;
        println!("theta = {theta}: |f|^2 = {:.6e}, closed form = {exact:.6e}", f.norm_sqr());
    }
    Ok(())
}
