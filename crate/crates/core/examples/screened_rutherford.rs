//! Screened Rutherford integrals, angular probabilities and the inverse fit.

use ptdrsc::cross_sections::{
    fit_screened, forward_probability, mean_wide_angle_collisions, scatter_probability,
    sigma_total, ScreenedRutherford,
};

fn main() -> ptdrsc::Result<()> {
    let model = ScreenedRutherford::new(1.0, 0.1)?;
    let tot = model.sigma_total_analytic();
    let tr = model.sigma_transport_analytic();
    println!("sigma_tot = {tot:.10} (quadrature {:.10})", sigma_total(&model)?);
    println!("sigma_tr = {tr:.10}, ratio = {:.6}", model.transport_ratio_analytic());
    println!("forward fraction = {:.6}", forward_probability(&model)?);
    for theta in [0.1, 0.5, 1.0, 2.0] {
        println!("P(theta < {theta}) = {:.6}", scatter_probability(&model, theta)?);
    }
    println!("collisions over R = 10 at N = 0.3: {:.4}", mean_wide_angle_collisions(0.3, 10.0, tr));

    let fit = fit_screened(tot, tr)?;
    println!("fit: phi = {:.12}, gamma = {:.12}", fit.phi, fit.gamma_screen);
    Ok(())
}
