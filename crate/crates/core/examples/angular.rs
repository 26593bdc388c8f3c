//! Angular eigenfunctions of both families and their eigenvalues.

use ptdrsc::angular_solutions::{azimuthal_m_squared, map_azimuthal, AngularSolution};

fn main() -> ptdrsc::Result<()> {
    for n_r in 0..3 {
        let h = AngularSolution::polar(2.0, 2.5, n_r, 1.0)?;
        let samples: Vec<String> = (1..=4)
            .map(|i| h.eval(h.q_max() * i as f64 / 5.0).map(|v| format!("{v:+.5}")))
            .collect::<ptdrsc::Result<_>>()?;
        println!("polar n = {n_r}: eps = {:.4}, H = [{}]", h.eigenvalue, samples.join(", "));
    }
    let d = AngularSolution::degenerate(2.0, 1, 1.0)?;
    println!("degenerate n = 1: eps = {:.4}, H(0) = {:.6}", d.eigenvalue, d.eval(0.0)?);

    let (chi, lam) = map_azimuthal(1.5, 2.0, 2, 1.8)?;
    println!("azimuthal chi = {chi:.4}, lam = {lam:.4}, m^2 = {:.4}", azimuthal_m_squared(chi, lam, 0, 2));
    Ok(())
}
