//! Bound levels from the closed form, checked by bisection, with the
//! nonrelativistic limit alongside.

use ptdrsc::bound_states::{bound_energy_bisection, BoundLevel};

fn main() -> ptdrsc::Result<()> {
    let (mass, delta) = (1.0, 0.25);
    println!("{:>3} {:>3} {:>18} {:>18} {:>14}", "n", "l", "E", "E - M", "nonrel");
    for n_r in 0..3 {
        for ell in 0..3 {
            let level = BoundLevel::new(mass, delta, n_r, ell)?;
            let check = bound_energy_bisection(mass, delta, n_r, ell)?;
            assert!((check - level.energy).abs() < 1e-14);
            println!(
                "{n_r:3} {ell:3} {:18.15} {:18.12e} {:14.8e}",
                level.energy,
                level.energy - mass,
                level.nonrel_energy
            );
        }
    }
    Ok(())
}
