//! Thermodynamic functions across temperature, and the discrete level sum
//! that the continuum partition function approximates.

use ptdrsc::thermodynamics::{partition_function, partition_sum, ThermoQuantities, ThermoState};

fn main() -> ptdrsc::Result<()> {
    let base = ThermoState::new(1.0, 3.0, 1.5, 1.0)?;
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "beta", "ln Z", "U", "C", "S");
    for beta in [0.01, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let q = ThermoQuantities::evaluate(&base.with_beta(beta)?)?;
        println!(
            "{beta:6.2} {:12.6} {:12.6} {:12.6} {:12.6}",
            q.ln_z, q.mean_energy, q.specific_heat, q.entropy
        );
    }

    let dense = ThermoState::new(4e-6, 1000.0, 1.0, 1.0)?;
    let sum = partition_sum(&dense, 0, 1000)?;
    println!("level sum {sum:.6e} vs continuum {:.6e}", partition_function(&dense)?);
    Ok(())
}
