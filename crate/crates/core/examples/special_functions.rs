//! Complex Gamma, Kummer's 1F1 on both sides of the branch switch, and the
//! imaginary error function.

use num_complex::Complex64;
use ptdrsc::special_functions::{dawson, erfi, gamma, hyp1f1, log_gamma, SWITCH_RADIUS};

fn main() -> ptdrsc::Result<()> {
    let z = Complex64::new(0.5, 2.0);
    println!("Gamma({z}) = {}", gamma(z)?);
    println!("ln Gamma(0.5 - 150i) = {}", log_gamma(Complex64::new(0.5, -150.0))?);

    let (a, b) = (Complex64::new(1.5, -2.0), Complex64::new(3.0, 0.0));
    for r in [5.0, SWITCH_RADIUS, 80.0] {
        let z = Complex64::new(0.0, -r);
        println!("1F1({a}; {b}; {z}) = {}", hyp1f1(a, b, z)?);
    }

    for x in [0.5, 3.0, 20.0] {
        println!("erfi({x}) = {:e}, dawson({x}) = {}", erfi(x)?, dawson(x)?);
    }
    Ok(())
}
