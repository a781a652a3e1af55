// The I-adic order nu_I and the Rees limit estimate for the cusp.

use artin_lab::order::{nu, nu_bar_estimate};
use artin_lab::parse::{parse_list, parse_poly};
use artin_lab::{Field, IdealSpec, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 12)?;
    let i = IdealSpec::new(&ring, parse_list("T1^2 - T2^3", &ring)?)?;
    for s in ["T1", "T2", "T1^2", "T1*T2", "T1^2 - T2^3"] {
        println!("nu({s}) = {}", nu(&i, &parse_poly(s, &ring)?)?);
    }
    let est = nu_bar_estimate(&i, &parse_poly("T1", &ring)?, 4)?;
    for s in &est.samples {
        println!("  nu(T1^{}) = {}", s.n, s.nu);
    }
    println!("nubar(T1) >= {}", est.estimate);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
