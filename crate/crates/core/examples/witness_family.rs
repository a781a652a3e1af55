// The family x1 x2 - x3 x4 = T3^(i^2) and exhaustive irreducibility checks.

use artin_lab::witness::{irreducibility_exhaustive, monomial_witness_family};
use artin_lab::{Field, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(3, Field::Rationals, 16)?;
    for i in 1..=4 {
        let w = monomial_witness_family(i, &ring)?;
        println!("i = {i}: x4 = {}", w.x4);
        println!("       x1 x2 - x3 x4 = {} (order {})", w.residual, w.residual_order);
    }
    for (i, p) in [(2, 2), (2, 3)] {
        let c = irreducibility_exhaustive(i, p, 1 << 24)?;
        println!(
            "T1*T2 - T3^{i} over F_{p}: {} factorization(s) in {} pairs",
            c.factorizations_found, c.search_space_size
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
