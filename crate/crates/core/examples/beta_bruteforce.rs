// Brute-force lower bounds for Artin functions over F_2.

use artin_lab::artin::{beta_lower_bound_bruteforce, PolySystem};
use artin_lab::{Field, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Prime(2), 5)?;
    let sys = PolySystem::parse(&ring, &["X1".into()], &["T1*X1".into()])?;
    for i in 0..=3 {
        let r = beta_lower_bound_bruteforce(&sys, i, 1 << 22)?;
        println!("T1*X1:  i = {i}  beta >= {}  ({} nodes)", r.beta, r.nodes);
    }

    let ring = RingSpec::standard(3, Field::Prime(2), 2)?;
    let unknowns: Vec<String> = ["X1", "X2", "X3"].map(String::from).to_vec();
    let sys = PolySystem::parse(&ring, &unknowns, &["X1*X2 - (T1*T2 - T3^2)*X3".into()])?;
    let r = beta_lower_bound_bruteforce(&sys, 1, 1 << 22)?;
    println!(
        "X1*X2 - (T1*T2 - T3^2)*X3:  i = 1  beta >= {}  witness {:?}",
        r.beta, r.witness
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
