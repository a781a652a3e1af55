// Corrects an approximate solution of T1*X1 + T2^2*X2 = 0 to an exact one
// nearby.

use artin_lab::artin::solve_linear_regular;
use artin_lab::parse::parse_list;
use artin_lab::{Field, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 8)?;
    let f = parse_list("T1, T2^2", &ring)?;
    let x = parse_list("T2^2, -T1 + T1^5", &ring)?;
    let cert = solve_linear_regular(&f, &x, 3, false)?;
    println!(
        "input     {:?}  residual order {}",
        cert.input, cert.input_residual_order
    );
    println!("output    {:?}  residual order {}", cert.output, cert.residual_order);
    println!("proximity {:?}  required {:?}", cert.proximity, cert.required);
    println!("holds: {}", cert.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
